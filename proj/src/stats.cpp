#include "stats.hpp"

#include <algorithm>

namespace ribbonkit {

CompositionStats compute_stats(const Composition& c) {
    if (c.is_all_ones())
        throw DomainError("composition statistics are undefined for all-ones compositions");

    CompositionStats s;
    s.delta = (c.parts().front() == 1 ? 1 : 0) + (c.parts().back() == 1 ? 1 : 0);

    Int run = 0;
    for (Int part : c.parts()) {
        if (part == 1) {
            ++s.k;
            ++run;
        } else {
            s.p.push_back(run);
            s.z.push_back(part);
            run = 0;
        }
    }
    s.p.push_back(run);

    s.p_prime = s.p;
    s.p_prime.front() -= 1;
    s.p_prime.back() -= 1;

    auto tally = [](const std::vector<Int>& values) {
        Int max_value = *std::max_element(values.begin(), values.end());
        std::vector<Int> counts;
        if (max_value >= 0) {
            counts.assign(static_cast<std::size_t>(max_value) + 1, 0);
            for (Int v : values) {
                if (v >= 0) ++counts[static_cast<std::size_t>(v)];
            }
        }
        return counts;
    };
    s.q = tally(s.p);
    s.q_prime = tally(s.p_prime);
    for (std::size_t j = 1; j < s.q_prime.size(); ++j) s.s_prime += s.q_prime[j];

    s.epsilon.reserve(s.z.size());
    for (Int zi : s.z) s.epsilon.push_back(zi - 2);
    if (s.p.front() == 0) s.epsilon.front() += 1;
    if (s.p.back() == 0) s.epsilon.back() += 1;

    return s;
}

Partition transpose_partition(const Composition& c) {
    CompositionStats s = compute_stats(c);
    Int ones = c.size() - 2 * c.length() + s.k + 2 - s.delta;
    if (ones > 10'000'000) throw DomainError("composition too large to transpose");
    std::vector<Int> parts;
    for (std::size_t j = s.q_prime.size(); j-- > 0;) {
        Int value = static_cast<Int>(j) + 2;
        for (Int rep = 0; rep < s.q_prime[j]; ++rep) parts.push_back(value);
    }
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(parts));
}

}  // namespace ribbonkit
