#include "composition.hpp"

#include <algorithm>
#include <charconv>

namespace ribbonkit {

namespace {

// Materialized results (transposes, conjugates, coarsening lists) are bounded
// to keep pathological CLI inputs from exhausting memory.
constexpr Int kMaxMaterializedParts = 10'000'000;
constexpr int kMaxCoarseningLength = 30;

Int parse_part(std::string_view token) {
    if (token.empty()) throw ParseError("empty part in composition");
    Int value = 0;
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw ParseError("invalid part '" + std::string(token) + "'");
    if (value < 1) throw ParseError("composition parts must be >= 1");
    return value;
}

}  // namespace

Composition::Composition(std::vector<Int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw DomainError("composition must have at least one part");
    for (Int part : parts_) {
        if (part < 1) throw DomainError("composition parts must be >= 1");
        size_ = checked_add(size_, part);
    }
}

Composition Composition::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty composition text");
    std::vector<Int> parts;
    if (text.find(',') != std::string_view::npos) {
        bool trailing_comma = text.back() == ',';
        if (trailing_comma) text.remove_suffix(1);
        std::size_t start = 0;
        while (true) {
            std::size_t comma = text.find(',', start);
            std::string_view token = text.substr(start, comma == std::string_view::npos
                                                            ? std::string_view::npos
                                                            : comma - start);
            parts.push_back(parse_part(token));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else if (text.size() == 1) {
        parts.push_back(parse_part(text));
    } else {
        // digits-only shorthand: one part per digit
        for (char ch : text) {
            if (ch < '1' || ch > '9') {
                if (ch == '0')
                    throw ParseError("digit '0' in shorthand; use the comma-separated form "
                                     "(a trailing comma forces it, e.g. \"10,\")");
                throw ParseError(std::string("invalid character '") + ch + "' in composition");
            }
            parts.push_back(ch - '0');
        }
    }
    return Composition(std::move(parts));
}

bool Composition::is_all_ones() const noexcept {
    return std::all_of(parts_.begin(), parts_.end(), [](Int p) { return p == 1; });
}

bool Composition::is_weakly_decreasing() const noexcept {
    return std::is_sorted(parts_.rbegin(), parts_.rend());
}

std::string Composition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw DomainError("partition parts must be >= 1");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
        size_ = checked_add(size_, parts_[i]);
    }
}

Partition Partition::from_composition(const Composition& c) {
    if (!c.is_weakly_decreasing()) throw DomainError("composition is not weakly decreasing");
    return Partition(c.parts());
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int lex_compare(std::span<const Int> a, std::span<const Int> b) noexcept {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        Int ai = i < a.size() ? a[i] : 0;
        Int bi = i < b.size() ? b[i] : 0;
        if (ai != bi) return ai < bi ? -1 : 1;
    }
    return 0;
}

int lex_compare(const Composition& a, const Composition& b) noexcept {
    return lex_compare(std::span<const Int>(a.parts()), std::span<const Int>(b.parts()));
}

int lex_compare(const Partition& a, const Partition& b) noexcept {
    return lex_compare(std::span<const Int>(a.parts()), std::span<const Int>(b.parts()));
}

Composition reverse(const Composition& c) {
    std::vector<Int> parts(c.parts().rbegin(), c.parts().rend());
    return Composition(std::move(parts));
}

Composition canonical(const Composition& c) {
    Composition rev = reverse(c);
    return lex_compare(c, rev) <= 0 ? c : rev;
}

std::array<Int, 2> ends(const Composition& c) {
    Int first = c.parts().front();
    Int last = c.parts().back();
    return {std::min(first, last), std::max(first, last)};
}

Partition sort_to_partition(const Composition& c) {
    std::vector<Int> parts = c.parts();
    std::sort(parts.begin(), parts.end(), std::greater<Int>());
    return Partition(std::move(parts));
}

void for_each_coarsening(const Composition& c,
                         const std::function<void(std::span<const Int>)>& fn) {
    int r = c.length();
    if (r > kMaxCoarseningLength)
        throw DomainError("composition too long to enumerate coarsenings");
    std::vector<Int> merged;
    merged.reserve(static_cast<std::size_t>(r));
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (r - 1)); ++mask) {
        merged.clear();
        merged.push_back(c.part(0));
        for (int i = 1; i < r; ++i) {
            if (mask & (std::uint32_t{1} << (i - 1)))
                merged.back() = checked_add(merged.back(), c.part(i));
            else
                merged.push_back(c.part(i));
        }
        fn(std::span<const Int>(merged));
    }
}

std::vector<Composition> coarsenings(const Composition& c) {
    if (c.length() > 22) throw DomainError("composition too long to list coarsenings");
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << (c.length() - 1));
    for_each_coarsening(c, [&](std::span<const Int> parts) {
        out.emplace_back(std::vector<Int>(parts.begin(), parts.end()));
    });
    return out;
}

Composition transpose(const Composition& c) {
    if (c.is_all_ones()) return Composition({static_cast<Int>(c.length())});
    if (c.size() > kMaxMaterializedParts)
        throw DomainError("composition too large to transpose");

    // profile decomposition: c = 1^{p_1} z_1 1^{p_2} ... z_m 1^{p_{m+1}}
    std::vector<Int> z;
    std::vector<Int> p;
    {
        Int run = 0;
        for (Int part : c.parts()) {
            if (part == 1) {
                ++run;
            } else {
                p.push_back(run);
                z.push_back(part);
                run = 0;
            }
        }
        p.push_back(run);
    }
    std::vector<Int> pp = p;
    pp.front() -= 1;
    pp.back() -= 1;

    // transpose = (p'_{m+1}+2) 1^{z_m-2} (p'_m+2) ... (p'_2+2) 1^{z_1-2} (p'_1+2)
    std::vector<Int> out;
    std::size_t m = z.size();
    for (std::size_t i = m + 1; i >= 2; --i) {
        out.push_back(pp[i - 1] + 2);
        out.insert(out.end(), static_cast<std::size_t>(z[i - 2] - 2), 1);
    }
    out.push_back(pp[0] + 2);
    return Composition(std::move(out));
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition();
    if (p.part(0) > kMaxMaterializedParts)
        throw DomainError("partition too large to conjugate");
    std::vector<Int> out(static_cast<std::size_t>(p.part(0)));
    for (std::size_t j = 0; j < out.size(); ++j) {
        Int threshold = static_cast<Int>(j) + 1;
        Int count = 0;
        for (Int part : p.parts()) {
            if (part >= threshold) ++count;
        }
        out[j] = count;
    }
    return Partition(std::move(out));
}

std::vector<std::array<Int, 2>> adjacent_pairs(const Composition& c) {
    if (c.length() < 2) throw DomainError("adjacent pairs require length >= 2");
    std::vector<std::array<Int, 2>> pairs;
    pairs.reserve(static_cast<std::size_t>(c.length() - 1));
    for (int i = 0; i + 1 < c.length(); ++i) {
        Int x = c.part(i), y = c.part(i + 1);
        pairs.push_back({std::min(x, y), std::max(x, y)});
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

namespace {

// compositions of n with exactly r parts, lex ascending
void enumerate_fixed_length(Int n, int r, std::vector<Int>& prefix,
                            const std::function<void(const Composition&)>& fn) {
    if (r == 1) {
        prefix.push_back(n);
        fn(Composition(prefix));
        prefix.pop_back();
        return;
    }
    for (Int first = 1; first + (r - 1) <= n; ++first) {
        prefix.push_back(first);
        enumerate_fixed_length(n - first, r - 1, prefix, fn);
        prefix.pop_back();
    }
}

}  // namespace

void enumerate_compositions(Int n, std::optional<int> length,
                            const std::function<void(const Composition&)>& fn) {
    if (n < 1) throw DomainError("composition size must be >= 1");
    if (length && (*length < 1 || static_cast<Int>(*length) > n))
        throw DomainError("composition length must be between 1 and the size");
    std::vector<Int> prefix;
    if (length) {
        enumerate_fixed_length(n, *length, prefix, fn);
        return;
    }
    if (n > 60) throw DomainError("composition size too large to enumerate");
    for (int r = 1; static_cast<Int>(r) <= n; ++r) enumerate_fixed_length(n, r, prefix, fn);
}

std::vector<Composition> list_compositions(Int n, std::optional<int> length) {
    std::vector<Composition> out;
    enumerate_compositions(n, length, [&](const Composition& c) { out.push_back(c); });
    return out;
}

}  // namespace ribbonkit
