#pragma once

// Shared helpers and independent oracles for the test suites. Oracles here
// deliberately avoid the implementation paths they are used to check.

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "composition.hpp"
#include "search.hpp"
#include "symvec.hpp"
#include "tableaux.hpp"

namespace ribbonkit::testutil {

inline Composition comp(std::initializer_list<Int> parts) {
    return Composition(std::vector<Int>(parts));
}

inline Partition part(std::initializer_list<Int> parts) {
    return Partition(std::vector<Int>(parts));
}

inline void enumerate_partitions_impl(Int n, Int max_part, std::vector<Int>& prefix,
                                      const std::function<void(const Partition&)>& fn) {
    if (n == 0) {
        fn(Partition(prefix));
        return;
    }
    for (Int p = std::min(n, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate_partitions_impl(n - p, p, prefix, fn);
        prefix.pop_back();
    }
}

/// All partitions of n, largest-first recursion order.
inline void enumerate_partitions(Int n, const std::function<void(const Partition&)>& fn) {
    std::vector<Int> prefix;
    enumerate_partitions_impl(n, n, prefix, fn);
}

/// Geometric transpose oracle: reflect every ribbon cell across the main
/// diagonal and read the row lengths back. Independent of the profile-based
/// formula in transpose().
inline Composition transpose_by_reflection(const Composition& c) {
    RibbonShape shape(c);
    std::map<Int, Int> row_sizes;  // reflected row index -> cell count
    for (const auto& [row, col] : shape.cells()) {
        ++row_sizes[col];  // cell (row, col) reflects to row index col
        (void)row;
    }
    std::vector<Int> parts;
    for (const auto& [row, count] : row_sizes) parts.push_back(count);
    return Composition(std::move(parts));
}

/// Multiset of lambda-images of all coarsenings of a composition.
inline std::map<Partition, Int, PartitionLexLess> coarsening_multiset(const Composition& c) {
    std::map<Partition, Int, PartitionLexLess> out;
    for (const auto& gamma : coarsenings(c)) ++out[sort_to_partition(gamma)];
    return out;
}

/// Unoptimized near-equality oracle: expands every composition of size n and
/// tests every unordered pair in both orientations, with no (N, R) bucketing
/// and no mass prefilter. Triples are canonicalized, deduplicated and sorted
/// like the production search output.
inline std::vector<NearEqualityRecord> oracle_search(Int n) {
    std::vector<Composition> comps = list_compositions(n);
    std::vector<SymVector> expansions;
    expansions.reserve(comps.size());
    for (const auto& c : comps) expansions.push_back(ribbon_to_schur(c));

    std::vector<NearEqualityRecord> records;
    std::set<std::string> seen;
    auto consider = [&](std::size_t heavy, std::size_t light) {
        SymVector diff = subtract(expansions[heavy], expansions[light]);
        auto nu = single_positive_schur(diff);
        if (!nu) return;
        Composition alpha = canonical(comps[heavy]);
        Composition beta = canonical(comps[light]);
        std::string key = alpha.to_string() + "|" + beta.to_string() + "|" + nu->to_string();
        if (seen.insert(key).second)
            records.push_back({alpha, beta, *nu, std::vector<FamilyMatch>{}});
    };
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
            consider(i, j);
            consider(j, i);
        }
    }
    std::sort(records.begin(), records.end(),
              [](const NearEqualityRecord& x, const NearEqualityRecord& y) {
                  if (x.alpha.length() != y.alpha.length())
                      return x.alpha.length() < y.alpha.length();
                  int cmp = lex_compare(x.alpha, y.alpha);
                  if (cmp != 0) return cmp < 0;
                  return lex_compare(x.beta, y.beta) < 0;
              });
    return records;
}

inline bool same_triples(const std::vector<NearEqualityRecord>& a,
                         const std::vector<NearEqualityRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i].alpha == b[i].alpha) || !(a[i].beta == b[i].beta) || !(a[i].nu == b[i].nu))
            return false;
    }
    return true;
}

/// Content multiset of a tableau list, as sorted partitions with multiplicity.
inline std::map<Partition, Int, PartitionLexLess> content_multiset(
    const std::vector<RibbonTableau>& tableaux) {
    std::map<Partition, Int, PartitionLexLess> out;
    for (const auto& t : tableaux) ++out[Partition(t.content())];
    return out;
}

}  // namespace ribbonkit::testutil
