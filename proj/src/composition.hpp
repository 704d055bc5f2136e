#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "util.hpp"

namespace ribbonkit {

/// A finite sequence of positive integers. The universal index object for
/// ribbons, coarsenings and tableau contents.
class Composition {
public:
    explicit Composition(std::vector<Int> parts);

    /// Parses "3,1,3" (comma-separated decimal) or the digits-only shorthand
    /// "313" (one part per digit, digits 1-9 only). A trailing comma forces
    /// the comma-separated reading, so "12," is the single part 12 while
    /// "12" is (1,2).
    static Composition parse(std::string_view text);

    const std::vector<Int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    Int size() const noexcept { return size_; }
    Int part(int index) const { return parts_.at(static_cast<std::size_t>(index)); }

    bool is_all_ones() const noexcept;
    bool is_weakly_decreasing() const noexcept;

    /// Comma-separated decimal, e.g. "3,1,3".
    std::string to_string() const;

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<Int> parts_;
    Int size_ = 0;
};

/// A weakly decreasing composition, stored without trailing zeros. The empty
/// partition (size 0) is permitted as an identity object.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Int> parts);

    static Partition from_composition(const Composition& c);

    const std::vector<Int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    Int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }
    Int part(int index) const { return parts_.at(static_cast<std::size_t>(index)); }

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<Int> parts_;
    Int size_ = 0;
};

/// Lexicographic comparison with absent parts read as 0: a > b iff a_i > b_i at
/// the smallest index where they differ. Returns <0, 0, >0.
int lex_compare(std::span<const Int> a, std::span<const Int> b) noexcept;
int lex_compare(const Composition& a, const Composition& b) noexcept;
int lex_compare(const Partition& a, const Partition& b) noexcept;

struct PartitionLexLess {
    bool operator()(const Partition& a, const Partition& b) const noexcept {
        return lex_compare(a, b) < 0;
    }
};

Composition reverse(const Composition& c);

/// The lexicographically smaller of c and reverse(c); used to dedupe ribbons
/// up to reversal.
Composition canonical(const Composition& c);

/// The multiset {c_1, c_R}, returned sorted. For R = 1 the single part appears
/// twice.
std::array<Int, 2> ends(const Composition& c);

Partition sort_to_partition(const Composition& c);

/// All 2^(R-1) coarsenings, one per subset of adjacent gaps; includes c itself.
std::vector<Composition> coarsenings(const Composition& c);

/// Streams the parts of every coarsening of c without materializing the list.
void for_each_coarsening(const Composition& c,
                         const std::function<void(std::span<const Int>)>& fn);

/// The composition whose ribbon diagram is the diagonal reflection of c's.
Composition transpose(const Composition& c);

/// Diagram reflection of a partition.
Partition conjugate(const Partition& p);

/// The multiset {{c_1,c_2},...,{c_{R-1},c_R}} of unordered adjacent pairs,
/// returned as a sorted vector of sorted pairs. Requires R >= 2.
std::vector<std::array<Int, 2>> adjacent_pairs(const Composition& c);

/// Every composition of size n (and of the given length, when set) exactly
/// once: length ascending, lex ascending within each length.
void enumerate_compositions(Int n, std::optional<int> length,
                            const std::function<void(const Composition&)>& fn);
std::vector<Composition> list_compositions(Int n, std::optional<int> length = std::nullopt);

}  // namespace ribbonkit
