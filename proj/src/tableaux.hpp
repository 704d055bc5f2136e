#pragma once

#include "composition.hpp"
#include "stats.hpp"

namespace ribbonkit {

/// Cell geometry of the ribbon diagram of a composition: one row per part,
/// rows counted from the top, and the rightmost cell of row i+1 directly
/// below the leftmost cell of row i. Columns are 1-based.
class RibbonShape {
public:
    explicit RibbonShape(Composition c);

    const Composition& composition() const noexcept { return comp_; }
    int rows() const noexcept { return comp_.length(); }
    Int left(int row) const { return left_.at(static_cast<std::size_t>(row)); }
    Int right(int row) const { return right_.at(static_cast<std::size_t>(row)); }
    Int columns() const noexcept { return right_.front(); }

    /// All (row, column) cells, rows 0-based and columns 1-based.
    std::vector<std::pair<int, Int>> cells() const;

private:
    Composition comp_;
    std::vector<Int> left_, right_;
};

/// A semistandard filling of a ribbon diagram: rows weakly increase left to
/// right, columns strictly increase top to bottom.
class RibbonTableau {
public:
    /// Validates the filling against the shape.
    RibbonTableau(Composition shape, std::vector<std::vector<int>> rows);

    const Composition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    /// Count of each entry value, trailing zeros trimmed.
    const std::vector<Int>& content() const noexcept { return content_; }
    bool content_is_partition() const noexcept;

    friend bool operator==(const RibbonTableau& a, const RibbonTableau& b) {
        return a.shape_ == b.shape_ && a.rows_ == b.rows_;
    }

private:
    RibbonTableau() = default;
    friend std::vector<RibbonTableau> enumerate_lr(const Composition&);

    Composition shape_{std::vector<Int>{1}};
    std::vector<std::vector<int>> rows_;
    std::vector<Int> content_;
};

/// True iff every prefix of the reading word (right to left within rows, top
/// to bottom) contains at least as many i's as (i+1)'s, for every i >= 1.
bool is_lattice_word(const RibbonTableau& t);

/// Every Littlewood-Richardson tableau of the given ribbon shape, exactly
/// once, by backtracking over the reading order with incremental lattice-word
/// and row/column checks.
std::vector<RibbonTableau> enumerate_lr(const Composition& shape);

/// Streams the content vector of every LR tableau of the shape without
/// materializing tableaux.
void for_each_lr_content(const Composition& shape,
                         const std::function<void(std::span<const Int>)>& fn);

/// Number of LR tableaux of the given shape and content. Sizes must match.
Int lr_coefficient(const Composition& shape, const Partition& content);

/// The partition (N-R+1-M)(R-k-1+delta+M) u 1^{k-delta-u} of size N.
/// Requires 0 <= M <= (N-2R+k+2-delta)/2 and 1 <= u <= S' (u = 0 iff S' = 0);
/// rejects parameter combinations whose parts are not weakly decreasing.
Partition mu_partition(const CompositionStats& stats, Int n, int r, Int m, Int u);

/// |{(x_1..x_{R-k-1}) : sum x_i = M, 0 <= x_i <= epsilon_i}| by exact integer
/// dynamic programming over the bounded box.
Int lattice_point_count(const CompositionStats& stats, Int m);

}  // namespace ribbonkit
