#include "tableaux.hpp"

#include <algorithm>

namespace ribbonkit {

namespace {

// Backtracking over more cells than this is hopeless anyway; the guard keeps
// absurd CLI inputs from allocating unbounded scratch space.
constexpr Int kMaxEnumerationCells = 64;

}  // namespace

RibbonShape::RibbonShape(Composition c) : comp_(std::move(c)) {
    int r = comp_.length();
    left_.resize(static_cast<std::size_t>(r));
    right_.resize(static_cast<std::size_t>(r));
    left_[static_cast<std::size_t>(r - 1)] = 1;
    right_[static_cast<std::size_t>(r - 1)] = comp_.part(r - 1);
    for (int i = r - 2; i >= 0; --i) {
        // rightmost cell of row i+1 sits directly below the leftmost cell of row i
        left_[static_cast<std::size_t>(i)] = right_[static_cast<std::size_t>(i + 1)];
        right_[static_cast<std::size_t>(i)] =
            checked_add(left_[static_cast<std::size_t>(i)], comp_.part(i) - 1);
    }
}

std::vector<std::pair<int, Int>> RibbonShape::cells() const {
    if (comp_.size() > kMaxEnumerationCells) throw DomainError("ribbon too large to materialize");
    std::vector<std::pair<int, Int>> out;
    out.reserve(static_cast<std::size_t>(comp_.size()));
    for (int i = 0; i < rows(); ++i) {
        for (Int col = left(i); col <= right(i); ++col) out.emplace_back(i, col);
    }
    return out;
}

RibbonTableau::RibbonTableau(Composition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.length())
        throw DomainError("tableau row count does not match shape");
    int max_entry = 0;
    for (int i = 0; i < shape_.length(); ++i) {
        const auto& row = rows_[static_cast<std::size_t>(i)];
        if (static_cast<Int>(row.size()) != shape_.part(i))
            throw DomainError("tableau row length does not match shape");
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1) throw DomainError("tableau entries must be >= 1");
            if (j > 0 && row[j] < row[j - 1])
                throw DomainError("tableau rows must weakly increase");
            max_entry = std::max(max_entry, row[j]);
        }
    }
    for (int i = 0; i + 1 < shape_.length(); ++i) {
        // the only shared column: leftmost of row i above rightmost of row i+1
        if (rows_[static_cast<std::size_t>(i + 1)].back() <=
            rows_[static_cast<std::size_t>(i)].front())
            throw DomainError("tableau columns must strictly increase");
    }
    content_.assign(static_cast<std::size_t>(max_entry), 0);
    for (const auto& row : rows_) {
        for (int v : row) ++content_[static_cast<std::size_t>(v - 1)];
    }
}

bool RibbonTableau::content_is_partition() const noexcept {
    return std::is_sorted(content_.rbegin(), content_.rend());
}

bool is_lattice_word(const RibbonTableau& t) {
    std::vector<Int> cnt(t.content().size() + 1, 0);
    for (const auto& row : t.rows()) {
        for (auto it = row.rbegin(); it != row.rend(); ++it) {
            int v = *it;
            if (v >= 2 && cnt[static_cast<std::size_t>(v - 1)] >=
                              cnt[static_cast<std::size_t>(v - 2)])
                return false;
            ++cnt[static_cast<std::size_t>(v - 1)];
        }
    }
    return true;
}

namespace {

// Shared backtracking engine. Cells are filled in reading order (right to
// left within a row, rows top to bottom), so the partial filling is always a
// prefix of the reading word and the lattice condition can be checked
// incrementally: appending v keeps every prefix valid iff cnt[v-1] > cnt[v].
//
// Candidate bounds per cell:
//   - the rightmost cell of row r > 0 sits below the previously filled cell
//     (the leftmost of row r-1), so its value must exceed it;
//   - any other cell is the left neighbour of the previously filled cell, so
//     its value must not exceed it;
//   - no entry in row r can exceed r+1 (new values are introduced at most
//     once per row, starting from an all-1's top row).
struct LrEngine {
    const Composition& shape;
    const std::vector<Int>* content_cap;  // optional; cap[v-1] bounds value v
    int n = 0;
    std::vector<int> row_of;        // reading position -> 0-based row
    std::vector<char> first_in_row; // reading position is the rightmost cell of its row
    std::vector<int> value;
    std::vector<Int> cnt;  // cnt[v]
    std::vector<Int> content_scratch;

    LrEngine(const Composition& shape_in, const std::vector<Int>* cap)
        : shape(shape_in), content_cap(cap) {
        if (shape.size() > kMaxEnumerationCells)
            throw DomainError("ribbon too large to enumerate tableaux");
        n = static_cast<int>(shape.size());
        row_of.resize(static_cast<std::size_t>(n));
        first_in_row.resize(static_cast<std::size_t>(n));
        int idx = 0;
        for (int r = 0; r < shape.length(); ++r) {
            for (Int c = 0; c < shape.part(r); ++c, ++idx) {
                row_of[static_cast<std::size_t>(idx)] = r;
                first_in_row[static_cast<std::size_t>(idx)] = (c == 0);
            }
        }
        value.assign(static_cast<std::size_t>(n), 0);
        cnt.assign(static_cast<std::size_t>(shape.length()) + 2, 0);
    }

    Int cap_for(int v) const {
        if (!content_cap) return kMaxEnumerationCells + 1;
        std::size_t i = static_cast<std::size_t>(v - 1);
        return i < content_cap->size() ? (*content_cap)[i] : 0;
    }

    template <typename Emit>
    void run(int idx, const Emit& emit) {
        if (idx == n) {
            emit(*this);
            return;
        }
        int row = row_of[static_cast<std::size_t>(idx)];
        int lo = 1;
        int hi = row + 1;
        if (idx > 0) {
            int prev = value[static_cast<std::size_t>(idx - 1)];
            if (first_in_row[static_cast<std::size_t>(idx)])
                lo = prev + 1;
            else
                hi = std::min(hi, prev);
        }
        for (int v = lo; v <= hi; ++v) {
            std::size_t vi = static_cast<std::size_t>(v);
            if (v >= 2 && cnt[vi] >= cnt[vi - 1]) continue;
            if (cnt[vi] >= cap_for(v)) continue;
            value[static_cast<std::size_t>(idx)] = v;
            ++cnt[vi];
            run(idx + 1, emit);
            --cnt[vi];
        }
    }

    std::span<const Int> content() {
        std::size_t maxv = cnt.size();
        while (maxv > 1 && cnt[maxv - 1] == 0) --maxv;
        content_scratch.assign(cnt.begin() + 1, cnt.begin() + static_cast<std::ptrdiff_t>(maxv));
        return content_scratch;
    }

    std::vector<std::vector<int>> build_rows() const {
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
        int idx = 0;
        for (int r = 0; r < shape.length(); ++r) {
            auto& row = rows[static_cast<std::size_t>(r)];
            row.resize(static_cast<std::size_t>(shape.part(r)));
            // reading order fills each row right to left
            for (Int c = shape.part(r); c-- > 0; ++idx)
                row[static_cast<std::size_t>(c)] = value[static_cast<std::size_t>(idx)];
        }
        return rows;
    }
};

}  // namespace

std::vector<RibbonTableau> enumerate_lr(const Composition& shape) {
    std::vector<RibbonTableau> out;
    LrEngine engine(shape, nullptr);
    engine.run(0, [&](LrEngine& e) {
        RibbonTableau t;
        t.shape_ = e.shape;
        t.rows_ = e.build_rows();
        auto content = e.content();
        t.content_.assign(content.begin(), content.end());
        out.push_back(std::move(t));
    });
    return out;
}

void for_each_lr_content(const Composition& shape,
                         const std::function<void(std::span<const Int>)>& fn) {
    LrEngine engine(shape, nullptr);
    engine.run(0, [&](LrEngine& e) { fn(e.content()); });
}

Int lr_coefficient(const Composition& shape, const Partition& content) {
    if (shape.size() != content.size())
        throw MismatchError("shape and content must have the same size");
    // With the cap equal to the target content and equal totals, every
    // completed filling has exactly the target content.
    LrEngine engine(shape, &content.parts());
    Int count = 0;
    engine.run(0, [&](LrEngine&) { ++count; });
    return count;
}

Partition mu_partition(const CompositionStats& stats, Int n, int r, Int m, Int u) {
    Int k = stats.k;
    Int delta = stats.delta;
    Int ones_of_transpose = checked_sub(checked_add(checked_sub(n, checked_mul(2, r)), k + 2), delta);
    if (m < 0 || checked_mul(2, m) > ones_of_transpose)
        throw DomainError("M outside the admissible range");
    if (stats.s_prime == 0) {
        if (u != 0) throw DomainError("u must be 0 when S' = 0");
    } else if (u < 1 || u > stats.s_prime) {
        throw DomainError("u outside the admissible range");
    }
    if (k - delta - u < 0) throw DomainError("u exceeds k - delta");

    std::vector<Int> seq;
    seq.push_back(n - r + 1 - m);
    seq.push_back(r - k - 1 + delta + m);
    if (u >= 1) seq.push_back(u);
    seq.insert(seq.end(), static_cast<std::size_t>(k - delta - u), 1);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 0 || (i > 0 && seq[i] > seq[i - 1]))
            throw DomainError("parameters do not yield a partition");
    }
    while (!seq.empty() && seq.back() == 0) seq.pop_back();
    return Partition(std::move(seq));
}

Int lattice_point_count(const CompositionStats& stats, Int m) {
    if (m < 0) throw DomainError("M must be >= 0");
    if (m > 1'000'000) throw DomainError("M too large");
    // box constraints are epsilon_1 .. epsilon_{R-k-1} (epsilon_0 excluded)
    std::vector<Int> ways(static_cast<std::size_t>(m) + 1, 0);
    ways[0] = 1;
    for (std::size_t dim = 1; dim < stats.epsilon.size(); ++dim) {
        Int bound = stats.epsilon[dim];
        std::vector<Int> next(ways.size(), 0);
        for (std::size_t total = 0; total < ways.size(); ++total) {
            for (Int x = 0; x <= bound && static_cast<std::size_t>(x) <= total; ++x) {
                next[total] = checked_add(next[total], ways[total - static_cast<std::size_t>(x)]);
            }
        }
        ways = std::move(next);
    }
    return ways[static_cast<std::size_t>(m)];
}

}  // namespace ribbonkit
