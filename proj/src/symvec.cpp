#include "symvec.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "tableaux.hpp"

namespace ribbonkit {

void SymVector::add_term(const Partition& p, Int coeff) {
    if (coeff == 0) return;
    if (degree_ && *degree_ != p.size())
        throw MismatchError("term size does not match vector degree");
    auto [it, inserted] = terms_.try_emplace(p, 0);
    it->second = checked_add(it->second, coeff);
    if (it->second == 0)
        terms_.erase(it);
    else if (!degree_)
        degree_ = p.size();
    if (terms_.empty()) degree_.reset();
}

Int SymVector::coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

Int SymVector::coefficient_sum() const {
    Int total = 0;
    for (const auto& [p, c] : terms_) total = checked_add(total, c);
    return total;
}

std::string SymVector::to_string() const {
    if (terms_.empty()) return "0";
    const char* symbol = basis_ == Basis::schur ? "s" : "h";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        Int magnitude = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (magnitude != 1) out += std::to_string(magnitude) + "*";
        out += symbol;
        out += "[" + p.to_string() + "]";
    }
    return out;
}

SymVector ribbon_to_schur(const Composition& a) {
    SymVector v(Basis::schur);
    for_each_lr_content(a, [&](std::span<const Int> counts) {
        v.add_term(Partition(std::vector<Int>(counts.begin(), counts.end())), 1);
    });
    return v;
}

SymVector ribbon_to_h(const Composition& a) {
    SymVector v(Basis::h);
    int r = a.length();
    std::vector<Int> sorted;
    for_each_coarsening(a, [&](std::span<const Int> parts) {
        sorted.assign(parts.begin(), parts.end());
        std::sort(sorted.begin(), sorted.end(), std::greater<Int>());
        int sign = ((r - static_cast<int>(parts.size())) % 2 == 0) ? 1 : -1;
        v.add_term(Partition(sorted), sign);
    });
    return v;
}

namespace {

// Jacobi-Trudi determinant det(h_{nu_i - i + j}) expanded by row-wise
// backtracking over column assignments. Entries with negative index vanish,
// which prunes the factorial sum to the surviving permutations only.
SymVector schur_to_h_uncached(const Partition& nu) {
    SymVector v(Basis::h);
    int n = nu.length();
    if (n == 0) {
        // empty partition: the empty product
        v.add_term(Partition(), 1);
        return v;
    }
    if (n > 62) throw DomainError("partition too long for Jacobi-Trudi expansion");

    std::vector<Int> factors;  // h-indices > 0 of the current branch
    std::uint64_t used = 0;
    // parity of the permutation built so far, updated per assignment by the
    // number of already-used columns above the one chosen
    auto dfs = [&](auto&& self, int row, int parity) -> void {
        if (row == n) {
            std::vector<Int> sorted = factors;
            std::sort(sorted.begin(), sorted.end(), std::greater<Int>());
            v.add_term(Partition(std::move(sorted)), parity ? -1 : 1);
            return;
        }
        for (int col = 0; col < n; ++col) {
            std::uint64_t bit = std::uint64_t{1} << col;
            if (used & bit) continue;
            Int index = nu.part(row) - row + col;  // nu_i - i + j, 0-based
            if (index < 0) continue;
            int inversions = std::popcount(used >> (col + 1));
            used |= bit;
            if (index > 0) factors.push_back(index);
            self(self, row + 1, parity ^ (inversions & 1));
            if (index > 0) factors.pop_back();
            used &= ~bit;
        }
    };
    dfs(dfs, 0, 0);
    return v;
}

struct JacobiTrudiCache {
    std::shared_mutex mutex;
    std::unordered_map<std::string, SymVector> entries;
};

JacobiTrudiCache& jt_cache() {
    static JacobiTrudiCache cache;
    return cache;
}

}  // namespace

SymVector schur_to_h(const Partition& p) {
    auto& cache = jt_cache();
    std::string key = p.to_string();
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.entries.find(key);
        if (it != cache.entries.end()) return it->second;
    }
    SymVector computed = schur_to_h_uncached(p);
    std::unique_lock lock(cache.mutex);
    return cache.entries.try_emplace(std::move(key), std::move(computed)).first->second;
}

SymVector schur_vector_to_h(const SymVector& v) {
    if (!v.zero() && v.basis() != Basis::schur)
        throw MismatchError("expected a Schur-basis vector");
    SymVector out(Basis::h);
    for (const auto& [p, c] : v.terms()) {
        SymVector expansion = schur_to_h(p);
        for (const auto& [mu, cmu] : expansion.terms()) out.add_term(mu, checked_mul(c, cmu));
    }
    return out;
}

SymVector omega_schur(const SymVector& v) {
    if (!v.zero() && v.basis() != Basis::schur)
        throw MismatchError("expected a Schur-basis vector");
    SymVector out(Basis::schur);
    for (const auto& [p, c] : v.terms()) out.add_term(conjugate(p), c);
    return out;
}

SymVector subtract(const SymVector& a, const SymVector& b) {
    if (!a.zero() && !b.zero()) {
        if (a.basis() != b.basis()) throw MismatchError("basis mismatch in subtraction");
        if (a.degree() != b.degree()) throw MismatchError("degree mismatch in subtraction");
    }
    SymVector out(a.zero() ? b.basis() : a.basis());
    for (const auto& [p, c] : a.terms()) out.add_term(p, c);
    for (const auto& [p, c] : b.terms()) out.add_term(p, checked_sub(0, c));
    return out;
}

std::optional<Partition> single_positive_schur(const SymVector& v) {
    if (!v.zero() && v.basis() != Basis::schur)
        throw MismatchError("expected a Schur-basis vector");
    if (v.terms().size() != 1) return std::nullopt;
    const auto& [p, c] = *v.terms().begin();
    if (c != 1) return std::nullopt;
    return p;
}

std::pair<Partition, Int> lex_minimal_support(const SymVector& v) {
    if (v.zero()) throw DomainError("zero vector has no support");
    const auto& [p, c] = *v.terms().begin();
    return {p, c};
}

SymVector ExpansionCache::schur(const Composition& c) {
    std::string key = canonical(c).to_string();
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    SymVector computed = ribbon_to_schur(c);
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(std::move(key), std::move(computed)).first->second;
}

std::size_t ExpansionCache::entries() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

}  // namespace ribbonkit
