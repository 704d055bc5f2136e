#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "composition.hpp"

namespace ribbonkit {

enum class Basis { schur, h };

/// Sparse signed-integer vector over a basis of the symmetric function
/// algebra, indexed by partitions. Homogeneous: all index partitions share
/// one size. Zero coefficients are never stored; iteration is lex-ascending.
class SymVector {
public:
    explicit SymVector(Basis basis) : basis_(basis) {}

    Basis basis() const noexcept { return basis_; }
    bool zero() const noexcept { return terms_.empty(); }
    std::optional<Int> degree() const noexcept { return degree_; }
    const std::map<Partition, Int, PartitionLexLess>& terms() const noexcept { return terms_; }

    /// Adds coeff to the entry at p (checked); drops the term if it cancels.
    void add_term(const Partition& p, Int coeff);
    Int coefficient(const Partition& p) const;
    /// Sum of all coefficients (checked). For a ribbon expansion this is the
    /// number of LR tableaux.
    Int coefficient_sum() const;

    /// "s[3,3,1] + 2*s[4,2,1]" style rendering, lex-ascending; "0" when zero.
    std::string to_string() const;

    friend bool operator==(const SymVector& a, const SymVector& b) {
        if (a.terms_.empty() && b.terms_.empty()) return true;
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

private:
    Basis basis_;
    std::optional<Int> degree_;
    std::map<Partition, Int, PartitionLexLess> terms_;
};

/// Schur expansion of the ribbon Schur function via the LR rule.
SymVector ribbon_to_schur(const Composition& a);

/// h-basis expansion of the ribbon Schur function via the signed sum over the
/// coarsening multiset.
SymVector ribbon_to_h(const Composition& a);

/// h-basis expansion of a single Schur function via the Jacobi-Trudi
/// determinant, expanded as a signed permutation sum with early annihilation
/// of negative h-indices. Results are memoized per partition.
SymVector schur_to_h(const Partition& p);

/// Linear extension of schur_to_h to Schur-basis vectors.
SymVector schur_vector_to_h(const SymVector& v);

/// The omega involution on a Schur-basis vector: conjugates every index
/// partition, coefficients unchanged.
SymVector omega_schur(const SymVector& v);

/// Coefficientwise a - b. Bases and degrees must agree unless one side is zero.
SymVector subtract(const SymVector& a, const SymVector& b);

/// The partition nu iff v is exactly {nu: +1}; empty otherwise.
std::optional<Partition> single_positive_schur(const SymVector& v);

/// Lex-smallest index partition and its coefficient; rejects the zero vector.
std::pair<Partition, Int> lex_minimal_support(const SymVector& v);

/// Memoized ribbon_to_schur keyed by the canonical representative (results
/// are identical for c and reverse(c)). Safe for concurrent use.
class ExpansionCache {
public:
    SymVector schur(const Composition& c);
    std::size_t entries() const;

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, SymVector> cache_;
};

}  // namespace ribbonkit
