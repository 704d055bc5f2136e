#pragma once

#include "families.hpp"
#include "stats.hpp"
#include "symvec.hpp"

namespace ribbonkit {

/// A pair of ribbons whose difference is a single Schur function:
/// r_alpha - r_beta = s_nu with coefficient +1, re-verified at construction.
/// alpha and beta are stored in canonical orientation (lex-smaller of the
/// composition and its reverse).
struct NearEqualityRecord {
    Composition alpha;
    Composition beta;
    Partition nu;
    std::vector<FamilyMatch> families;
};

struct SearchOptions {
    std::optional<int> length;          // restrict to one (N, R) bucket
    int threads = 0;                    // 0 = available parallelism
    bool classify = true;
    std::uint32_t disabled_families = 0;  // classifier mutation hook (self-test)
};

/// Every unordered pair of distinct ribbons of size n whose Schur difference
/// is a single s_nu with coefficient +1, one record per pair, ordered by
/// (length, alpha, beta) lex-ascending. Pairs are compared only within equal
/// (N, R) buckets and prefiltered by |LR_alpha| = |LR_beta| + 1.
std::vector<NearEqualityRecord> search_near_equalities(Int n, const SearchOptions& opts = {});

struct ConditionCheck {
    std::string name;
    bool applicable = false;
    bool satisfied = true;  // vacuously true when not applicable
    std::string detail;
};

struct NecessaryConditionsReport {
    std::vector<ConditionCheck> checks;
    bool all_satisfied() const;
};

/// Necessary conditions for r_alpha - r_beta to be Schur-positive (the caller
/// asserts positivity): delta and q' comparisons when lambda(alpha) =
/// lambda(beta); the ends lex condition; and, when the difference is the
/// single Schur function s_nu, the no-hook and distinct-ends conditions.
NecessaryConditionsReport check_necessary_conditions(const Composition& alpha,
                                                     const Composition& beta,
                                                     const Partition* nu = nullptr);

struct FamilyFailure {
    int id = 0;
    FamilyParams params;
    std::string detail;
};

struct FamilyVerifyReport {
    bool pass = false;
    Int size_cap = 0;
    std::size_t instantiations = 0;
    std::vector<FamilyFailure> failures;
    double seconds = 0.0;
};

/// Confirms subtract(r_alpha, r_beta) = {nu: 1} for every in-bounds
/// instantiation of all 16 family templates with size <= size_cap.
FamilyVerifyReport verify_families(Int size_cap, int threads = 0);

struct ConjectureReport {
    bool pass = false;
    Int max_size = 0;
    std::size_t record_count = 0;
    std::map<int, std::size_t> family_counts;  // per family id, over all matches
    std::size_t unclassified = 0;
    std::vector<NearEqualityRecord> counterexamples;  // unclassified or nu_3 > 2
    double seconds = 0.0;
};

/// Runs the search for every size 2..max_size; PASS iff every record
/// classifies into one of the 16 families and every nu has nu_3 <= 2.
ConjectureReport verify_conjecture(Int max_size, const SearchOptions& opts = {});

}  // namespace ribbonkit
