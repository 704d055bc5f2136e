#pragma once

#include <cstdint>

#include "composition.hpp"

namespace ribbonkit {

/// Parameters of a family template. Families use a subset of {a, b, c, d};
/// unused parameters stay 0.
struct FamilyParams {
    Int a = 0;
    Int b = 0;
    Int c = 0;
    Int d = 0;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

struct FamilyInstance {
    Composition alpha;
    Composition beta;
    Partition nu;
};

inline constexpr int kFamilyCount = 16;

/// Short pattern description, e.g. "alpha=b1^da beta=(b-1)1^d(a+1) nu=ab1^d".
const char* family_pattern(int id);

/// The parameter letters a family uses, e.g. "abd".
const char* family_param_names(int id);

/// Concrete (alpha, beta, nu) for the family template; throws DomainError on
/// parameters outside the family's validity constraints.
FamilyInstance instantiate_family(int id, const FamilyParams& params);

/// Every in-bounds instantiation with size(alpha) <= size_cap, in a fixed
/// deterministic parameter order.
void for_each_family_instance(
    int id, Int size_cap,
    const std::function<void(const FamilyParams&, const FamilyInstance&)>& fn);

struct FamilyMatch {
    int id = 0;
    FamilyParams params;

    friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

/// All (id, params) whose instantiation reproduces the triple up to
/// independent reversal of alpha and beta. Bits set in disabled_mask
/// (bit id-1) exclude families from matching.
std::vector<FamilyMatch> classify_triple(const Composition& alpha, const Composition& beta,
                                         const Partition& nu, std::uint32_t disabled_mask = 0);

}  // namespace ribbonkit
