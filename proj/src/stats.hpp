#pragma once

#include "composition.hpp"

namespace ribbonkit {

/// Statistics of the placement of 1's and larger parts in a composition.
/// Defined only for compositions with at least one part >= 2.
///
/// Writing c = 1^{p_1} z_1 1^{p_2} z_2 ... 1^{p_m} z_m 1^{p_{m+1}} with every
/// z_i >= 2 and m = R - k:
///   k        number of parts equal to 1
///   delta    number of end parts equal to 1 (0, 1 or 2)
///   z        the parts >= 2, in order
///   p        profile p_1 ... p_{m+1}
///   p_prime  profile with first and last entries decremented
///   q[j]     occurrences of j in p
///   q_prime[j]  occurrences of j in p_prime (negative entries excluded)
///   epsilon  (z_1-2+[p_1=0]) (z_2-2) ... (z_m-2+[p_{m+1}=0])
///   s_prime  sum of q_prime[j] for j >= 1
struct CompositionStats {
    int k = 0;
    int delta = 0;
    std::vector<Int> z;
    std::vector<Int> p;
    std::vector<Int> p_prime;
    std::vector<Int> q;
    std::vector<Int> q_prime;
    std::vector<Int> epsilon;
    Int s_prime = 0;
};

/// Throws DomainError for an all-ones composition.
CompositionStats compute_stats(const Composition& c);

/// The partition of the transposed ribbon read off directly from the
/// statistics: lambda(1^{N-2R+k+2-delta} 2^{q'_0} 3^{q'_1} ...). Must agree
/// with sort_to_partition(transpose(c)).
Partition transpose_partition(const Composition& c);

}  // namespace ribbonkit
