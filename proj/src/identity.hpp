#pragma once

#include "symvec.hpp"
#include "tableaux.hpp"

namespace ribbonkit {

/// A one-step mass move on a composition: with i minimal such that
/// base_i >= 2, decrement part i by t and increment part j by t.
/// Rows are 1-based as in the difference identity; i < j <= R and
/// 1 <= t <= base_i - 1.
struct MoveSpec {
    Composition base;
    int source_row;  // i (1-based, derived)
    int target_row;  // j (1-based)
    Int amount;      // t
};

MoveSpec make_move_spec(const Composition& base, int j, Int t);

Composition apply_move(const MoveSpec& m);

/// LR tableaux T of the base shape such that for some i <= j' <= j-1 the
/// number of 1's in the first j' rows exceeds the number of 2's in the first
/// j'+1 rows by less than t.
std::vector<RibbonTableau> set_a(const MoveSpec& m);

/// LR tableaux U of the moved shape satisfying: if row j begins with t 1's,
/// then j <= R-1 and the (t+1)-th entry of row j is >= the rightmost entry of
/// row j+1. The implication is taken literally, so tableaux whose row j does
/// not begin with t 1's belong to the set.
std::vector<RibbonTableau> set_b(const MoveSpec& m);

/// sum_{T in A} s_cont(T) - sum_{U in B} s_cont(U); equals
/// subtract(ribbon_to_schur(base), ribbon_to_schur(apply_move(m))).
SymVector identity_difference(const MoveSpec& m);

/// Everything the identity subcommand reports for one move.
struct IdentityReport {
    MoveSpec move;
    Composition moved;
    std::vector<RibbonTableau> a_set;
    std::vector<RibbonTableau> b_set;
    SymVector difference;
    SymVector direct;
    bool agree;
};

IdentityReport run_identity(const Composition& base, int j, Int t);

}  // namespace ribbonkit
