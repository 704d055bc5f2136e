#include "identity.hpp"

namespace ribbonkit {

namespace {

int minimal_large_row(const Composition& c) {
    for (int i = 0; i < c.length(); ++i) {
        if (c.part(i) >= 2) return i + 1;
    }
    throw DomainError("composition has no part >= 2");
}

// ones(1..j') vs twos(1..j'+1) prefix test from the A-set definition
bool in_set_a(const RibbonTableau& t, const MoveSpec& m) {
    int r = t.shape().length();
    std::vector<Int> ones(static_cast<std::size_t>(r) + 1, 0);
    std::vector<Int> twos(static_cast<std::size_t>(r) + 1, 0);
    for (int row = 1; row <= r; ++row) {
        Int o = 0, w = 0;
        for (int v : t.rows()[static_cast<std::size_t>(row - 1)]) {
            if (v == 1) ++o;
            if (v == 2) ++w;
        }
        ones[static_cast<std::size_t>(row)] = ones[static_cast<std::size_t>(row - 1)] + o;
        twos[static_cast<std::size_t>(row)] = twos[static_cast<std::size_t>(row - 1)] + w;
    }
    for (int jp = m.source_row; jp <= m.target_row - 1; ++jp) {
        if (ones[static_cast<std::size_t>(jp)] - twos[static_cast<std::size_t>(jp + 1)] < m.amount)
            return true;
    }
    return false;
}

bool in_set_b(const RibbonTableau& u, const MoveSpec& m) {
    int r = u.shape().length();
    const auto& row_j = u.rows()[static_cast<std::size_t>(m.target_row - 1)];
    bool begins_with_t_ones = true;
    for (Int c = 0; c < m.amount; ++c) {
        if (row_j[static_cast<std::size_t>(c)] != 1) {
            begins_with_t_ones = false;
            break;
        }
    }
    if (!begins_with_t_ones) return true;  // vacuous implication
    if (m.target_row > r - 1) return false;
    const auto& row_below = u.rows()[static_cast<std::size_t>(m.target_row)];
    return row_j[static_cast<std::size_t>(m.amount)] >= row_below.back();
}

}  // namespace

MoveSpec make_move_spec(const Composition& base, int j, Int t) {
    int i = minimal_large_row(base);
    if (j <= i || j > base.length())
        throw DomainError("row index j must satisfy i < j <= R");
    if (t < 1 || t > base.part(i - 1) - 1)
        throw DomainError("amount t must satisfy 1 <= t <= alpha_i - 1");
    return MoveSpec{base, i, j, t};
}

Composition apply_move(const MoveSpec& m) {
    std::vector<Int> parts = m.base.parts();
    parts[static_cast<std::size_t>(m.source_row - 1)] -= m.amount;
    parts[static_cast<std::size_t>(m.target_row - 1)] =
        checked_add(parts[static_cast<std::size_t>(m.target_row - 1)], m.amount);
    return Composition(std::move(parts));
}

std::vector<RibbonTableau> set_a(const MoveSpec& m) {
    std::vector<RibbonTableau> out;
    for (auto& t : enumerate_lr(m.base)) {
        if (in_set_a(t, m)) out.push_back(std::move(t));
    }
    return out;
}

std::vector<RibbonTableau> set_b(const MoveSpec& m) {
    std::vector<RibbonTableau> out;
    for (auto& u : enumerate_lr(apply_move(m))) {
        if (in_set_b(u, m)) out.push_back(std::move(u));
    }
    return out;
}

SymVector identity_difference(const MoveSpec& m) {
    SymVector v(Basis::schur);
    for (const auto& t : set_a(m))
        v.add_term(Partition(t.content()), 1);
    for (const auto& u : set_b(m))
        v.add_term(Partition(u.content()), -1);
    return v;
}

IdentityReport run_identity(const Composition& base, int j, Int t) {
    IdentityReport report{make_move_spec(base, j, t),
                          Composition({1}),
                          {},
                          {},
                          SymVector(Basis::schur),
                          SymVector(Basis::schur),
                          false};
    report.moved = apply_move(report.move);
    report.a_set = set_a(report.move);
    report.b_set = set_b(report.move);
    for (const auto& tab : report.a_set) report.difference.add_term(Partition(tab.content()), 1);
    for (const auto& tab : report.b_set) report.difference.add_term(Partition(tab.content()), -1);
    report.direct = subtract(ribbon_to_schur(base), ribbon_to_schur(report.moved));
    report.agree = report.difference == report.direct;
    return report;
}

}  // namespace ribbonkit
