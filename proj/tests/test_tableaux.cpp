#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace ribbonkit;
using testutil::comp;
using testutil::part;

TEST_CASE("ribbon shape geometry") {
    RibbonShape shape(comp({3, 1, 3}));
    // bottom row occupies columns 1..3; each higher row starts at the
    // rightmost column of the row below
    CHECK(shape.left(2) == 1);
    CHECK(shape.right(2) == 3);
    CHECK(shape.left(1) == 3);
    CHECK(shape.right(1) == 3);
    CHECK(shape.left(0) == 3);
    CHECK(shape.right(0) == 5);
    CHECK(shape.columns() == 5);
    CHECK(shape.cells().size() == 7);
}

TEST_CASE("tableau validation and content") {
    // two fillings of ribbon shape 313, one semistandard-lattice and one not
    RibbonTableau t(comp({3, 1, 3}), {{1, 1, 1}, {2}, {1, 2, 3}});
    CHECK(t.content() == std::vector<Int>{4, 2, 1});
    RibbonTableau u(comp({3, 1, 3}), {{1, 2, 2}, {2}, {1, 2, 3}});
    CHECK(u.content() == std::vector<Int>{2, 4, 1});
    CHECK_FALSE(u.content_is_partition());

    CHECK_THROWS_AS(RibbonTableau(comp({3, 1, 3}), {{1, 1}, {2}, {1, 2, 3}}), DomainError);
    CHECK_THROWS_AS(RibbonTableau(comp({3, 1, 3}), {{1, 1, 1}, {2}, {1, 3, 2}}), DomainError);
    // column must strictly increase: row below ends with a value <= the cell above
    CHECK_THROWS_AS(RibbonTableau(comp({2, 2}), {{1, 1}, {1, 1}}), DomainError);
}

TEST_CASE("lattice word condition") {
    RibbonTableau t(comp({3, 1, 3}), {{1, 1, 1}, {2}, {1, 2, 3}});  // word 1112321
    CHECK(is_lattice_word(t));
    RibbonTableau u(comp({3, 1, 3}), {{1, 2, 2}, {2}, {1, 2, 3}});  // word 2212321
    CHECK_FALSE(is_lattice_word(u));
    // non-partition content can never be a lattice word
    RibbonTableau w(comp({2, 2}), {{2, 2}, {1, 3}});
    CHECK_FALSE(w.content_is_partition());
    CHECK_FALSE(is_lattice_word(w));
}

TEST_CASE("LR enumeration of known shapes") {
    auto alpha = enumerate_lr(comp({3, 1, 3}));
    REQUIRE(alpha.size() == 3);
    auto alpha_contents = testutil::content_multiset(alpha);
    CHECK(alpha_contents[part({5, 1, 1})] == 1);
    CHECK(alpha_contents[part({4, 2, 1})] == 1);
    CHECK(alpha_contents[part({3, 3, 1})] == 1);

    auto beta = enumerate_lr(comp({4, 1, 2}));
    REQUIRE(beta.size() == 2);
    auto beta_contents = testutil::content_multiset(beta);
    CHECK(beta_contents[part({5, 1, 1})] == 1);
    CHECK(beta_contents[part({4, 2, 1})] == 1);

    auto single = enumerate_lr(comp({6}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].content() == std::vector<Int>{6});
    CHECK(single[0].rows() == std::vector<std::vector<int>>{{1, 1, 1, 1, 1, 1}});
}

TEST_CASE("every enumerated tableau is a valid LR tableau") {
    for (Int n = 1; n <= 9; ++n) {
        enumerate_compositions(n, std::nullopt, [&](const Composition& c) {
            for (const auto& t : enumerate_lr(c)) {
                CHECK(is_lattice_word(t));
                CHECK(t.content_is_partition());
                CHECK(t.shape() == c);
            }
        });
    }
}

TEST_CASE("reversal leaves the content multiset unchanged") {
    for (Int n = 1; n <= 10; ++n) {
        enumerate_compositions(n, std::nullopt, [&](const Composition& c) {
            if (lex_compare(c, reverse(c)) >= 0) return;
            CHECK(testutil::content_multiset(enumerate_lr(c)) ==
                  testutil::content_multiset(enumerate_lr(reverse(c))));
        });
    }
}

TEST_CASE("lr_coefficient") {
    CHECK(lr_coefficient(comp({3, 1, 3}), part({3, 3, 1})) == 1);
    CHECK(lr_coefficient(comp({4, 1, 2}), part({3, 3, 1})) == 0);
    CHECK(lr_coefficient(comp({4, 1, 2}), part({5, 1, 1})) == 1);
    CHECK_THROWS_AS(lr_coefficient(comp({3, 1, 3}), part({3, 3})), MismatchError);

    // capped enumeration must agree with filtering the full enumeration
    for (Int n = 1; n <= 8; ++n) {
        enumerate_compositions(n, std::nullopt, [&](const Composition& c) {
            auto by_content = testutil::content_multiset(enumerate_lr(c));
            testutil::enumerate_partitions(n, [&](const Partition& nu) {
                Int expected = by_content.count(nu) ? by_content[nu] : 0;
                CHECK(lr_coefficient(c, nu) == expected);
            });
        });
    }
}

TEST_CASE("mu_partition") {
    Composition alpha = comp({3, 1, 3, 1, 1, 5, 1, 5});
    auto s = compute_stats(alpha);
    // (13-M)(M+3) u 1^(4-u) for 0 <= M <= 5, 1 <= u <= 3
    CHECK(mu_partition(s, 20, 8, 2, 2) == part({11, 5, 2, 1, 1}));
    CHECK(mu_partition(s, 20, 8, 0, 1) == part({13, 3, 1, 1, 1, 1}));
    CHECK(mu_partition(s, 20, 8, 5, 3) == part({8, 8, 3, 1}));
    CHECK_THROWS_AS(mu_partition(s, 20, 8, 6, 1), DomainError);  // M > 5
    CHECK_THROWS_AS(mu_partition(s, 20, 8, 2, 0), DomainError);  // u = 0 needs S' = 0
    CHECK_THROWS_AS(mu_partition(s, 20, 8, 2, 4), DomainError);  // u > S'

    // degenerate u = 0 case: S' = 0 leaves (N-R+1-M)(R-k-1+delta+M)1^(k-delta)
    Composition lone = comp({1, 4, 1});
    auto ls = compute_stats(lone);
    CHECK(ls.s_prime == 0);
    CHECK(mu_partition(ls, 6, 3, 0, 0) == part({4, 2}));
    CHECK(mu_partition(ls, 6, 3, 1, 0) == part({3, 3}));
    CHECK_THROWS_AS(mu_partition(ls, 6, 3, 2, 0), DomainError);  // 2 > 1: not a partition

    // zero second part is dropped
    Composition row = comp({5});
    auto rs = compute_stats(row);
    CHECK(mu_partition(rs, 5, 1, 0, 0) == part({5}));
}

TEST_CASE("lattice_point_count") {
    auto s = compute_stats(comp({3, 1, 3, 1, 1, 5, 1, 5}));
    CHECK(lattice_point_count(s, 2) == 5);  // {110,101,020,011,002}
    auto t = compute_stats(comp({5, 1, 1, 1, 3, 3, 1, 5}));
    CHECK(lattice_point_count(t, 2) == 4);  // {110,101,011,002}
    CHECK(lattice_point_count(s, 0) == 1);
    CHECK(lattice_point_count(t, 0) == 1);
    CHECK(lattice_point_count(s, 99) == 0);
    CHECK_THROWS_AS(lattice_point_count(s, -1), DomainError);

    // brute-force box enumeration oracle
    for (Int m = 0; m <= 8; ++m) {
        Int expected = 0;
        for (Int x1 = 0; x1 <= 1; ++x1)
            for (Int x2 = 0; x2 <= 3; ++x2)
                for (Int x3 = 0; x3 <= 4; ++x3)
                    if (x1 + x2 + x3 == m) ++expected;
        CHECK(lattice_point_count(s, m) == expected);
    }
}

TEST_CASE("deep cells count k - delta in S' columns") {
    // cells with at least two cells above them in their column
    for (Int n = 2; n <= 14; ++n) {
        enumerate_compositions(n, std::nullopt, [&](const Composition& c) {
            if (c.is_all_ones()) return;
            auto s = compute_stats(c);
            RibbonShape shape(c);
            Int deep = 0;
            std::set<Int> deep_columns;
            for (const auto& [row, col] : shape.cells()) {
                int above = 0;
                for (int r = 0; r < row; ++r)
                    if (shape.left(r) <= col && col <= shape.right(r)) ++above;
                if (above >= 2) {
                    ++deep;
                    deep_columns.insert(col);
                }
            }
            CHECK(deep == s.k - s.delta);
            CHECK(static_cast<Int>(deep_columns.size()) == s.s_prime);
        });
    }
}

TEST_CASE("closed-form LR count for mu(M, u)") {
    // c_{alpha, mu(M,u)} = C(S'-1, u-1) * |E_{alpha,M}| for 0 <= M <= eps_0
    for (Int n = 2; n <= 14; ++n) {
        enumerate_compositions(n, std::nullopt, [&](const Composition& c) {
            if (c.is_all_ones()) return;
            auto s = compute_stats(c);
            for (Int m = 0; m <= s.epsilon.front(); ++m) {
                std::vector<Int> us;
                if (s.s_prime == 0)
                    us.push_back(0);
                else
                    for (Int u = 1; u <= s.s_prime; ++u) us.push_back(u);
                for (Int u : us) {
                    Partition mu = Partition();
                    try {
                        mu = mu_partition(s, c.size(), c.length(), m, u);
                    } catch (const DomainError&) {
                        continue;
                    }
                    Int factor = s.s_prime == 0 ? 1 : binomial(s.s_prime - 1, u - 1);
                    CHECK(lr_coefficient(c, mu) == factor * lattice_point_count(s, m));
                }
            }
        });
    }
}

TEST_CASE("example 3.10 coefficients") {
    Composition alpha = comp({3, 1, 3, 1, 1, 5, 1, 5});
    auto s = compute_stats(alpha);
    for (Int u = 1; u <= 3; ++u) {
        Partition mu = mu_partition(s, 20, 8, 2, u);
        CHECK(lr_coefficient(alpha, mu) == binomial(2, u - 1) * 5);
    }
}
