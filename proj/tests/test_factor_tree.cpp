#include "doctest.h"

#include <set>

#include "dioph/descent_tree.hpp"
#include "dioph/factor_tree.hpp"
#include "dioph/quad_core.hpp"
#include "oracles.hpp"

using namespace dioph;

namespace {

std::array<Int, 4> cells(const ElementFactors& e) { return {e.pp, e.mp, e.pm, e.mm}; }

std::multiset<Int> as_multiset(const std::array<Int, 4>& v) { return {v.begin(), v.end()}; }

std::set<std::array<Int, 3>> harvest_even_triples(long long bound) {
    std::set<std::array<Int, 3>> out;
    for (const auto& q : enumerate_quadruples(bound)) {
        if (parity_of(q) != Parity::Even) continue;
        for (std::size_t skip = 0; skip < 4; ++skip) {
            std::array<Int, 3> t;
            std::size_t k = 0;
            for (std::size_t i = 0; i < 4; ++i) {
                if (i != skip) t[k++] = q[i];
            }
            out.insert(t);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("factor_double fixtures") {
    const auto m = factor_double(8, 120);
    CHECK(m.a_plus == 4);
    CHECK(m.a_minus == 1);
    CHECK(m.b_plus == 4);
    CHECK(m.b_minus == 15);
    CHECK(m.r == 31);
    CHECK(m.r == m.a_plus * m.b_plus + m.a_minus * m.b_minus);
    CHECK(m.determinant() == 1);

    const auto small = factor_double(2, 4);
    CHECK(small.a_plus == 1);
    CHECK(small.a_minus == 1);
    CHECK(small.b_plus == 2);
    CHECK(small.b_minus == 1);
    CHECK(small.r == 3);

    const auto m212 = factor_double(2, 12);
    CHECK(m212.b_plus == 3);
    CHECK(m212.b_minus == 2);
    CHECK(m212.r == 5);

    CHECK_THROWS_AS(factor_double(3, 5), DomainError);
    CHECK_THROWS_AS(factor_double(0, 4), DomainError);
    CHECK_THROWS_AS(factor_double(2, 6), PreconditionError);
}

TEST_CASE("Stern-Brocot children and regular triple child") {
    const auto [left, right] = sb_children(factor_double(2, 12));
    CHECK(left.a == 2);
    CHECK(left.b == 24);
    CHECK(left.r == 7);
    CHECK(right.a == 24);
    CHECK(right.b == 12);
    CHECK(right.r == 17);

    const auto [l2, r2] = sb_children(factor_double(2, 4));
    CHECK(l2.a == 2);
    CHECK(l2.b == 12);
    CHECK(l2.r == 5);
    CHECK(r2.a == 12);
    CHECK(r2.b == 4);
    CHECK(r2.r == 7);

    CHECK(regular_triple_child(factor_double(8, 120)) == 190);
    CHECK(regular_triple_child(factor_double(2, 4)) == 12);
    CHECK(regular_triple_child(factor_double(2, 12)) == 24);
}

TEST_CASE("Stern-Brocot descendants stay unimodular and Diophantine") {
    std::vector<FactorMatrix2> level{factor_double(2, 4)};
    for (int depth = 0; depth < 8; ++depth) {
        std::vector<FactorMatrix2> next;
        for (const auto& m : level) {
            CHECK(m.determinant() == 1);
            CHECK(m.a * m.b + 1 == m.r * m.r);
            CHECK(factor_double(m.a, m.b) == m);
            const Int c = regular_triple_child(m);
            CHECK(c == m.a + m.b + 2 * m.r);
            const auto [l, r] = sb_children(m);
            CHECK(l.b == c);
            CHECK(r.a == c);
            next.push_back(l);
            next.push_back(r);
        }
        level = std::move(next);
    }
}

TEST_CASE("factor_triple fixtures") {
    const auto f = factor_triple(2, 12, 420);
    CHECK(cells(f.a) == std::array<Int, 4>{1, 1, 1, 1});
    CHECK(cells(f.b) == std::array<Int, 4>{3, 2, 1, 1});
    CHECK(cells(f.c) == std::array<Int, 4>{3, 2, 5, 7});
    CHECK(f.c.pp * f.c.pm - f.c.mp * f.c.mm == 1);
    CHECK(unit_relations(f) == std::array<Int, 3>{1, 1, 1});

    const auto g = factor_triple(8, 120, 190);
    CHECK(cells(g.a) == std::array<Int, 4>{4, 1, 1, 1});
    CHECK(cells(g.b) == std::array<Int, 4>{4, 1, 1, 15});
    CHECK(cells(g.c) == std::array<Int, 4>{1, 19, 5, 1});
    CHECK(unit_relations(g) == std::array<Int, 3>{1, 1, 1});

    CHECK_THROWS_AS(factor_triple(1, 3, 8), DomainError);
    CHECK_THROWS_AS(factor_triple(2, 4, 14), PreconditionError);
}

TEST_CASE("d_factors, d_relations and b - a") {
    const auto f = factor_triple(2, 12, 420);
    const auto df = d_factors(f);
    CHECK(df.d1 == 11);
    CHECK(df.d2 == 9);
    CHECK(df.d3 == 16);
    CHECK(df.d4 == 13);
    CHECK(df.d == 41184);
    CHECK(d_relations(f, df) == std::array<Int, 3>{1, 1, 1});

    const auto g = factor_triple(8, 120, 190);
    const auto dg = d_factors(g);
    CHECK(dg.d1 == 151);
    CHECK(dg.d2 == 39);
    CHECK(dg.d3 == 31);
    CHECK(dg.d4 == 2);
    CHECK(dg.d == 730236);

    const auto ba = factor_b_minus_a(f);
    CHECK(ba.f1 == 5);
    CHECK(ba.f2 == -1);
    const auto bg = factor_b_minus_a(g);
    CHECK(bg.f1 == 1);
    CHECK(abs(bg.f2) == 56);
    const auto bs = factor_b_minus_a(factor_triple(2, 4, 12));
    CHECK(bs.f1 == 1);
    CHECK(abs(bs.f2) == 1);
    CHECK_THROWS_AS(factor_b_minus_a(factor_triple(12, 2, 420)), PreconditionError);
}

TEST_CASE("child arrays of (2, 12, 420)") {
    const auto f = factor_triple(2, 12, 420);
    const auto df = d_factors(f);
    const auto kids = child_arrays(f, df);
    const auto& abd = kids[0];
    CHECK(abd.c.value == 41184);
    CHECK(column(abd, 2) == std::array<Int, 4>{13, 16, 11, 9});
    CHECK(as_multiset(cells(factor_triple(2, 12, 41184).c)) == std::multiset<Int>{16, 11, 9, 13});
    CHECK(2 * 13 * 16 * 11 * 9 == 41184);
    for (const auto& k : kids) {
        if (k.a.value == 2) CHECK(column(k, 0) == std::array<Int, 4>{1, 1, 1, 1});
    }
}

TEST_CASE("factor-tree invariants over harvested even triples") {
    const auto triples = harvest_even_triples(10000000);
    REQUIRE(triples.size() > 100);
    for (const auto& [a, b, c] : triples) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        const auto f = factor_triple(a, b, c);
        // Cells agree with the definition computed in plain integers.
        const auto oa = oracle::split(static_cast<long long>(a), static_cast<long long>(f.r),
                                      static_cast<long long>(f.s));
        CHECK(f.a.pp == oa.pp);
        CHECK(f.a.mm == oa.mm);
        CHECK(unit_relations(f) == std::array<Int, 3>{1, 1, 1});
        for (const auto* e : {&f.a, &f.b, &f.c}) {
            CHECK(2 * e->pp * e->mp * e->pm * e->mm == e->value);
        }
        const auto df = d_factors(f);
        CHECK(df.d == ahs_extend(a, b, c).upper);
        CHECK(d_relations(f, df) == std::array<Int, 3>{1, 1, 1});
        const auto kids = child_arrays(f, df);
        const std::array<std::array<Int, 3>, 3> kid_triples{
            std::array<Int, 3>{a, b, df.d}, {a, c, df.d}, {b, c, df.d}};
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& k = kids[i];
            CHECK(std::array<Int, 3>{k.a.value, k.b.value, k.c.value} == kid_triples[i]);
            const auto re = factor_triple(k.a.value, k.b.value, k.c.value);
            for (int col = 0; col < 3; ++col) {
                const auto got = column(k, col);
                CHECK(2 * got[0] * got[1] * got[2] * got[3] == kid_triples[i][col]);
                CHECK(as_multiset(got) == as_multiset(column(re, col)));
            }
        }
        if (b > a) {
            const auto ba = factor_b_minus_a(f);
            CHECK(2 * ba.f1 * abs(ba.f2) == b - a);
            // c (b - a) = (t - s)(t + s)
            CHECK(c * (b - a) == (f.t - f.s) * (f.t + f.s));
        }
    }
}
