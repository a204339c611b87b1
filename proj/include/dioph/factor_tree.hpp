#pragma once

/**
 * A Stern-Brocot style tree built from gcd factors of even Diophantine
 * doubles and triples.
 *
 * For an even double (a, b) with ab + 1 = r^2 the factors
 *   a+ = gcd(a/2, (r+1)/2),  a- = gcd(a/2, (r-1)/2)   (same for b)
 * form a 2x2 matrix of determinant one. For an even triple each element
 * splits into four factors, one per sign pair of its two square roots,
 * giving a 4x3 array that obeys three unit relations. AHS extension adds a
 * fourth element whose factors d1..d4 are sums of products of the array,
 * and the three child arrays reuse two of the parent's columns.
 *
 * Conventions: r pairs (a, b), s pairs (a, c), t pairs (b, c); "+" always
 * goes with (root + 1)/2 for a nonnegative root.
 */

#include <array>
#include <utility>

#include "dioph/exact_arith.hpp"

namespace dioph {

struct FactorMatrix2 {
    Int a_plus;
    Int a_minus;
    Int b_plus;
    Int b_minus;
    // Source double and its root.
    Int a;
    Int b;
    Int r;

    // a_plus * b_plus - a_minus * b_minus
    Int determinant() const { return a_plus * b_plus - a_minus * b_minus; }

    friend bool operator==(const FactorMatrix2&, const FactorMatrix2&) = default;
};

FactorMatrix2 factor_double(const Int& a, const Int& b);

// The two mediant children: first keeps the a column, second keeps the b column.
std::pair<FactorMatrix2, FactorMatrix2> sb_children(const FactorMatrix2& m);

// c = 2 (b- + a+)(b+ + a-), the element shared by both children; equals a + b + 2r.
Int regular_triple_child(const FactorMatrix2& m);

// Four-way split of one element. `first` and `second` are the two roots the
// element participates in (a: r, s; b: r, t; c: s, t).
struct ElementFactors {
    Int value;
    Int pO;  // gcd(value/2, (first+1)/2)
    Int mO;  // gcd(value/2, (first-1)/2)
    Int Op;  // gcd(value/2, (second+1)/2)
    Int Om;  // gcd(value/2, (second-1)/2)
    Int pp;  // gcd(pO, Op)
    Int mp;  // gcd(mO, Op)
    Int pm;  // gcd(pO, Om)
    Int mm;  // gcd(mO, Om)

    friend bool operator==(const ElementFactors&, const ElementFactors&) = default;
};

struct FactorArray3 {
    ElementFactors a;
    ElementFactors b;
    ElementFactors c;
    Int r;
    Int s;
    Int t;

    friend bool operator==(const FactorArray3&, const FactorArray3&) = default;
};

FactorArray3 factor_triple(const Int& a, const Int& b, const Int& c);

// Each entry is 1 for a valid array:
//   a++ a+- b++ b+- - a-+ a-- b-+ b--
//   a++ a-+ c++ c+- - a+- a-- c-+ c--
//   b++ b-+ c++ c-+ - b+- b-- c+- c--
std::array<Int, 3> unit_relations(const FactorArray3& f);

// One column of the displayed array, top to bottom:
//   a: ++ +- -+ --   b: -+ -- +- ++   c: -- ++ -+ +-
std::array<Int, 4> column(const FactorArray3& f, int which);

struct DFactors {
    Int d1;
    Int d2;
    Int d3;
    Int d4;
    Int d;  // 2 d1 d2 d3 d4

    friend bool operator==(const DFactors&, const DFactors&) = default;
};

DFactors d_factors(const FactorArray3& f);

// Each entry is 1:
//   c-+ c+- d3 d4 - c-- c++ d1 d2
//   a+- a-+ d2 d3 - a++ a-- d1 d4
//   b-+ b+- d1 d3 - b-- b++ d2 d4
std::array<Int, 3> d_relations(const FactorArray3& f, const DFactors& df);

// Arrays for (a, b, d), (a, c, d), (b, c, d), laid out like the parent.
std::array<FactorArray3, 3> child_arrays(const FactorArray3& f, const DFactors& df);

struct BminusAFactors {
    Int f1;
    Int f2;
};

// f1 = bO+ aO+ c++^2 - bO- aO- c--^2,  f2 = bO+ aO- c-+^2 - bO- aO+ c+-^2,
// with 2 f1 |f2| = b - a.
BminusAFactors factor_b_minus_a(const FactorArray3& f);

}  // namespace dioph
