#pragma once

// The quadruple polynomial
//   P(a,b,c,d) = a^2+b^2+c^2+d^2 - 2(ab+ac+ad+bc+bd+cd) - 4abcd - 4,
// its identity family M = Y^2 - X^2 P, AHS extension and root swaps.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dioph/exact_arith.hpp"

namespace dioph {

// Integer quadruple in caller-chosen order (not necessarily sorted).
using Quad = std::array<Int, 4>;

// 2 to 6 exact rational elements.
class Tuple {
public:
    static constexpr std::size_t kMinSize = 2;
    static constexpr std::size_t kMaxSize = 6;

    explicit Tuple(std::vector<Rat> elems);
    Tuple(std::initializer_list<Rat> elems) : Tuple(std::vector<Rat>(elems)) {}
    static Tuple from_quad(const Quad& q);

    const std::vector<Rat>& elems() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    const Rat& operator[](std::size_t i) const { return elems_[i]; }

    // Sorted ascending copy.
    Tuple canonical() const;

    friend bool operator==(const Tuple&, const Tuple&) = default;

private:
    std::vector<Rat> elems_;
};

std::string to_string(const Tuple& t);
std::string to_string(const Quad& q);

Rat eval_P(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
Int eval_P(const Quad& q);

// Square roots certifying a Diophantine triple, plus the AHS root u = at + rs.
struct TripleWitness {
    Int r;
    Int s;
    Int t;
    Int u;
};

// M = Y^2 - X^2 P for a fixed value of P; the constructor rejects triples
// that do not satisfy it.
class IdentityTriple {
public:
    IdentityTriple(Rat m, Rat x, Rat y, const Rat& p);

    const Rat& m() const { return m_; }
    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }

    Rat residual(const Rat& p) const;

    friend bool operator==(const IdentityTriple&, const IdentityTriple&) = default;

private:
    Rat m_;
    Rat x_;
    Rat y_;
};

// One member of the identity family with its independently computed sides.
struct IdentityTerms {
    std::string name;
    Rat m;  // product-of-squares side, evaluated directly
    Rat x;
    Rat y;
};

struct IdentityResidual {
    std::string name;
    Rat residual;
};

// The twelve polynomial identities: four "cubic:<v>", three "pair:<..>",
// four "centered:<v>" and "six-product".
std::vector<IdentityTerms> identity_family(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

// M - (Y^2 - X^2 P) for the twelve identities. When ab+1, ac+1 and bc+1 are
// all rational squares a thirteenth entry "construction" checks
// (r^2 - 1)(s^2 - 1) = (rs - u)^2 - a^2 with u = at + rs.
std::vector<IdentityResidual> identity_suite(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

// Both sign variants of the product rule:
//   first:  Y = Y1 Y2 - X1 X2 P, X = X1 Y2 - X2 Y1
//   second: Y = Y1 Y2 + X1 X2 P, X = X1 Y2 + X2 Y1
std::pair<IdentityTriple, IdentityTriple> combine(const IdentityTriple& i1, const IdentityTriple& i2,
                                                  const Rat& p);

struct DiophantineCheck {
    bool ok = false;
    // Nonnegative roots of x_i x_j + 1 in pair order (0,1),(0,2),...; only
    // complete when ok.
    std::vector<Rat> roots;
    // First pair that is not distinct or whose product + 1 is not a square.
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    std::string reason;
};

DiophantineCheck is_diophantine(const Tuple& t);

struct AhsExtension {
    Int upper;  // a + b + c + 2abc + 2rst
    Int lower;  // a + b + c + 2abc - 2rst
    TripleWitness witness;
};

// Throws PreconditionError naming the first pair whose product + 1 is not a
// perfect square.
AhsExtension ahs_extend(const Int& a, const Int& b, const Int& c);

// Replace q[index] by the other root of P viewed as a quadratic in that slot.
Quad root_swap(const Quad& q, std::size_t index);

// Value of the other root without building a new quad; q need not solve P.
Int other_root(const Quad& q, std::size_t index);

// 4 elements: P = 0. 3 elements: P(a,b,c,0) = 0. Others: DomainError.
bool is_regular(const Tuple& t);

struct CorollaryResult {
    bool is_triple = false;
    std::optional<Int> x;
};

// If (ab+1)(ac+1)(bc+1) = x^2 then (a,b,c) is a Diophantine triple.
// Throws InvariantError should that ever fail.
CorollaryResult square_product_corollary(const Int& a, const Int& b, const Int& c);

}  // namespace dioph
