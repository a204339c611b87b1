#include "dioph/factor_tree.hpp"

#include <string>

namespace dioph {

namespace {

bool is_even_positive(const Int& x) { return x > 0 && !boost::multiprecision::bit_test(x, 0); }

Int exact_root(const Int& x, const Int& y, const char* who) {
    auto sq = int_sqrt(x * y + 1);
    if (!sq.exact) {
        throw PreconditionError(std::string(who) + ": " + to_string(x) + " * " + to_string(y) +
                                " + 1 is not a square");
    }
    return std::move(sq.root);
}

// Builds the four-way split from the four cell values; two-way factors are
// products of cells sharing a sign.
ElementFactors from_cells(const Int& value, Int pp, Int mp, Int pm, Int mm) {
    ElementFactors e;
    e.value = value;
    e.pO = pp * pm;
    e.mO = mp * mm;
    e.Op = pp * mp;
    e.Om = pm * mm;
    e.pp = std::move(pp);
    e.mp = std::move(mp);
    e.pm = std::move(pm);
    e.mm = std::move(mm);
    return e;
}

ElementFactors split(const Int& value, const Int& first, const Int& second) {
    const Int half = value / 2;
    ElementFactors e;
    e.value = value;
    e.pO = gcd(half, (first + 1) / 2);
    e.mO = gcd(half, (first - 1) / 2);
    e.Op = gcd(half, (second + 1) / 2);
    e.Om = gcd(half, (second - 1) / 2);
    e.pp = gcd(e.pO, e.Op);
    e.mp = gcd(e.mO, e.Op);
    e.pm = gcd(e.pO, e.Om);
    e.mm = gcd(e.mO, e.Om);
    return e;
}

void check_element(const ElementFactors& e, const char* name) {
    if (2 * e.pp * e.mp * e.pm * e.mm != e.value) {
        throw InvariantError(std::string("factor_triple: cells of ") + name + " do not multiply back");
    }
    if (gcd(e.pO, e.mO) != 1 || gcd(e.Op, e.Om) != 1) {
        throw InvariantError(std::string("factor_triple: two-way factors of ") + name +
                             " are not coprime");
    }
}

}  // namespace

FactorMatrix2 factor_double(const Int& a, const Int& b) {
    if (!is_even_positive(a) || !is_even_positive(b)) {
        throw DomainError("factor_double: both elements must be even and positive, got " +
                          to_string(a) + ", " + to_string(b));
    }
    const Int r = exact_root(a, b, "factor_double");
    FactorMatrix2 m;
    m.a = a;
    m.b = b;
    m.r = r;
    m.a_plus = gcd(a / 2, (r + 1) / 2);
    m.a_minus = gcd(a / 2, (r - 1) / 2);
    m.b_plus = gcd(b / 2, (r + 1) / 2);
    m.b_minus = gcd(b / 2, (r - 1) / 2);
    if (2 * m.a_plus * m.a_minus != a || 2 * m.b_plus * m.b_minus != b ||
        m.a_plus * m.b_plus + m.a_minus * m.b_minus != r || m.determinant() != 1) {
        throw InvariantError("factor_double: factor matrix invariants fail for (" + to_string(a) +
                             ", " + to_string(b) + ")");
    }
    return m;
}

std::pair<FactorMatrix2, FactorMatrix2> sb_children(const FactorMatrix2& m) {
    const Int top = m.b_minus + m.a_plus;
    const Int bottom = m.b_plus + m.a_minus;
    const Int shared = 2 * top * bottom;

    // | a+  b-+a+ |
    // | a-  b++a- |
    FactorMatrix2 keep_a;
    keep_a.a_plus = m.a_plus;
    keep_a.a_minus = m.a_minus;
    keep_a.b_minus = top;
    keep_a.b_plus = bottom;
    keep_a.a = m.a;
    keep_a.b = shared;
    keep_a.r = keep_a.a_plus * keep_a.b_plus + keep_a.a_minus * keep_a.b_minus;

    // | b-+a+  b- |
    // | b++a-  b+ |
    FactorMatrix2 keep_b;
    keep_b.a_plus = top;
    keep_b.a_minus = bottom;
    keep_b.b_minus = m.b_minus;
    keep_b.b_plus = m.b_plus;
    keep_b.a = shared;
    keep_b.b = m.b;
    keep_b.r = keep_b.a_plus * keep_b.b_plus + keep_b.a_minus * keep_b.b_minus;

    return {std::move(keep_a), std::move(keep_b)};
}

Int regular_triple_child(const FactorMatrix2& m) {
    return 2 * (m.b_minus + m.a_plus) * (m.b_plus + m.a_minus);
}

FactorArray3 factor_triple(const Int& a, const Int& b, const Int& c) {
    if (!is_even_positive(a) || !is_even_positive(b) || !is_even_positive(c)) {
        throw DomainError("factor_triple: all elements must be even and positive, got " + to_string(a) +
                          ", " + to_string(b) + ", " + to_string(c));
    }
    FactorArray3 f;
    f.r = exact_root(a, b, "factor_triple");
    f.s = exact_root(a, c, "factor_triple");
    f.t = exact_root(b, c, "factor_triple");
    f.a = split(a, f.r, f.s);
    f.b = split(b, f.r, f.t);
    f.c = split(c, f.s, f.t);
    check_element(f.a, "a");
    check_element(f.b, "b");
    check_element(f.c, "c");
    for (const Int& rel : unit_relations(f)) {
        if (rel != 1) {
            throw InvariantError("factor_triple: unit relation evaluates to " + to_string(rel));
        }
    }
    return f;
}

std::array<Int, 3> unit_relations(const FactorArray3& f) {
    const auto& a = f.a;
    const auto& b = f.b;
    const auto& c = f.c;
    return {a.pp * a.pm * b.pp * b.pm - a.mp * a.mm * b.mp * b.mm,
            a.pp * a.mp * c.pp * c.pm - a.pm * a.mm * c.mp * c.mm,
            b.pp * b.mp * c.pp * c.mp - b.pm * b.mm * c.pm * c.mm};
}

std::array<Int, 4> column(const FactorArray3& f, int which) {
    switch (which) {
        case 0: return {f.a.pp, f.a.pm, f.a.mp, f.a.mm};
        case 1: return {f.b.mp, f.b.mm, f.b.pm, f.b.pp};
        case 2: return {f.c.mm, f.c.pp, f.c.mp, f.c.pm};
        default: throw DomainError("column: index must be 0, 1 or 2");
    }
}

DFactors d_factors(const FactorArray3& f) {
    const auto& a = f.a;
    const auto& b = f.b;
    const auto& c = f.c;
    DFactors df;
    df.d1 = a.mp * b.mm * c.pm + a.pm * b.pp * c.mp;
    df.d2 = a.mm * b.mp * c.mp + a.pp * b.pm * c.pm;
    df.d3 = a.pp * b.pp * c.pp + a.mm * b.mm * c.mm;
    df.d4 = a.pm * b.pm * c.mm + a.mp * b.mp * c.pp;
    df.d = 2 * df.d1 * df.d2 * df.d3 * df.d4;

    const Int upper = a.value + b.value + c.value + 2 * a.value * b.value * c.value + 2 * f.r * f.s * f.t;
    if (df.d != upper) {
        throw InvariantError("d_factors: 2 d1 d2 d3 d4 = " + to_string(df.d) +
                             " differs from the AHS extension " + to_string(upper));
    }
    return df;
}

std::array<Int, 3> d_relations(const FactorArray3& f, const DFactors& df) {
    const auto& a = f.a;
    const auto& b = f.b;
    const auto& c = f.c;
    return {c.mp * c.pm * df.d3 * df.d4 - c.mm * c.pp * df.d1 * df.d2,
            a.pm * a.mp * df.d2 * df.d3 - a.pp * a.mm * df.d1 * df.d4,
            b.mp * b.pm * df.d1 * df.d3 - b.mm * b.pp * df.d2 * df.d4};
}

std::array<FactorArray3, 3> child_arrays(const FactorArray3& f, const DFactors& df) {
    const auto& a = f.a;
    const auto& b = f.b;
    const auto& c = f.c;
    // Roots of the pairs involving d, from the AHS witnesses.
    const Int ad = a.value * f.t + f.r * f.s;
    const Int bd = b.value * f.s + f.r * f.t;
    const Int cd = c.value * f.r + f.s * f.t;

    // Cells are placed so each displayed column reads, top to bottom,
    // x: ++ +- -+ --   y: -+ -- +- ++   z: -- ++ -+ +-
    // which is the same layout column() reports.
    FactorArray3 abd;
    //   a+- b-+ d4 / a++ b-- d3 / a-+ b++ d1 / a-- b+- d2
    abd.a = from_cells(a.value, a.pm, a.mp, a.pp, a.mm);
    abd.b = from_cells(b.value, b.pm, b.mp, b.pp, b.mm);
    abd.c = from_cells(df.d, df.d3, df.d1, df.d2, df.d4);
    abd.r = f.r;
    abd.s = ad;
    abd.t = bd;

    FactorArray3 acd;
    //   a-+ c-+ d1 / a++ c-- d3 / a+- c++ d4 / a-- c+- d2
    acd.a = from_cells(a.value, a.mp, a.pm, a.pp, a.mm);
    acd.b = from_cells(c.value, c.pm, c.mp, c.pp, c.mm);
    acd.c = from_cells(df.d, df.d3, df.d4, df.d2, df.d1);
    acd.r = f.s;
    acd.s = ad;
    acd.t = cd;

    FactorArray3 bcd;
    //   b-+ c+- d2 / b++ c-- d3 / b+- c++ d4 / b-- c-+ d1
    bcd.a = from_cells(b.value, b.mp, b.pm, b.pp, b.mm);
    bcd.b = from_cells(c.value, c.mp, c.pm, c.pp, c.mm);
    bcd.c = from_cells(df.d, df.d3, df.d4, df.d1, df.d2);
    bcd.r = f.t;
    bcd.s = bd;
    bcd.t = cd;

    return {std::move(abd), std::move(acd), std::move(bcd)};
}

BminusAFactors factor_b_minus_a(const FactorArray3& f) {
    if (f.b.value <= f.a.value) {
        throw PreconditionError("factor_b_minus_a: needs b > a");
    }
    const auto& a = f.a;
    const auto& b = f.b;
    const auto& c = f.c;
    BminusAFactors out;
    out.f1 = b.Op * a.Op * c.pp * c.pp - b.Om * a.Om * c.mm * c.mm;
    out.f2 = b.Op * a.Om * c.mp * c.mp - b.Om * a.Op * c.pm * c.pm;
    if (2 * out.f1 * boost::multiprecision::abs(out.f2) != b.value - a.value) {
        throw InvariantError("factor_b_minus_a: 2 f1 |f2| != b - a for (" + to_string(a.value) + ", " +
                             to_string(b.value) + ", " + to_string(c.value) + ")");
    }
    return out;
}

}  // namespace dioph
