#include "dioph/quad_core.hpp"

#include <algorithm>

namespace dioph {

Tuple::Tuple(std::vector<Rat> elems) : elems_(std::move(elems)) {
    if (elems_.size() < kMinSize || elems_.size() > kMaxSize) {
        throw DomainError("tuple length must be between 2 and 6, got " +
                          std::to_string(elems_.size()));
    }
}

Tuple Tuple::from_quad(const Quad& q) {
    return Tuple(std::vector<Rat>{Rat(q[0]), Rat(q[1]), Rat(q[2]), Rat(q[3])});
}

Tuple Tuple::canonical() const {
    auto sorted = elems_;
    std::sort(sorted.begin(), sorted.end());
    return Tuple(std::move(sorted));
}

std::string to_string(const Tuple& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ", ";
        out += to_string(t[i]);
    }
    return out + ")";
}

std::string to_string(const Quad& q) {
    std::string out = "(";
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (i) out += ", ";
        out += to_string(q[i]);
    }
    return out + ")";
}

namespace {

template <typename T>
T eval_P_impl(const T& a, const T& b, const T& c, const T& d) {
    const T sq = a * a + b * b + c * c + d * d;
    const T pairs = a * b + a * c + a * d + b * c + b * d + c * d;
    return sq - 2 * pairs - 4 * a * b * c * d - 4;
}

}  // namespace

Rat eval_P(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    const Rat sq = a * a + b * b + c * c + d * d;
    const Rat pairs = a * b + a * c + a * d + b * c + b * d + c * d;
    return sq - Rat(2) * pairs - Rat(4) * a * b * c * d - Rat(4);
}

Int eval_P(const Quad& q) { return eval_P_impl<Int>(q[0], q[1], q[2], q[3]); }

IdentityTriple::IdentityTriple(Rat m, Rat x, Rat y, const Rat& p)
    : m_(std::move(m)), x_(std::move(x)), y_(std::move(y)) {
    if (!residual(p).is_zero()) {
        throw PreconditionError("IdentityTriple: M != Y^2 - X^2 P (residual " +
                                to_string(residual(p)) + ")");
    }
}

Rat IdentityTriple::residual(const Rat& p) const { return m_ - (y_ * y_ - x_ * x_ * p); }

std::vector<IdentityTerms> identity_family(const Rat& a, const Rat& b, const Rat& c,
                                           const Rat& d) {
    const Rat one(1);
    const Rat two(2);
    const Rat four(4);
    const Rat ab = a * b + one;
    const Rat ac = a * c + one;
    const Rat ad = a * d + one;
    const Rat bc = b * c + one;
    const Rat bd = b * d + one;
    const Rat cd = c * d + one;

    std::vector<IdentityTerms> out;
    out.reserve(12);

    // (v - others - 2*prod(others))^2 - 4 prod(pair products + 1 among others)
    out.push_back({"cubic:d", four * ab * ac * bc, one, d - a - b - c - two * a * b * c});
    out.push_back({"cubic:c", four * ab * ad * bd, one, c - a - b - d - two * a * b * d});
    out.push_back({"cubic:b", four * ac * ad * cd, one, b - a - c - d - two * a * c * d});
    out.push_back({"cubic:a", four * bc * bd * cd, one, a - b - c - d - two * b * c * d});

    out.push_back({"pair:ab|cd", four * ab * cd, one, c + d - a - b});
    out.push_back({"pair:ad|bc", four * ad * bc, one, c + b - a - d});
    out.push_back({"pair:bd|ac", four * bd * ac, one, c + a - b - d});

    out.push_back({"centered:a", four * ad * ab * ac, a, a * a - d * a - b * a - c * a - two});
    out.push_back({"centered:b", four * ab * bd * bc, b, b * b - a * b - b * d - c * b - two});
    out.push_back({"centered:c", four * ac * bc * cd, c, c * c - a * c - b * c - c * d - two});
    out.push_back({"centered:d", four * ad * bd * cd, d, d * d - a * d - b * d - c * d - two});

    const Rat abcd = a * b * c * d;
    const Rat sum = a + b + c + d;
    const Rat y6 = abcd * sum + two * (a * b * c + a * b * d + b * c * d + a * c * d) + sum;
    out.push_back({"six-product", four * ab * ac * ad * bc * bd * cd, abcd - one, y6});
    return out;
}

std::vector<IdentityResidual> identity_suite(const Rat& a, const Rat& b, const Rat& c,
                                             const Rat& d) {
    const Rat p = eval_P(a, b, c, d);
    std::vector<IdentityResidual> out;
    for (auto& term : identity_family(a, b, c, d)) {
        out.push_back({term.name, term.m - (term.y * term.y - term.x * term.x * p)});
    }

    const Rat one(1);
    auto r = is_rational_square(a * b + one);
    auto s = is_rational_square(a * c + one);
    auto t = is_rational_square(b * c + one);
    if (r && s && t) {
        const Rat u = a * *t + *r * *s;
        const Rat lhs = (*r * *r - one) * (*s * *s - one);
        const Rat rhs = square(*r * *s - u) - a * a;
        out.push_back({"construction", lhs - rhs});
    }
    return out;
}

std::pair<IdentityTriple, IdentityTriple> combine(const IdentityTriple& i1, const IdentityTriple& i2,
                                                  const Rat& p) {
    const Rat m = i1.m() * i2.m();
    const Rat yy = i1.y() * i2.y();
    const Rat xxp = i1.x() * i2.x() * p;
    const Rat xy = i1.x() * i2.y();
    const Rat yx = i2.x() * i1.y();
    return {IdentityTriple(m, xy - yx, yy - xxp, p), IdentityTriple(m, xy + yx, yy + xxp, p)};
}

DiophantineCheck is_diophantine(const Tuple& t) {
    DiophantineCheck out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].sign() <= 0) {
            out.reason = "element " + std::to_string(i) + " is not positive";
            return out;
        }
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (t[i] == t[j]) {
                out.failing_pair = {i, j};
                out.reason = "elements " + std::to_string(i) + " and " + std::to_string(j) +
                             " are equal";
                return out;
            }
            auto root = is_rational_square(t[i] * t[j] + Rat(1));
            if (!root) {
                out.failing_pair = {i, j};
                out.reason = to_string(t[i]) + " * " + to_string(t[j]) + " + 1 is not a square";
                return out;
            }
            out.roots.push_back(std::move(*root));
        }
    }
    out.ok = true;
    return out;
}

namespace {

Int checked_root(const Int& x, const Int& y, const char* pair) {
    auto sq = int_sqrt(x * y + 1);
    if (!sq.exact) {
        throw PreconditionError(std::string("ahs_extend: not a Diophantine triple, pair ") + pair +
                                ": " + to_string(x) + " * " + to_string(y) +
                                " + 1 is not a square");
    }
    return std::move(sq.root);
}

}  // namespace

AhsExtension ahs_extend(const Int& a, const Int& b, const Int& c) {
    if (a * b + 1 < 0 || a * c + 1 < 0 || b * c + 1 < 0) {
        throw PreconditionError("ahs_extend: pairwise products + 1 must be nonnegative");
    }
    TripleWitness w;
    w.r = checked_root(a, b, "(a, b)");
    w.s = checked_root(a, c, "(a, c)");
    w.t = checked_root(b, c, "(b, c)");
    w.u = a * w.t + w.r * w.s;

    const Int base = a + b + c + 2 * a * b * c;
    const Int rst2 = 2 * w.r * w.s * w.t;
    return {base + rst2, base - rst2, std::move(w)};
}

Int other_root(const Quad& q, std::size_t index) {
    if (index >= 4) {
        throw DomainError("root_swap: index " + std::to_string(index) + " out of range");
    }
    Int sum = 0;
    Int prod = 1;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i == index) continue;
        sum += q[i];
        prod *= q[i];
    }
    // Roots of P as a quadratic in the slot sum to 2(sum + 2 prod).
    return 2 * (sum + 2 * prod) - q[index];
}

Quad root_swap(const Quad& q, std::size_t index) {
    if (index >= 4) {
        throw DomainError("root_swap: index " + std::to_string(index) + " out of range");
    }
    if (eval_P(q) != 0) {
        throw PreconditionError("root_swap: " + to_string(q) + " is not a solution of P = 0");
    }
    Quad out = q;
    out[index] = other_root(q, index);
    return out;
}

bool is_regular(const Tuple& t) {
    if (t.size() == 4) {
        return eval_P(t[0], t[1], t[2], t[3]).is_zero();
    }
    if (t.size() == 3) {
        return eval_P(t[0], t[1], t[2], Rat(0)).is_zero();
    }
    throw DomainError("is_regular: needs 3 or 4 elements, got " + std::to_string(t.size()));
}

CorollaryResult square_product_corollary(const Int& a, const Int& b, const Int& c) {
    if (a <= 0 || b <= 0 || c <= 0 || a == b || a == c || b == c) {
        throw PreconditionError("square_product_corollary: needs distinct positive integers");
    }
    auto sq = int_sqrt((a * b + 1) * (a * c + 1) * (b * c + 1));
    if (!sq.exact) {
        return {};
    }
    if (!is_diophantine(Tuple{Rat(a), Rat(b), Rat(c)}).ok) {
        throw InvariantError("square_product_corollary: square product but (" + to_string(a) +
                             ", " + to_string(b) + ", " + to_string(c) +
                             ") is not a Diophantine triple");
    }
    return {true, std::move(sq.root)};
}

}  // namespace dioph
