#include "dioph/exact_arith.hpp"

#include <cctype>

namespace dioph {

SqrtResult int_sqrt(const Int& n) {
    if (n < 0) {
        throw DomainError("int_sqrt: negative input " + to_string(n));
    }
    if (n < 2) {
        return {n, true};
    }
    // Start above the root: 2^(floor(msb/2) + 1) > sqrt(n).
    const auto msb = boost::multiprecision::msb(n);
    Int x = Int(1) << (msb / 2 + 1);
    for (;;) {
        Int next = (x + n / x) >> 1;
        if (next >= x) {
            break;
        }
        x = std::move(next);
    }
    // Newton from above lands on floor(sqrt(n)); the adjustments only fire if
    // that ever stops being true.
    while (x * x > n) {
        --x;
    }
    while ((x + 1) * (x + 1) <= n) {
        ++x;
    }
    const bool exact = x * x == n;
    return {std::move(x), exact};
}

Int gcd(const Int& x, const Int& y) {
    Int a = boost::multiprecision::abs(x);
    Int b = boost::multiprecision::abs(y);
    while (b != 0) {
        Int r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Int parse_int(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) {
        throw ParseError("not an integer: '" + std::string(text) + "'");
    }
    Int v{std::string(body)};
    return negative ? Int(-v) : v;
}

std::string to_string(const Int& v) { return v.str(); }

Rat::Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) {
        throw DomainError("Rat: zero denominator");
    }
    normalize();
}

void Rat::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

const Int& Rat::as_int() const {
    if (den_ != 1) {
        throw DomainError("not an integer: " + to_string(*this));
    }
    return num_;
}

Rat Rat::operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
}

Rat& Rat::operator+=(const Rat& rhs) {
    if (den_ == 1 && rhs.den_ == 1) {
        num_ += rhs.num_;
        return *this;
    }
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rat& Rat::operator-=(const Rat& rhs) { return *this += -rhs; }

Rat& Rat::operator*=(const Rat& rhs) {
    num_ *= rhs.num_;
    if (den_ == 1 && rhs.den_ == 1) {
        return *this;
    }
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
    if (rhs.num_ == 0) {
        throw DomainError("Rat: division by zero");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs) {
    const Int l = lhs.num_ * rhs.den_;
    const Int r = rhs.num_ * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rat abs(const Rat& q) { return q.sign() < 0 ? -q : q; }

Rat square(const Rat& q) { return q * q; }

Rat parse_rat(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_int(text));
    }
    const std::string_view den_text = text.substr(slash + 1);
    // Sign belongs on the numerator only.
    if (!all_digits(den_text)) {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    Int num;
    try {
        num = parse_int(text.substr(0, slash));
    } catch (const ParseError&) {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    Int den(std::string{den_text});
    if (den == 0) {
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    }
    return Rat(std::move(num), std::move(den));
}

std::string to_string(const Rat& q) {
    if (q.is_integer()) {
        return to_string(q.num());
    }
    return to_string(q.num()) + "/" + to_string(q.den());
}

std::optional<Rat> is_rational_square(const Rat& q) {
    if (q.sign() < 0) {
        return std::nullopt;
    }
    auto n = int_sqrt(q.num());
    if (!n.exact) {
        return std::nullopt;
    }
    auto d = int_sqrt(q.den());
    if (!d.exact) {
        return std::nullopt;
    }
    return Rat(std::move(n.root), std::move(d.root));
}

}  // namespace dioph
