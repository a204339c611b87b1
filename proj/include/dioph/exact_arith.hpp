#pragma once

/**
 * Exact integer and rational primitives.
 *
 * Int is an arbitrary-precision signed integer; small values live inline so
 * large node sets stay cheap. Rat is always kept in lowest terms with a
 * positive denominator, which makes value equality structural and lets the
 * rational square test look at numerator and denominator separately.
 */

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "dioph/errors.hpp"

namespace dioph {

using Int = boost::multiprecision::cpp_int;

struct SqrtResult {
    Int root;
    bool exact = false;
};

// floor(sqrt(n)) by Newton iteration; exact is true iff root * root == n.
// Throws DomainError for n < 0.
SqrtResult int_sqrt(const Int& n);

// Nonnegative greatest common divisor; gcd(0, 0) == 0.
Int gcd(const Int& x, const Int& y);

Int parse_int(std::string_view text);
std::string to_string(const Int& v);

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(const Int& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rat(long long n) : num_(n), den_(1) {}   // NOLINT(google-explicit-constructor)
    Rat(Int n, Int d);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_.sign(); }

    // Throws DomainError unless the value is an integer.
    const Int& as_int() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& rhs);
    Rat& operator-=(const Rat& rhs);
    Rat& operator*=(const Rat& rhs);
    Rat& operator/=(const Rat& rhs);

    friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
    friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
    friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rat& lhs, const Rat& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs);

private:
    void normalize();

    Int num_;
    Int den_;
};

Rat abs(const Rat& q);
Rat square(const Rat& q);

// Accepts "p", "-p", "+p", "p/q" with optional sign; q must be nonzero.
Rat parse_rat(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& q);

// Returns |root| with root * root == q when q is the square of a rational.
std::optional<Rat> is_rational_square(const Rat& q);

}  // namespace dioph
