#include "doctest.h"

#include <random>

#include "dioph/exact_arith.hpp"
#include "oracles.hpp"

using namespace dioph;

TEST_CASE("int_sqrt fixtures") {
    CHECK(int_sqrt(0).root == 0);
    CHECK(int_sqrt(0).exact);
    CHECK(int_sqrt(1).exact);
    CHECK(int_sqrt(961).root == 31);
    CHECK(int_sqrt(961).exact);
    CHECK(int_sqrt(962).root == 31);
    CHECK_FALSE(int_sqrt(962).exact);
    CHECK(int_sqrt(960).root == 30);
    CHECK_THROWS_AS(int_sqrt(-1), DomainError);
}

TEST_CASE("int_sqrt brackets the root for small and huge inputs") {
    std::mt19937_64 gen(7);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = gen() >> (gen() % 64);
        const auto r = int_sqrt(Int(n));
        CHECK(r.root == Int(oracle::isqrt(n)));
        CHECK(r.exact == (r.root * r.root == Int(n)));
    }
    for (int bits = 64; bits <= 1024; bits += 37) {
        const Int x = (Int(1) << bits) + Int(gen());
        const Int sq = x * x;
        CHECK(int_sqrt(sq).root == x);
        CHECK(int_sqrt(sq).exact);
        const auto below = int_sqrt(sq - 1);
        CHECK(below.root == x - 1);
        CHECK_FALSE(below.exact);
        const auto above = int_sqrt(sq + 2 * x);
        CHECK(above.root == x);
        CHECK_FALSE(above.exact);
    }
}

TEST_CASE("gcd") {
    CHECK(gcd(4, 16) == 4);
    CHECK(gcd(60, 15) == 15);
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(0, 0) == 0);
    CHECK(gcd(-12, 18) == 6);
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        const long long x = dist(gen), y = dist(gen);
        const Int g = gcd(x, y);
        CHECK(g == Int(std::gcd(x, y)));
        CHECK(g == gcd(y, x));
        if (g != 0) {
            CHECK(Int(x) % g == 0);
            CHECK(Int(y) % g == 0);
        }
    }
}

TEST_CASE("Rat stays in lowest terms with positive denominator") {
    const Rat q(Int(665), Int(152));
    CHECK(q.num() == 35);
    CHECK(q.den() == 8);
    const Rat neg(Int(3), Int(-6));
    CHECK(neg.num() == -1);
    CHECK(neg.den() == 2);
    CHECK(Rat(Int(0), Int(-5)) == Rat(0));
    CHECK(Rat(Int(0), Int(-5)).den() == 1);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), DomainError);
    CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
    CHECK(Rat(4).as_int() == 4);
    CHECK_THROWS_AS(Rat(Int(1), Int(2)).as_int(), DomainError);
}

TEST_CASE("Rat arithmetic agrees with an independent rational type") {
    oracle::RatSource src(3);
    auto mirror = [](const Rat& q) { return oracle::BigRat(q.num(), q.den()); };
    auto from = [](const oracle::BigRat& q) {
        return Rat(numerator(q), denominator(q));
    };
    for (int i = 0; i < 2000; ++i) {
        const auto x = src.next();
        const auto y = src.next();
        const Rat a = from(x), b = from(y);
        CHECK(mirror(a + b) == x + y);
        CHECK(mirror(a - b) == x - y);
        CHECK(mirror(a * b) == x * y);
        if (y != 0) CHECK(mirror(a / b) == x / y);
        CHECK((a < b) == (x < y));
        CHECK((a == b) == (x == y));
    }
}

TEST_CASE("is_rational_square") {
    CHECK(is_rational_square(Rat(Int(169), Int(144))) == Rat(Int(13), Int(12)));
    CHECK(Rat(Int(5), Int(36)) * Rat(Int(5), Int(4)) + 1 == Rat(Int(169), Int(144)));
    CHECK_FALSE(is_rational_square(Rat(Int(3), Int(2))).has_value());
    CHECK(is_rational_square(Rat(0)) == Rat(0));
    CHECK_FALSE(is_rational_square(Rat(-4)).has_value());
    CHECK_FALSE(is_rational_square(Rat(Int(4), Int(3))).has_value());

    std::mt19937_64 gen(5);
    std::uniform_int_distribution<long long> dist(1, 100000);
    for (int i = 0; i < 1000; ++i) {
        const Rat root(Int(dist(gen)), Int(dist(gen)));
        CHECK(is_rational_square(root * root) == root);
        CHECK(is_rational_square(-root * root) == std::nullopt);
    }
}

TEST_CASE("parsing and printing") {
    CHECK(parse_int("120") == 120);
    CHECK(parse_int("-7") == -7);
    CHECK(parse_int("+7") == 7);
    CHECK(parse_int("123456789012345678901234567890") == Int("123456789012345678901234567890"));
    for (const char* bad : {"", "-", "1.5", "1e9", " 3", "0x10", "3a"}) {
        CHECK_THROWS_AS(parse_int(bad), ParseError);
    }
    CHECK(parse_rat("665/152") == Rat(Int(35), Int(8)));
    CHECK(parse_rat("-3/6") == Rat(Int(-1), Int(2)));
    CHECK(parse_rat("+3/6") == Rat(Int(1), Int(2)));
    CHECK(parse_rat("12") == Rat(12));
    for (const char* bad : {"1/0", "1/", "/2", "1/-2", "1/2/3", "a/b", "1//2"}) {
        CHECK_THROWS_AS(parse_rat(bad), ParseError);
    }
    CHECK(to_string(Rat(Int(-1), Int(2))) == "-1/2");
    CHECK(to_string(Rat(Int(4), Int(2))) == "2");

    oracle::RatSource src(19);
    for (int i = 0; i < 1000; ++i) {
        const auto x = src.next() * src.next() * 1000003;
        const Rat q(numerator(x), denominator(x));
        CHECK(parse_rat(to_string(q)) == q);
    }
}
