#include "doctest.h"

#include <algorithm>

#include "dioph/rational_tuples.hpp"
#include "oracles.hpp"

using namespace dioph;

namespace {

Rat R(long long p, long long q = 1) { return Rat(Int(p), Int(q)); }

oracle::BigRat big(const Rat& q) { return oracle::BigRat(q.num(), q.den()); }

// Independent 15-pair square check.
bool oracle_diophantine(const std::vector<Rat>& e) {
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (!oracle::rat_is_square(big(e[i]) * big(e[j]) + 1)) return false;
    return true;
}

bool oracle_regular(const std::vector<Rat>& e, const IndexSubset& s) {
    const oracle::BigRat d = s.size() == 4 ? big(e[s[3]]) : oracle::BigRat(0);
    return oracle::P(big(e[s[0]]), big(e[s[1]]), big(e[s[2]]), d) == 0;
}

bool has(const std::vector<IndexSubset>& v, const IndexSubset& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("dataset loads verbatim") {
    const auto rows = load_sextuple_dataset();
    REQUIRE(rows.size() == 12);
    CHECK(rows[0].elems ==
          std::vector<Rat>{R(11, 192), R(35, 192), R(155, 27), R(512, 27), R(1235, 48), R(180873, 16)});
    CHECK(rows[11].elems == std::vector<Rat>{R(9, 140), R(47, 105), R(608, 105), R(1225, 12), R(347072, 176505),
                                             R(121275, 6724)});
    CHECK(rows[9].elems[4] == R(665, 152));
    for (const auto& r : rows) CHECK(r.elems.size() == 6);
    CHECK(quintuple_annotations(rows[0]).size() == 1);
    CHECK(checkable_annotations(rows[0]).size() == 2);
    CHECK(subset_letters(rows[0].annotations[0]) == "a b c d f");
}

TEST_CASE("parse_sextuple_table rejects corrupt rows") {
    CHECK(parse_sextuple_table("x: 1 2 3 4 5 6 | a b c").size() == 1);
    CHECK_THROWS_AS(parse_sextuple_table("1 2 3 4 5 6"), DatasetError);
    CHECK_THROWS_AS(parse_sextuple_table("x: 1 2 3 4 5"), DatasetError);
    CHECK_THROWS_AS(parse_sextuple_table("x: 1 2 3 4 5 1/0"), DatasetError);
    CHECK_THROWS_AS(parse_sextuple_table("x: 1 2 3 4 5 6 | a b g"), DatasetError);
    CHECK_THROWS_AS(parse_sextuple_table("x: 1 2 3 4 5 6 | b a c"), DatasetError);
    CHECK_THROWS_AS(parse_sextuple_table("x: 1 2 3 4 5 6 | a b"), DatasetError);
    CHECK_THROWS_AS(parse_sextuple_table("x y: 1 2 3 4 5 6"), DatasetError);
}

TEST_CASE("RationalTuple validation") {
    CHECK_THROWS_AS(RationalTuple({R(1), R(1)}), DomainError);
    CHECK_THROWS_AS(RationalTuple({R(0), R(1)}), DomainError);
    CHECK_THROWS_AS(RationalTuple({R(-1, 2), R(1)}), DomainError);
    CHECK_NOTHROW(RationalTuple({R(1, 2), R(1)}, "x"));
}

TEST_CASE("verify_rational_diophantine") {
    const auto half = verify_rational_diophantine(RationalTuple({R(1, 2), R(1), R(2), R(23, 2)}));
    CHECK_FALSE(half.ok);
    CHECK(*half.failing_pair == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(verify_rational_diophantine(RationalTuple({R(1), R(3), R(8), R(120)})).ok);
}

TEST_CASE("regular_subtuples") {
    const auto fermat = regular_subtuples(RationalTuple({R(1), R(3), R(8), R(120)}));
    CHECK(has(fermat, {0, 1, 2, 3}));
    CHECK(has(fermat, {0, 1, 2}));

    const auto rows = load_sextuple_dataset();
    const RationalTuple row10(rows[9].elems);
    CHECK(has(regular_subtuples(row10), {0, 1, 2}));
}

TEST_CASE("rows other than 10 agree with their annotations exactly") {
    const auto rows = load_sextuple_dataset();
    for (const auto& rec : rows) {
        if (rec.label == "10") continue;
        CAPTURE(rec.label);
        const RationalTuple t(rec.elems, rec.label);
        CHECK(verify_rational_diophantine(t).ok);
        CHECK(oracle_diophantine(rec.elems));
        auto found = regular_subtuples(t);
        auto annotated = checkable_annotations(rec);
        std::sort(found.begin(), found.end());
        std::sort(annotated.begin(), annotated.end());
        CHECK(found == annotated);
        for (const auto& s : found) CHECK(oracle_regular(rec.elems, s));
    }
}

// Row 10 as transcribed has e = 665/152 = 35/8, and e times any other
// element plus 1 fails to be a rational square (ae + 1 = 463/288). Its
// annotated quadruple (c d e f) does hold for e = 665/1521, the root of P(c, d, e, f) = 0 next to the printed value,
// and that repaired row passes all fifteen square checks. Its annotated
// quadruple (a b d f) is not regular with either value; the regular
// quadruples of the repaired row are (a b e f) and (c d e f).
TEST_CASE("row 10 as transcribed fails, and the single-digit repair passes") {
    const auto rows = load_sextuple_dataset();
    const auto& rec = rows[9];
    const RationalTuple printed(rec.elems, rec.label);
    const auto check = verify_rational_diophantine(printed);
    CHECK_FALSE(check.ok);
    CHECK(*check.failing_pair == std::pair<std::size_t, std::size_t>{0, 4});
    CHECK_FALSE(oracle_diophantine(rec.elems));
    CHECK_FALSE(subset_is_regular(rec.elems, {0, 1, 3, 5}));
    CHECK_FALSE(subset_is_regular(rec.elems, {2, 3, 4, 5}));

    auto repaired = rec.elems;
    repaired[4] = R(665, 1521);
    CHECK(oracle_diophantine(repaired));
    CHECK(verify_rational_diophantine(RationalTuple(repaired)).ok);
    const auto found = regular_subtuples(RationalTuple(repaired));
    CHECK(found == std::vector<IndexSubset>{{0, 1, 2}, {0, 1, 4, 5}, {2, 3, 4, 5}});
    CHECK_FALSE(oracle_regular(repaired, {0, 1, 3, 5}));
}
