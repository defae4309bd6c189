#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "mcf/candidates.hpp"
#include "mcf/errors.hpp"
#include "mcf/expansion.hpp"
#include "mcf/parse.hpp"

using namespace mcf;
using namespace mcf::test;

namespace {

FieldBasis sample_basis(const FieldPtr& k) {
    return FieldBasis(k, parse_vector(k, "y^2, y, 1"));
}

UnitSystem sample_units(const FieldPtr& k) {
    return verify_units(k, parse_vector(k, "-1 + y + y^2; 2 - y^2"));
}

}  // namespace

TEST_CASE("verify_units") {
    SUBCASE("the two fundamental units of x^3 + x^2 - 2x - 1") {
        auto k = field_from("x^3 + x^2 - 2*x - 1", 2);
        UnitSystem us = sample_units(k);
        CHECK(us.verified);
        CHECK(us.rank == 2);
    }
    SUBCASE("rank-1 unit of x^3 - 2") {
        auto k = field_from("x^3 - 2");
        UnitSystem us = verify_units(k, parse_vector(k, "1 + y + y^2"));
        CHECK(us.rank == 1);
        CHECK(us.verified);
    }
    SUBCASE("y in x^3 - 2 has norm 2") {
        auto k = field_from("x^3 - 2");
        CHECK_THROWS_WITH_AS(verify_units(k, parse_vector(k, "y")),
                             doctest::Contains("NotAUnit"), error);
    }
    SUBCASE("unit count must match the rank") {
        auto k = field_from("x^3 + x^2 - 2*x - 1", 2);
        CHECK_THROWS_WITH_AS(verify_units(k, parse_vector(k, "-1 + y + y^2")),
                             doctest::Contains("WrongUnitCount"), error);
    }
}

TEST_CASE("first_column_from_unit") {
    SUBCASE("x = y^2 simplification") {
        // gamma = (0,0,1): x1 = b1 - b3 a1 - b2 a2 + b3 a2^2, y1 = b2 - b3 a2
        Rat a0(-1), a1(-2), a2(1);
        auto col = first_column_from_unit(Rat(0), Rat(0), Rat(1), a0, a1, a2, Rat(7), Rat(3),
                                          Rat(2));
        CHECK(col[0] == Rat(7) - Rat(2) * a1 - Rat(3) * a2 + Rat(2) * a2 * a2);
        CHECK(col[1] == Rat(3) - Rat(2) * a2);
        CHECK(col[2] == Rat(2));
    }
    SUBCASE("the identity element gives the unit column") {
        auto col = first_column_from_unit(Rat(1), Rat(2), Rat(3), Rat(-1), Rat(0), Rat(2), Rat(1),
                                          Rat(0), Rat(0));
        CHECK(col[0] == 1);
        CHECK(col[1] == 0);
        CHECK(col[2] == 0);
    }
    SUBCASE("gamma2 = 0 is rejected") {
        CHECK_THROWS_WITH_AS(first_column_from_unit(Rat(0), Rat(1), Rat(0), Rat(-1), Rat(0),
                                                    Rat(0), Rat(1), Rat(1), Rat(1)),
                             doctest::Contains("DegenerateGamma"), error);
    }
}

TEST_CASE("first_column_from_unit equals the t_matrix column on random data") {
    // the formula holds whether or not eps is a unit
    auto rng = make_rng(50);
    int done = 0;
    while (done < 100) {
        auto k = random_field(rng, 3);
        FieldElement y = FieldElement::generator(k);
        Rat g0 = random_rat(rng, 4, 2), g1 = random_rat(rng, 4, 2), g2 = random_rat(rng, 4, 2);
        if (g2 == 0) continue;
        FieldElement x = FieldElement::rational(k, g0) + y * g1 + y * y * g2;
        std::vector<FieldElement> els{x, y, FieldElement::one(k)};
        ExactMatrix b(3);
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t i = 0; i < 3; ++i) b.at(i, j) = els[j].coords()[i];
        if (det(b) == 0) continue;
        FieldBasis basis(k, els);
        Rat b1 = random_rat(rng, 5, 3), b2 = random_rat(rng, 5, 3), b3 = random_rat(rng, 5, 3);
        FieldElement eps = FieldElement::rational(k, b1) + y * b2 + x * b3;
        if (eps.is_zero()) continue;
        const Polynomial& mp = k->minpoly();
        auto col =
            first_column_from_unit(g0, g1, g2, mp.coeff(0), mp.coeff(1), mp.coeff(2), b1, b2, b3);
        ExactMatrix t = t_matrix(basis, eps);
        CHECK(col[0] == t.at(0, 0));
        CHECK(col[1] == t.at(1, 0));
        CHECK(col[2] == t.at(2, 0));
        ++done;
    }
}

TEST_CASE("enumerate_candidates on the two-unit system") {
    auto k = field_from("x^3 + x^2 - 2*x - 1", 2);
    FieldBasis basis = sample_basis(k);
    UnitSystem us = sample_units(k);
    CandidateEnumeration en = enumerate_candidates(basis, us, 3);

    auto find = [&](const std::vector<long>& expo) {
        return std::any_of(en.candidates.begin(), en.candidates.end(), [&](const Candidate& c) {
            return c.exponents == expo && c.sign == 1;
        });
    };
    CHECK(find({3, -3}));  // the Brun repetend matrix M1^3 M2^-3
    CHECK(find({0, -2}));  // the Selmer repetend matrix M2^-2
    // every candidate passed the det = +1 and integrality filters
    for (const auto& c : en.candidates) {
        CHECK(det(c.matrix) == 1);
        CHECK(c.matrix.is_integer());
    }
    // the eigen element of each candidate is sign * prod eps_i^{m_i}
    FieldElement eps1 = us.units[0], eps2 = us.units[1];
    for (const auto& c : en.candidates) {
        FieldElement expected =
            eps1.pow(c.exponents[0]) * eps2.pow(c.exponents[1]) * Rat(c.sign);
        CHECK(eigen_element(c.matrix, basis) == expected);
    }
}

TEST_CASE("enumerate_candidates counting") {
    SUBCASE("B = 0 leaves nothing: the identity is excluded") {
        auto k = field_from("x^3 + x^2 - 2*x - 1", 2);
        CandidateEnumeration en = enumerate_candidates(sample_basis(k), sample_units(k), 0);
        CHECK(en.raw_exponent_count == 0);
        CHECK(en.candidates.empty());
    }
    SUBCASE("rank-1 system at B = 2 visits 4 exponent vectors") {
        auto k = field_from("x^3 - 2");
        FieldBasis basis(k, parse_vector(k, "y^2, y, 1"));
        UnitSystem us = verify_units(k, parse_vector(k, "1 + y + y^2"));
        CandidateEnumeration en = enumerate_candidates(basis, us, 2);
        CHECK(en.raw_exponent_count == 4);
    }
    SUBCASE("even degree is rejected") {
        auto k = field_from("x^2 - 2", 1);
        FieldBasis basis(k, parse_vector(k, "y, 1"));
        UnitSystem us = verify_units(k, parse_vector(k, "y - 1"));
        CHECK_THROWS_WITH_AS(enumerate_candidates(basis, us, 2),
                             doctest::Contains("EvenDegree"), error);
    }
}

TEST_CASE("match_repetend on the two-unit totally real cubic") {
    auto k = field_from("x^3 + x^2 - 2*x - 1", 2);
    FieldBasis basis = sample_basis(k);
    UnitSystem us = sample_units(k);

    SUBCASE("M_JPA conjugated back by the reversal") {
        ExactMatrix m_jpa = parse_matrix("[[3,9,4],[4,11,5],[5,14,6]]");
        ExactMatrix p = parse_matrix("[[0,0,1],[0,1,0],[1,0,0]]");
        ExactMatrix m = inverse(p) * m_jpa * p;
        auto hit = match_repetend(m, basis, us, 10);
        REQUIRE(hit);
        CHECK(hit->sign == 1);
        CHECK(hit->exponents == std::vector<long>{1, -3});
    }
    SUBCASE("M_S") {
        auto hit = match_repetend(parse_matrix("[[2,3,1],[1,3,1],[1,2,1]]"), basis, us, 10);
        REQUIRE(hit);
        CHECK(hit->sign == 1);
        CHECK(hit->exponents == std::vector<long>{0, -2});
    }
    SUBCASE("M_B") {
        auto hit = match_repetend(parse_matrix("[[20,45,16],[16,36,13],[13,29,10]]"), basis, us,
                                  10);
        REQUIRE(hit);
        CHECK(hit->sign == 1);
        CHECK(hit->exponents == std::vector<long>{3, -3});
    }
    SUBCASE("the identity is never matched") {
        CHECK_FALSE(match_repetend(ExactMatrix::identity(3), basis, us, 10));
    }
}

TEST_CASE("enumerate and match round-trip") {
    auto k = field_from("x^3 + x^2 - 2*x - 1", 2);
    FieldBasis basis = sample_basis(k);
    UnitSystem us = sample_units(k);
    CandidateEnumeration en = enumerate_candidates(basis, us, 2);
    for (const auto& c : en.candidates) {
        auto hit = match_repetend(c.matrix, basis, us, 3);
        REQUIRE(hit);
        // exact verification guarantees matrix equality even if the
        // exponents differ by a unit-group relation
        CHECK(hit->matrix == c.matrix);
    }
}

TEST_CASE("ajpa_family predictions") {
    SUBCASE("(1, 2, 0, 1)") {
        FamilyPrediction p = ajpa_family(1, 2, 0, 1);
        CHECK(p.field->minpoly() == parse_polynomial("x^3 + x^2 + 2*x - 1"));
        REQUIRE(p.preperiod_labels.size() == 2);
        CHECK(p.preperiod_labels[0].indices == std::vector<long>{3, 1, 0});
        CHECK(p.preperiod_labels[1].indices == std::vector<long>{2, 0, 2});
        REQUIRE(p.repetend_labels.size() == 3);
        CHECK(p.repetend_labels[0].indices == std::vector<long>{1, 2, 1});
        CHECK(p.repetend_labels[1].indices == std::vector<long>{3, 2, 1});
        CHECK(p.repetend_labels[2].indices == std::vector<long>{2, 1, 2});
    }
    SUBCASE("r = 0 drops the first preperiod step") {
        FamilyPrediction p = ajpa_family(1, 2, 0, 0);
        REQUIRE(p.preperiod_labels.size() == 1);
        CHECK(p.preperiod_labels[0].indices == std::vector<long>{2, 0, 2});
    }
    SUBCASE("constraint violations are named") {
        CHECK_THROWS_WITH_AS(ajpa_family(2, 1, 0, 0), doctest::Contains("t > s fails"), error);
        CHECK_THROWS_WITH_AS(ajpa_family(3, 3, 0, 0), doctest::Contains("t > s fails"), error);
        CHECK_THROWS_WITH_AS(ajpa_family(5, 6, 0, 0), doctest::Contains("s^2/4"), error);
    }
}

TEST_CASE("family predictions verify against the driver") {
    // the parametric periodicity statement, restated as a test over a small
    // grid, including f > 0 instances where the side conditions admit one
    for (long s = 1; s <= 4; ++s) {
        for (long t = s + 1; t <= 5; ++t) {
            if (4 * t <= s * s) continue;
            for (long r : {0L, 1L, 2L}) {
                CAPTURE(s);
                CAPTURE(t);
                CAPTURE(r);
                FamilyPrediction p = ajpa_family(s, t, 0, r);
                Expansion e = expand(p.field, p.vector, Algorithm::ajpa, 200);
                REQUIRE(e.verdict == Verdict::eventually_periodic);
                CHECK(e.period == 3);
                // compare label sequences as infinite words: the predicted
                // (preperiod, repetend) must agree with the computed one on
                // a long prefix
                auto predicted_at = [&](std::size_t i) -> const StepLabel& {
                    if (i < p.preperiod_labels.size()) return p.preperiod_labels[i];
                    return p.repetend_labels[(i - p.preperiod_labels.size()) %
                                             p.repetend_labels.size()];
                };
                auto computed_at = [&](std::size_t i) -> const StepLabel& {
                    if (i < e.preperiod) return e.steps[i].label;
                    return e.steps[e.preperiod + (i - e.preperiod) % e.period].label;
                };
                for (std::size_t i = 0; i < p.preperiod_labels.size() + 9; ++i)
                    CHECK(predicted_at(i) == computed_at(i));
            }
        }
    }
}

TEST_CASE("tamura_vector") {
    SUBCASE("m = 1 is purely periodic with period 6") {
        FamilyPrediction p = tamura_vector(1);
        CHECK(p.preperiod_labels.empty());
        REQUIRE(p.repetend_labels.size() == 6);
        Expansion e = expand(p.field, p.vector, Algorithm::ajpa, 100);
        REQUIRE(e.verdict == Verdict::eventually_periodic);
        CHECK(e.preperiod == 0);
        CHECK(e.period == 6);
        for (std::size_t i = 0; i < 6; ++i)
            CHECK(e.steps[i].label == p.repetend_labels[i]);
    }
    SUBCASE("m = 2 has the (s,t) = (6,12) labels") {
        FamilyPrediction p = tamura_vector(2);
        REQUIRE(p.preperiod_labels.size() == 2);
        CHECK(p.preperiod_labels[0].indices == std::vector<long>{3, 4, 0});
        CHECK(p.preperiod_labels[1].indices == std::vector<long>{2, 4, 12});
        CHECK(p.repetend_labels[0].indices == std::vector<long>{1, 12, 6});
    }
    SUBCASE("m = 0 is invalid") {
        CHECK_THROWS_WITH_AS(tamura_vector(0), doctest::Contains("InvalidM"), error);
    }
}

TEST_CASE("search_units_box finds the worked units") {
    auto k = field_from("x^3 + x^2 - 2*x - 1", 2);
    auto found = search_units_box(k, 2);
    FieldElement y = FieldElement::generator(k);
    FieldElement eps1 = y * y + y - FieldElement::one(k);
    CHECK(std::any_of(found.begin(), found.end(),
                      [&](const FieldElement& e) { return e == eps1; }));
}
