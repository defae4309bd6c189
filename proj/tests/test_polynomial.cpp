#include <doctest.h>

#include "helpers.hpp"
#include "mcf/polynomial.hpp"

using namespace mcf;
using mcf::test::make_rng;
using mcf::test::random_rat;

TEST_CASE("polynomial arithmetic and division") {
    Polynomial f = parse_polynomial("x^3 - 2");
    Polynomial g = parse_polynomial("x - 1");
    auto [q, r] = f.divrem(g);
    CHECK(q == parse_polynomial("x^2 + x + 1"));
    CHECK(r == Polynomial::constant(Rat(-1)));
    CHECK(q * g + r == f);

    CHECK(f.derivative() == parse_polynomial("3*x^2"));
    CHECK(f.eval(Rat(2)) == 6);
}

TEST_CASE("gcd and squarefree detection") {
    Polynomial f = parse_polynomial("x^2 - 1");
    Polynomial g = parse_polynomial("x^2 - 2*x + 1");
    CHECK(poly_gcd(f, g) == parse_polynomial("x - 1"));
    CHECK(is_squarefree(parse_polynomial("x^3 - 2")));
    CHECK_FALSE(is_squarefree(g));
}

TEST_CASE("extended gcd identity holds on random pairs") {
    auto rng = make_rng(1);
    for (int iter = 0; iter < 50; ++iter) {
        RatVec ca(4), cb(3);
        for (auto& x : ca) x = random_rat(rng);
        for (auto& x : cb) x = random_rat(rng);
        Polynomial a(ca), b(cb);
        if (a.is_zero() || b.is_zero()) continue;
        ExtGcd e = poly_ext_gcd(a, b);
        CHECK(e.u * a + e.v * b == e.g);
    }
}

TEST_CASE("sturm counts real roots") {
    CHECK(SturmSequence(parse_polynomial("x^3 - 2")).count_real_roots() == 1);
    CHECK(SturmSequence(parse_polynomial("x^3 + x^2 - 2*x - 1")).count_real_roots() == 3);
    CHECK(SturmSequence(parse_polynomial("x^2 + 1")).count_real_roots() == 0);
    CHECK(SturmSequence(parse_polynomial("x^2 - 2")).count_real_roots() == 2);
}

TEST_CASE("root isolation separates all real roots") {
    Polynomial f = parse_polynomial("x^3 + x^2 - 2*x - 1");
    auto roots = isolate_real_roots(f);
    REQUIRE(roots.size() == 3);
    SturmSequence sturm(f);
    for (const auto& iv : roots) {
        CHECK(iv.lo < iv.hi);
        CHECK(sturm.count_roots(iv.lo, iv.hi) == 1);
    }
    // increasing order and disjoint
    CHECK(roots[0].hi <= roots[1].lo);
    CHECK(roots[1].hi <= roots[2].lo);
}

TEST_CASE("rational root detection") {
    auto is_root_of = [](const std::string& poly) {
        Polynomial p = parse_polynomial(poly);
        auto r = find_rational_root(p);
        return r.has_value() && p.eval(*r) == 0;
    };
    CHECK(is_root_of("x^2 - 4"));
    CHECK(is_root_of("x^2 - 1/4"));
    CHECK(is_root_of("3*x^3 - x^2 + 3*x - 1"));
    CHECK(find_rational_root(parse_polynomial("x^3 - 2")) == std::nullopt);
    CHECK(find_rational_root(parse_polynomial("x^3 + x^2 - 2*x - 1")) == std::nullopt);
}

TEST_CASE("interval evaluation encloses the exact value") {
    auto rng = make_rng(2);
    for (int iter = 0; iter < 50; ++iter) {
        RatVec c(5);
        for (auto& x : c) x = random_rat(rng);
        Polynomial p(c);
        Rat lo = random_rat(rng), w = rat_abs(random_rat(rng)) + Rat(1, 7);
        Rat hi = lo + w;
        auto [a, b] = p.eval_interval(lo, hi);
        for (const Rat& t : {lo, hi, Rat((lo + hi) / 2)}) {
            Rat v = p.eval(t);
            CHECK(a <= v);
            CHECK(v <= b);
        }
    }
}
