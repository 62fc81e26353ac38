#include <doctest.h>

#include <random>

#include "rittkit/algebra.hpp"
#include "rittkit/parse.hpp"

using namespace rittkit;

namespace {

Poly rand_poly(std::mt19937& rng, int maxdeg, int coeff_range = 5) {
    std::uniform_int_distribution<int> dd(1, maxdeg), dc(-coeff_range, coeff_range);
    int deg = dd(rng);
    std::vector<FieldElem> c(deg + 1);
    for (auto& x : c) x = FieldElem(dc(rng));
    if (c.back().is_zero()) c.back() = FieldElem(1);
    return Poly(c);
}

}  // namespace

TEST_CASE("compose basics") {
    Poly f = parse_poly("x^2 + 1");
    CHECK(compose(f, parse_poly("x^3")) == parse_poly("x^6 + 1"));

    Poly c3 = parse_poly("x^3 - 3*x");
    Poly c2 = parse_poly("x^2 - 2");
    CHECK(compose(c3, c2) == compose(c2, c3));  // commuting Chebyshevs

    FieldConfig q2(2, Sigma::Identity);
    Poly inner = parse_poly("x^2 + s", q2);
    FieldElem r2(Rat(0), Rat(1), 2);
    // (x^2 + sqrt 2)^3 = x^6 + 3 sqrt2 x^4 + 6 x^2 + 2 sqrt2, expanded by hand
    Poly expect({FieldElem(2) * r2, FieldElem(0), FieldElem(6), FieldElem(0), FieldElem(3) * r2,
                 FieldElem(0), FieldElem(1)});
    CHECK(compose(parse_poly("x^3"), inner) == expect);
}

TEST_CASE("compose is associative on random triples") {
    std::mt19937 rng(7);
    for (int t = 0; t < 12; ++t) {
        Poly a = rand_poly(rng, 3), b = rand_poly(rng, 3), c = rand_poly(rng, 3);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("rescale") {
    for (long cc : {2L, 3L, -5L}) {
        CHECK(rescale(FieldElem(cc), parse_poly("x^5")) == parse_poly("x^5"));
    }
    CHECK(rescale(FieldElem(2), parse_poly("x^3 - 3*x")) == parse_poly("x^3 - 3/4*x"));
    Poly f = parse_poly("x^4 + 2*x^2 - 1");
    CHECK(rescale(FieldElem(1), f) == f);

    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        Poly g = rand_poly(rng, 6);
        if (g.is_constant()) continue;
        FieldElem c(Rat(3, 2));
        CHECK(rescale(c, rescale(c.inverse(), g)) == g);
    }
}

TEST_CASE("base expansion") {
    auto digits = base_expansion(parse_poly("x^4 + 2*x^2"), parse_poly("x^2"));
    REQUIRE(digits.size() == 3);
    CHECK(digits[0].is_zero());
    CHECK(digits[1] == Poly(FieldElem(2)));
    CHECK(digits[2] == Poly(FieldElem(1)));

    auto d2 = base_expansion(parse_poly("x^3"), parse_poly("x^2"));
    bool nonconst = false;
    for (auto& d : d2) nonconst = nonconst || d.degree() > 0;
    CHECK(nonconst);  // x^3 is not in K[x^2]

    Poly h = parse_poly("x^2 + 1");
    auto d3 = base_expansion(h, h);
    REQUIRE(d3.size() == 2);
    CHECK(d3[0].is_zero());
    CHECK(d3[1] == Poly(FieldElem(1)));
}

TEST_CASE("base expansion reconstructs exactly") {
    std::mt19937 rng(23);
    for (int t = 0; t < 15; ++t) {
        Poly f = rand_poly(rng, 9);
        Poly h = rand_poly(rng, 3);
        if (h.degree() < 1) continue;
        auto digits = base_expansion(f, h);
        Poly acc;
        for (size_t i = digits.size(); i-- > 0;) acc = acc * h + digits[i];
        CHECK(acc == f);
        for (auto& d : digits) CHECK(d.degree() < h.degree());
    }
}

TEST_CASE("critical values") {
    auto cv = critical_values(parse_poly("x^3 - 3*x"));
    REQUIRE(cv.size() == 2);
    CHECK(cv[0].poly == parse_poly("x - 2"));
    CHECK(cv[1].poly == parse_poly("x + 2"));

    auto cv2 = critical_values(parse_poly("x^3"));
    REQUIRE(cv2.size() == 1);
    CHECK(cv2[0].poly == parse_poly("x"));
    CHECK(cv2[0].multiplicity == 2);  // D(t) = c t^2 for the totally ramified value

    auto cv3 = critical_values(parse_poly("x*(x^2+2)^2"));
    int distinct = 0;
    for (auto& f : cv3) distinct += f.poly.degree();
    CHECK(distinct == 3);  // t = 0 plus an irreducible conjugate pair
    bool has_quadratic = false;
    for (auto& f : cv3) has_quadratic = has_quadratic || (f.poly.degree() == 2 && f.irreducible);
    CHECK(has_quadratic);
}

TEST_CASE("squarefree multiplicities") {
    auto p1 = squarefree_multiplicities(parse_poly("x^2*(x-1)^3"));
    REQUIRE(p1.size() == 2);
    CHECK(p1[0].part == parse_poly("x"));
    CHECK(p1[0].multiplicity == 2);
    CHECK(p1[1].part == parse_poly("x - 1"));
    CHECK(p1[1].multiplicity == 3);

    auto p2 = squarefree_multiplicities(parse_poly("x^4"));
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].part == parse_poly("x"));
    CHECK(p2[0].multiplicity == 4);

    auto p3 = squarefree_multiplicities(parse_poly("(x^2+2)^2 * x"));
    REQUIRE(p3.size() == 2);
    CHECK(p3[0].part == parse_poly("x"));
    CHECK(p3[0].multiplicity == 1);
    CHECK(p3[1].part == parse_poly("x^2 + 2"));
    CHECK(p3[1].multiplicity == 2);
}

TEST_CASE("sigma is a field automorphism") {
    FieldConfig cfg(5, Sigma::Conjugation);
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> dc(-6, 6);
    for (int t = 0; t < 20; ++t) {
        FieldElem x(Rat(dc(rng)), Rat(dc(rng)), 5), y(Rat(dc(rng)), Rat(dc(rng)), 5);
        CHECK(sigma_apply(cfg, x * y) == sigma_apply(cfg, x) * sigma_apply(cfg, y));
        CHECK(sigma_apply(cfg, x + y) == sigma_apply(cfg, x) + sigma_apply(cfg, y));
        CHECK(sigma_apply(cfg, sigma_apply(cfg, x)) == x);
    }
    // conjugation fixes Q pointwise
    CHECK(sigma_apply(cfg, FieldElem(Rat(7, 3))) == FieldElem(Rat(7, 3)));
}

TEST_CASE("field inverse and roots") {
    FieldElem x(Rat(3), Rat(2), 5);
    CHECK((x * x.inverse()).is_one());
    CHECK(FieldElem(4).nth_root(2).value() == FieldElem(2));
    CHECK(!FieldElem(2).nth_root(2).has_value());
    FieldElem twelve(Rat(12), Rat(0), 3);  // 12 = 3 * 2^2, sqrt = 2 sqrt3
    auto r = twelve.nth_root(2);
    REQUIRE(r.has_value());
    CHECK(*r * *r == twelve);
}

TEST_CASE("polynomial text round trip") {
    FieldConfig q2(2, Sigma::Conjugation);
    for (const char* s : {"x^2 + 1/2*s*x - 3", "x", "-x^3 + s", "2/7", "x*(1 + x^3)^2"}) {
        Poly f = parse_poly(s, q2);
        CHECK(parse_poly(print_poly(f), q2) == f);
    }
    CHECK_THROWS_AS(parse_poly("x + + 1"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^2 )"), ParseError);
    // error position is reported
    try {
        parse_poly("x^2 + @");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("roots in K") {
    auto r = roots_in_K(parse_poly("x^2*(x-1)^3"));
    REQUIRE(r.size() == 2);
    CHECK(r[0].first == FieldElem(0));
    CHECK(r[0].second == 2);
    CHECK(r[1].first == FieldElem(1));
    CHECK(r[1].second == 3);

    // sqrt(2) roots live in Q(sqrt 2) only
    Poly f = parse_poly("x^2 - 2");
    CHECK(roots_in_K(f).empty());
    auto r2 = roots_in_K(f, 2);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].first * r2[0].first == FieldElem(2));
}

TEST_CASE("exact rank and kernel") {
    std::vector<std::vector<Rat>> m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(rat_rank(m) == 2);
    auto ker = rat_kernel(m);
    REQUIRE(ker.size() == 1);
    // kernel vector annihilates every row
    for (auto& row : m) {
        Rat dot(0);
        for (size_t j = 0; j < row.size(); ++j) dot += row[j] * ker[0][j];
        CHECK(dot == 0);
    }
}
