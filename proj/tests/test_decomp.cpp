#include <doctest.h>

#include <random>

#include "rittkit/decomp.hpp"
#include "rittkit/parse.hpp"

using namespace rittkit;

TEST_CASE("complete decomposition") {
    auto d = complete_decomposition(parse_poly("x^6"));
    REQUIRE(d.length() == 2);
    CHECK(d.factors()[0] == parse_poly("x^3"));  // inner degree 2 tried first
    CHECK(d.factors()[1] == parse_poly("x^2"));

    auto d2 = complete_decomposition(parse_poly("x^4 + 2*x^2"));
    REQUIRE(d2.length() == 2);
    CHECK(d2.factors()[0] == parse_poly("x^2 + 2*x"));
    CHECK(d2.factors()[1] == parse_poly("x^2"));

    auto d3 = complete_decomposition(parse_poly("x*(1+x^3)^2"));
    CHECK(d3.length() == 1);  // prime degree

    CHECK_THROWS(complete_decomposition(parse_poly("x + 1")));
}

TEST_CASE("recomposition is exact") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> dc(-3, 3);
    for (int t = 0; t < 10; ++t) {
        // random composite of two small factors
        Poly a({FieldElem(dc(rng)), FieldElem(dc(rng)), FieldElem(1)});
        Poly b({FieldElem(dc(rng)), FieldElem(dc(rng)), FieldElem(0), FieldElem(1)});
        Poly f = a(b);
        auto d = complete_decomposition(f);
        CHECK(d.compose_all() == f);
        CHECK(d.length() == 2);
    }
}

TEST_CASE("normalize produces the canonical representative") {
    auto d = normalize({parse_poly("x^2"), parse_poly("x^2 + 1")});
    REQUIRE(d.length() == 2);
    CHECK(d.factors()[0] == parse_poly("x^2 + 2*x + 1"));
    CHECK(d.factors()[1] == parse_poly("x^2"));
    CHECK(d.is_canonical());

    auto d2 = normalize({parse_poly("x^3"), parse_poly("x^2")});
    CHECK(d2.factors()[0] == parse_poly("x^3"));
    CHECK(d2.factors()[1] == parse_poly("x^2"));

    // idempotence
    auto d3 = normalize(d.factors());
    CHECK(d3 == d);

    CHECK_THROWS(normalize({parse_poly("x + 1"), parse_poly("x^2")}));
}

TEST_CASE("normalization absorbs inserted linear maps") {
    // the paper's swap-ambiguity example: both answers are linearly equivalent
    Poly big = parse_poly("46656*x^5");                     // (32)^6 x^5 has huge scalars; use 6^6
    Poly other = parse_poly("1/2*x*(1/32*x^5 + 1/32)");     // (x/2)((x^5+1)/32)
    Poly lhs = compose(big, other);
    Poly a = parse_poly("x^5"), b = parse_poly("x*(x^5+1)");
    CHECK(lhs == compose(a, b));
    CHECK(normalize({big, other}) == normalize({a, b}));
}

TEST_CASE("linear equivalence witnesses") {
    auto d1 = normalize({parse_poly("x^2"), parse_poly("x^2 + 1")});
    auto chain = linear_equivalent(d1, d1);
    REQUIRE(chain.has_value());
    for (auto& L : *chain) CHECK(L.is_identity());

    // insert a random linear map and its inverse between the factors
    Poly f2 = parse_poly("x^3 + x"), f1 = parse_poly("x^2 + 5*x");
    LinearMap L(FieldElem(3), FieldElem(-2));
    Decomposition d2({f2, f1});
    Decomposition d3({compose_inner(f2, L), L.inverse()(f1)});
    auto w = linear_equivalent(d2, d3);
    REQUIRE(w.has_value());
    REQUIRE(w->size() == 1);
    // the recovered witness moves d2 onto d3: g_1 = L_1^-1 o f_1
    CHECK((*w)[0].inverse()(f1) == L.inverse()(f1));

    std::string reason;
    Decomposition dd({parse_poly("x^2"), parse_poly("x^2"), parse_poly("x^2")});
    CHECK(!linear_equivalent(d2, dd, &reason).has_value());
    CHECK(reason == "length mismatch");
}

TEST_CASE("enumerate D_f") {
    auto set = enumerate_D_f(parse_poly("x^6"));
    CHECK(set.classes.size() == 2);  // (x^3, x^2) and (x^2, x^3)
    CHECK(!set.edges.empty());

    auto set2 = enumerate_D_f(parse_poly("x^6 - 6*x^4 + 9*x^2 - 2"));
    CHECK(set2.classes.size() == 2);  // C_2 o C_3 and C_3 o C_2

    auto set3 = enumerate_D_f(parse_poly("x^4"));
    CHECK(set3.classes.size() == 1);  // tautological swap excluded

    for (auto& c : set2.classes) CHECK(c.compose_all() == parse_poly("x^6 - 6*x^4 + 9*x^2 - 2"));
}
