#include <doctest.h>

#include "rittkit/parse.hpp"
#include "rittkit/swaps.hpp"

using namespace rittkit;

TEST_CASE("monomial swap") {
    Decomposition d({parse_poly("x^3"), parse_poly("x^2")});
    auto r = try_ritt_swap(d, 1);
    REQUIRE(r.ok());
    CHECK(r.decomposition->factors()[0] == parse_poly("x^2"));
    CHECK(r.decomposition->factors()[1] == parse_poly("x^3"));

    // tautological swap refused
    Decomposition d2({parse_poly("x^2"), parse_poly("x^2")});
    CHECK(try_ritt_swap(d2, 1).outcome == SwapOutcome::Undefined);
}

TEST_CASE("monomial past S-form") {
    // the worked swap (x (x+1)^5, x^5) -> (x^5, x (x^5+1))
    Decomposition d({parse_poly("x*(x+1)^5"), parse_poly("x^5")});
    auto r = try_ritt_swap(d, 1);
    REQUIRE(r.ok());
    CHECK(r.decomposition->factors()[0] == parse_poly("x^5"));
    CHECK(r.decomposition->factors()[1] == parse_poly("x*(x^5+1)"));
    CHECK(r.decomposition->compose_all() == d.compose_all());

    // swapping back returns the original class
    auto rr = try_ritt_swap(*r.decomposition, 1);
    REQUIRE(rr.ok());
    CHECK(*rr.decomposition == normalize(d.factors()));
}

TEST_CASE("type J factors admit no swap") {
    Decomposition d({parse_poly("x^3"), parse_poly("x^2*(x-1)^3")});
    CHECK(try_ritt_swap(d, 1).outcome == SwapOutcome::Undefined);
}

TEST_CASE("commuting Chebyshevs") {
    Decomposition d({chebyshev(5), chebyshev(3)});
    auto r = try_ritt_swap(d, 1);
    REQUIRE(r.ok());
    CHECK(r.decomposition->factors()[0] == chebyshev(3));
    CHECK(r.decomposition->factors()[1] == chebyshev(5));

    Decomposition taut({chebyshev(3), chebyshev(3)});
    CHECK(try_ritt_swap(taut, 1).outcome == SwapOutcome::Undefined);
}

TEST_CASE("quadratic against Chebyshev") {
    // Q o C_3 = hatC_3 o Q
    Decomposition d({parse_poly("x^2"), chebyshev(3)});
    auto r = try_ritt_swap(d, 1);
    REQUIRE(r.ok());
    CHECK(r.decomposition->factors()[1] == parse_poly("x^2"));
    CHECK(r.decomposition->compose_all() == d.compose_all());
    // and back
    auto rr = try_ritt_swap(*r.decomposition, 1);
    REQUIRE(rr.ok());
    CHECK(*rr.decomposition == normalize(d.factors()));
}

TEST_CASE("word application") {
    Decomposition d({parse_poly("x^3"), parse_poly("x^2")});
    auto r = apply_word(d, Word::t(2, {1, 1}));
    REQUIRE(r.ok());
    CHECK(*r.decomposition == normalize(d.factors()));  // involution where defined

    Decomposition dj({parse_poly("x^3"), parse_poly("x^2*(x-1)^3")});
    auto rj = apply_word(dj, Word::t(2, {1}));
    CHECK(rj.outcome == SwapOutcome::Undefined);
    auto rjj = apply_word(dj, Word::t(2, {1, 1, 1}));
    CHECK(rjj.outcome == SwapOutcome::Undefined);  // infinity is absorbing
}

TEST_CASE("commutation of distant swaps") {
    // k = 4, positions 1 and 3 commute, including definedness
    std::vector<Poly> fs = {parse_poly("x^2"), parse_poly("x^3"), parse_poly("x^2"),
                            parse_poly("x^5")};
    Decomposition d(fs);
    auto a = apply_word(d, Word::t(4, {1, 3}));
    auto b = apply_word(d, Word::t(4, {3, 1}));
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(*a.decomposition == *b.decomposition);
}

TEST_CASE("braid law") {
    std::vector<Poly> fs = {parse_poly("x^5"), parse_poly("x^3"), parse_poly("x^2")};
    Decomposition d(fs);
    auto a = apply_word(d, Word::t(3, {1, 2, 1}));
    auto b = apply_word(d, Word::t(3, {2, 1, 2}));
    CHECK(a.outcome == b.outcome);
    if (a.ok()) CHECK(*a.decomposition == *b.decomposition);
}

TEST_CASE("chebyclump detection") {
    Decomposition d({chebyshev(2), chebyshev(3)});
    auto rep = chebyclumps(d);
    REQUIRE(rep.intervals.size() == 1);
    CHECK(rep.intervals[0].inner == 1);
    CHECK(rep.intervals[0].outer == 2);
    CHECK(rep.intervals[0].n == 6);

    Decomposition d2({parse_poly("x^2"), parse_poly("x^3")});
    CHECK(chebyclumps(d2).intervals.empty());

    // single hatted Chebyshev factor: witnesses are the translations by +-2
    Decomposition d3({parse_poly("x*(x-3)^2")});
    auto rep3 = chebyclumps(d3);
    REQUIRE(rep3.intervals.size() == 1);
    CHECK(rep3.intervals[0].n == 3);
    const auto& iv = rep3.intervals[0];
    CHECK(iv.L(compose_inner(parse_poly("x*(x-3)^2"), iv.M)) == chebyshev(3));
    CHECK(iv.M.b == FieldElem(2));
    CHECK(iv.L.b == FieldElem(-2));
}

TEST_CASE("composition preserved by every defined swap") {
    std::vector<Decomposition> ds = {
        Decomposition({parse_poly("x*(x+1)^5"), parse_poly("x^5")}),
        Decomposition({parse_poly("x^2"), chebyshev(3), parse_poly("x^2")}),
        Decomposition({chebyshev(3), chebyshev(5), parse_poly("x^2")}),
    };
    for (auto& d : ds) {
        Poly f = d.compose_all();
        for (int i = 1; i < static_cast<int>(d.length()); ++i) {
            auto r = try_ritt_swap(d, i);
            if (r.ok()) CHECK(r.decomposition->compose_all() == f);
        }
    }
}
