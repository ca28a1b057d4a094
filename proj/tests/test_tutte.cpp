#include "graphpoly/errors.hpp"
#include "graphpoly/tutte.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace graphpoly;
namespace th = test_helpers;

namespace {

Rational tutte_at(const Multigraph& g, const Rational& x, const Rational& y) {
    return tutte_poly(g).evaluate({{"x", x}, {"y", y}});
}

} // namespace

TEST_CASE("tutte closed forms") {
    CHECK(tutte_poly(null_graph(0)) == MultiPoly{Rational(1)});
    CHECK(tutte_poly(null_graph(3)) == MultiPoly{Rational(1)});
    CHECK(tutte_poly(complete_graph(2)) == MultiPoly::parse("x"));
    CHECK(tutte_poly(Multigraph::from_edges(1, {{0, 0}})) == MultiPoly::parse("y"));
    CHECK(tutte_poly(path_graph(4)) == MultiPoly::parse("x^3"));
    CHECK(tutte_poly(complete_graph(3)) == MultiPoly::parse("x^2 + x + y"));
    CHECK(tutte_poly(cycle_graph(4)) == MultiPoly::parse("x^3 + x^2 + x + y"));
    CHECK(tutte_poly(cycle_graph(2)) == MultiPoly::parse("x + y"));
    // Isolated vertices are invisible to the Tutte polynomial.
    Multigraph padded = complete_graph(3).disjoint_union(null_graph(2));
    CHECK(tutte_poly(padded) == tutte_poly(complete_graph(3)));
    // Disjoint unions multiply.
    CHECK(tutte_poly(complete_graph(3).disjoint_union(cycle_graph(2))) ==
          tutte_poly(complete_graph(3)) * tutte_poly(cycle_graph(2)));
    CHECK(tutte_at(complete_graph(4), Rational(1), Rational(1)) == Rational(16));
}

TEST_CASE("whitney rank polynomial by direct expansion") {
    CHECK(whitney_rank_poly(null_graph(2)) == MultiPoly{Rational(1)});
    CHECK(whitney_rank_poly(complete_graph(2)) == MultiPoly::parse("x + 1"));
    CHECK(whitney_rank_poly(complete_graph(3)) == MultiPoly::parse("x^2 + 3*x + y + 3"));
    Multigraph big(12);
    for (int e = 0; e < 21; ++e) big.add_edge(e % 12, (e + 1) % 12);
    CHECK_THROWS_WITH_AS(whitney_rank_poly(big, 20), "subset enumeration limit exceeded",
                         LimitError);
}

TEST_CASE("tutte equals shifted whitney on the corpus") {
    TutteOptions opt;
    for (const Multigraph& g : th::connected_simple_corpus(5)) {
        if (g.edge_count() > 10) continue;
        MultiPoly t = tutte_poly(g, opt);
        MultiPoly r = whitney_rank_poly(g);
        CHECK(whitney_from_tutte(t) == r);
        CHECK(tutte_from_whitney(r) == t);
        CHECK(r == th::whitney_oracle(g));
    }
    for (const Multigraph& g : th::random_multigraphs(25, 6, 8, 424242)) {
        MultiPoly t = tutte_poly(g, opt);
        CHECK(whitney_from_tutte(t) == th::whitney_oracle(g));
    }
}

TEST_CASE("pivot rule does not change the result") {
    TutteOptions first;
    first.pivot = PivotRule::FirstOrdinary;
    TutteOptions last;
    last.pivot = PivotRule::LastOrdinary;
    for (const Multigraph& g : th::random_multigraphs(10, 6, 8, 31337))
        CHECK(tutte_poly(g, first) == tutte_poly(g, last));
    CHECK(tutte_poly(th::gray_a(), first) == tutte_poly(th::gray_a(), last));
}

TEST_CASE("memoization is observable and optional") {
    TutteEngine engine;
    engine.tutte(complete_graph(5));
    CHECK(engine.memo_size() > 0);
    CHECK(engine.memo_hits() > 0);
    MultiPoly memoised = engine.tutte(complete_graph(5));

    TutteOptions off;
    off.memoize = false;
    CHECK(tutte_poly(complete_graph(5), off) == memoised);

    // Beyond the canonicalisation limit the recursion still works unmemoised.
    Multigraph tree(12);
    for (int v = 1; v < 12; ++v) tree.add_edge(v - 1, v);
    CHECK(tutte_poly(tree) == MultiPoly::parse("x^11"));
}

TEST_CASE("gray graphs share the tutte polynomial") {
    MultiPoly ta = tutte_poly(th::gray_a());
    MultiPoly tb = tutte_poly(th::gray_b());
    CHECK(ta == tb);
    CHECK(whitney_from_tutte(ta) == whitney_rank_poly(th::gray_a()));
    CHECK(whitney_from_tutte(tb) == whitney_rank_poly(th::gray_b()));
}

TEST_CASE("chromatic polynomial closed forms and brute counts") {
    CHECK(chromatic_poly(null_graph(3)) == MultiPoly::parse("q^3"));
    CHECK(chromatic_poly(complete_graph(3)) == MultiPoly::parse("q^3 - 3*q^2 + 2*q"));
    CHECK(chromatic_poly(path_graph(3)) == MultiPoly::parse("q^3 - 2*q^2 + q"));
    CHECK(chromatic_poly(Multigraph::from_edges(1, {{0, 0}})) == MultiPoly{});
    // Parallel edges collapse to one constraint.
    CHECK(chromatic_poly(cycle_graph(2)) == chromatic_poly(path_graph(2)));

    for (const Multigraph& g : th::random_multigraphs(25, 6, 8, 777)) {
        MultiPoly p = chromatic_poly(g);
        for (int q = 0; q <= 3; ++q)
            CHECK(p.evaluate({{"q", Rational(q)}}) ==
                  Rational(th::count_proper_colourings(g, q)));
    }
}

TEST_CASE("edge chromatic polynomial is the line graph chromatic") {
    CHECK(edge_chromatic_poly(null_graph(4)) == MultiPoly{Rational(1)});
    CHECK(edge_chromatic_poly(path_graph(3)) == MultiPoly::parse("q^2 - q"));
    CHECK(edge_chromatic_poly(star_graph(3)) ==
          MultiPoly::parse("q^3 - 3*q^2 + 2*q"));
    CHECK(edge_chromatic_poly(path_graph(4)) == chromatic_poly(path_graph(3)));
    CHECK_THROWS_AS(edge_chromatic_poly(cycle_graph(1)), DomainError);

    // Proper 2-edge-colourings of P_3: the two edges meet, so q(q-1) at q=2
    // gives 2; brute force agrees.
    CHECK(edge_chromatic_poly(path_graph(3)).evaluate({{"q", Rational(2)}}) ==
          Rational(2));
}

TEST_CASE("three variable subset expansion") {
    // Single edge: X = {} gives y^2 (two uncovered vertices as their own
    // components), X = {e} gives x*y*z^2.
    CHECK(bp_poly(complete_graph(2)) == MultiPoly::parse("x*y*z^2 + y^2"));
    CHECK(bp_poly(null_graph(1)) == MultiPoly::parse("y"));
    CHECK(bp_poly(null_graph(0)) == MultiPoly{Rational(1)});

    // A loop covers its vertex.
    Multigraph loop = Multigraph::from_edges(1, {{0, 0}});
    CHECK(bp_poly(loop) == MultiPoly::parse("x*y*z + y"));

    // Counting check: setting x=y=z=1 counts the subsets.
    CHECK(bp_poly(complete_graph(3)).evaluate(
              {{"x", Rational(1)}, {"y", Rational(1)}, {"z", Rational(1)}}) ==
          Rational(8));
}
