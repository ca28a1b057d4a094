#include "graphpoly/errors.hpp"
#include "graphpoly/partial_colouring.hpp"
#include "graphpoly/tutte.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace graphpoly;
namespace th = test_helpers;

namespace {

// Exhaustively explores every one-vertex-at-a-time forcing order and reports
// whether all maximal runs end in the same place.
struct ForcingExplorer {
    const Multigraph& g;
    int lambda;
    bool consistent = true;
    bool success = false;
    std::vector<int> final_state;
    bool have_final = false;

    void run(std::vector<int> state) {
        std::vector<int> forced = forced_vertices(g, state, lambda);
        if (forced.empty()) {
            bool total = std::none_of(state.begin(), state.end(),
                                      [](int c) { return c < 0; });
            bool ok = total && proper_on_domain(g, state);
            if (!have_final) {
                success = ok;
                final_state = state;
                have_final = true;
            } else if (ok != success || (ok && state != final_state)) {
                consistent = false;
            }
            return;
        }
        for (int v : forced) {
            std::vector<int> next = state;
            next[static_cast<size_t>(v)] = forced_colour(g, state, lambda, v);
            run(std::move(next));
        }
    }
};

MultiPoly lp_poly(const char* text) { return MultiPoly::parse(text); }

} // namespace

TEST_CASE("forcing basics") {
    Multigraph k3 = complete_graph(3);
    std::vector<int> partial{0, 1, -1};
    CHECK(forced_colour(k3, partial, 3, 2) == 2);
    std::vector<int> closed = forcing_closure(k3, partial, 3);
    CHECK(closed == std::vector<int>{0, 1, 2});

    // Star with two coloured leaves: the centre sees both colours.
    Multigraph star = star_graph(2); // centre 0, leaves 1 and 2
    std::vector<int> leaves{-1, 0, 1};
    CHECK(forced_colour(star, leaves, 3, 0) == 2);

    // Nothing is forced on an edgeless pair with two colours.
    Multigraph n2 = null_graph(2);
    std::vector<int> empty{-1, -1};
    CHECK(forced_vertices(n2, empty, 2).empty());
    CHECK(forcing_closure(n2, empty, 2) == empty);

    // With a single colour every isolated vertex is forced at once.
    CHECK(forcing_closure(n2, empty, 1) == std::vector<int>{0, 0});

    // No vertex is ever forced with zero colours.
    CHECK(forced_vertices(n2, empty, 0).empty());
}

TEST_CASE("forcing order cannot change the outcome") {
    std::vector<Multigraph> graphs = th::connected_simple_corpus(3);
    graphs.push_back(null_graph(2));
    graphs.push_back(star_graph(3));
    for (const Multigraph& g : graphs) {
        for (int lambda : {2, 3}) {
            for (const std::vector<int>& partial :
                 th::all_partial_vectors(g.vertex_count(), lambda)) {
                ForcingExplorer explorer{g, lambda, true, false, {}, false};
                explorer.run(partial);
                CHECK(explorer.consistent);
                // The library's greedy sweep is one admissible order.
                std::vector<int> greedy = forcing_closure(g, partial, lambda);
                bool greedy_total = std::none_of(greedy.begin(), greedy.end(),
                                                 [](int c) { return c < 0; });
                bool greedy_ok = greedy_total && proper_on_domain(g, greedy);
                CHECK(greedy_ok == explorer.success);
                if (explorer.success) CHECK(greedy == explorer.final_state);
            }
        }
    }
}

TEST_CASE("extendability and properness") {
    Multigraph k2 = complete_graph(2);
    CHECK(extendable(k2, {0, -1}, 2));
    CHECK_FALSE(extendable(k2, {-1, -1}, 1));
    CHECK(extendable(k2, {-1, -1}, 2));
    CHECK_FALSE(extendable(k2, {0, 0}, 3)); // improper stays improper
    CHECK_FALSE(extendable(complete_graph(3), {-1, -1, -1}, 2));
    // Loops rule out every total colouring.
    Multigraph loop = Multigraph::from_edges(1, {{0, 0}});
    CHECK_FALSE(extendable(loop, {-1}, 3));
    CHECK(proper_on_domain(loop, {-1}));
    CHECK_FALSE(proper_on_domain(loop, {0}));
    CHECK(extendable(null_graph(0), {}, 0));
}

TEST_CASE("pc closed forms") {
    CHECK(pc_poly(complete_graph(2)) == lp_poly("1 - l*p^2"));
    CHECK(pc_poly(null_graph(3)) == lp_poly("1"));
    CHECK(pc_poly(null_graph(0)) == lp_poly("1"));

    // Specialisations: p = 0 gives 1, p = 1/lambda gives lambda^-n P(G).
    for (const Multigraph& g : {complete_graph(3), path_graph(4), cycle_graph(4)}) {
        MultiPoly pc = pc_poly(g);
        CHECK(pc.substitute("p", Rational(0)) == MultiPoly{Rational(1)});
        for (int lambda : {2, 3}) {
            Rational at = pc.evaluate({{"p", Rational(1, lambda)}, {"l", Rational(lambda)}});
            Rational want =
                graphpoly::rat_pow(Rational(lambda), -g.vertex_count()) *
                chromatic_poly(g).evaluate({{"q", Rational(lambda)}});
            CHECK(at == want);
        }
    }
    CHECK(pc_poly(complete_graph(3))
              .evaluate({{"p", Rational(1, 3)}, {"l", Rational(3)}}) == Rational(2, 9));
}

TEST_CASE("labelled pc worked examples") {
    Multigraph k2 = complete_graph(2);
    CHECK(pc_labelled(th::labelled(k2, {0}, {})) == lp_poly("l*p - l*p^2"));
    CHECK(pc_labelled(th::labelled(k2, {}, {0})) == lp_poly("1 - l*p"));
    CHECK(pc_labelled(th::labelled(k2, {}, {})) == pc_poly(k2));
    CHECK(pc_labelled(th::labelled(k2, {0, 1}, {})) == lp_poly("l^2*p^2 - l*p^2"));
    CHECK_THROWS_AS(pc_labelled(th::labelled(k2, {0}, {0})), DomainError);
}

TEST_CASE("pc reduction and fixed lambda agree with the definition") {
    for (const Multigraph& g : th::connected_simple_corpus(4)) {
        MultiPoly bivariate = pc_poly(g);
        for (int lambda : {0, 1, 2, 3}) {
            MultiPoly fixed = pc_fixed(g, lambda);
            CHECK(fixed == bivariate.substitute("l", Rational(lambda)));
            CHECK(fixed == pc_via_reduction(g, lambda));
        }
    }
    CHECK(pc_via_reduction(null_graph(2), 0) == MultiPoly{Rational(1)});
}

TEST_CASE("labelling recursion identities") {
    for (const Multigraph& g : th::connected_simple_corpus(3)) {
        int n = g.vertex_count();
        for (int lambda : {1, 2}) {
            // Every disjoint labelling (coloured/uncoloured/free per vertex).
            std::vector<int> mark(static_cast<size_t>(n), 0);
            for (;;) {
                std::vector<int> c, u;
                for (int v = 0; v < n; ++v) {
                    if (mark[static_cast<size_t>(v)] == 1) c.push_back(v);
                    if (mark[static_cast<size_t>(v)] == 2) u.push_back(v);
                }
                LabelledGraph lg = th::labelled(g, c, u);
                for (int v = 0; v < n; ++v) {
                    if (mark[static_cast<size_t>(v)] != 0) continue;
                    std::vector<int> c2 = c, u2 = u;
                    c2.push_back(v);
                    u2.push_back(v);
                    LabelledGraph with_c = th::labelled(g, c2, u);
                    LabelledGraph with_u = th::labelled(g, c, u2);
                    CHECK(pc_labelled(lg) ==
                          pc_labelled(with_c) + pc_labelled(with_u));
                    CHECK(ec_labelled(lg, lambda) ==
                          ec_labelled(with_c, lambda) + ec_labelled(with_u, lambda));
                    CHECK(fc_labelled(lg, lambda) ==
                          fc_labelled(with_c, lambda) + fc_labelled(with_u, lambda));
                }
                size_t pos = 0;
                while (pos < mark.size() && ++mark[pos] == 3) mark[pos++] = 0;
                if (pos == mark.size()) break;
            }
        }
    }
}

TEST_CASE("ec closed forms") {
    Multigraph k2 = complete_graph(2);
    for (int lambda : {2, 3, 4}) {
        MultiPoly want = MultiPoly{Rational(1)} -
                         MultiPoly::monomial(Rational(lambda), {{"p", 2}});
        CHECK(ec_fixed(k2, lambda) == want);
    }
    CHECK(ec_fixed(k2, 1) == MultiPoly{});
    CHECK(ec_fixed(null_graph(3), 2) == MultiPoly{Rational(1)});
    CHECK(ec_fixed(null_graph(0), 0) == MultiPoly{Rational(1)});
    CHECK(ec_fixed(null_graph(1), 0) == MultiPoly{});
    // A totally coloured K_2 with three colours: 6 proper pairs.
    CHECK(ec_labelled(th::labelled(k2, {0, 1}, {}), 3) ==
          MultiPoly::monomial(Rational(6), {{"p", 2}}));
}

TEST_CASE("fc closed forms") {
    CHECK(fc_fixed(complete_graph(2), 3) == lp_poly("6*p^2"));
    CHECK(fc_fixed(complete_graph(3), 3) == lp_poly("-48*p^3 + 18*p^2"));
    CHECK(fc_fixed(path_graph(3), 3) == lp_poly("-6*p^3 + 6*p^2"));
    for (int n = 0; n <= 4; ++n) {
        CHECK(fc_fixed(null_graph(n), 3) ==
              MultiPoly::monomial(Rational(1), {{"p", 1}}).pow(n) *
                  graphpoly::rat_pow(Rational(3), n));
        CHECK(fc_fixed(null_graph(n), 1) == MultiPoly{Rational(1)});
    }
    CHECK(fc_fixed(null_graph(2), 0) == MultiPoly{});
    CHECK(fc_labelled(th::labelled(complete_graph(2), {0, 1}, {}), 3) ==
          lp_poly("6*p^2"));
}

TEST_CASE("fc is bounded by ec is bounded by pc") {
    for (const Multigraph& g : th::connected_simple_corpus(4)) {
        for (int lambda : {2, 3}) {
            MultiPoly pc = pc_fixed(g, lambda);
            MultiPoly ec = ec_fixed(g, lambda);
            MultiPoly fc = fc_fixed(g, lambda);
            for (const Rational& p :
                 {Rational(0), Rational(1, 2 * lambda), Rational(1, lambda)}) {
                Rational pv = pc.evaluate({{"p", p}});
                Rational ev = ec.evaluate({{"p", p}});
                Rational fv = fc.evaluate({{"p", p}});
                CHECK(fv <= ev);
                CHECK(ev <= pv);
            }
            Rational common = graphpoly::rat_pow(Rational(lambda), -g.vertex_count()) *
                              chromatic_poly(g).evaluate({{"q", Rational(lambda)}});
            CHECK(pc.evaluate({{"p", Rational(1, lambda)}}) == common);
            CHECK(ec.evaluate({{"p", Rational(1, lambda)}}) == common);
            CHECK(fc.evaluate({{"p", Rational(1, lambda)}}) == common);
        }
    }
}

TEST_CASE("pc ec fc multiply over disjoint unions") {
    Multigraph a = complete_graph(3), b = path_graph(3);
    Multigraph both = a.disjoint_union(b);
    CHECK(pc_poly(both) == pc_poly(a) * pc_poly(b));
    for (int lambda : {2, 3}) {
        CHECK(ec_fixed(both, lambda) == ec_fixed(a, lambda) * ec_fixed(b, lambda));
        CHECK(fc_fixed(both, lambda) == fc_fixed(a, lambda) * fc_fixed(b, lambda));
    }
}

TEST_CASE("clique reduction evaluates ec") {
    Multigraph k2 = complete_graph(2);
    CHECK(ec_clique_reduce(th::labelled(k2, {0, 1}, {}), 3) == lp_poly("6*p^2"));

    // Two coloured non-adjacent ends of a path, two colours.
    Multigraph p3 = path_graph(3);
    LabelledGraph ends = th::labelled(p3, {0, 2}, {});
    CHECK(ec_clique_reduce(ends, 2) == ec_labelled(ends, 2));

    // A coloured set bigger than the palette contributes nothing.
    CHECK(ec_clique_reduce(th::labelled(null_graph(3), {0, 1, 2}, {}), 2) ==
          ec_labelled(th::labelled(null_graph(3), {0, 1, 2}, {}), 2));

    for (const Multigraph& g : th::connected_simple_corpus(4)) {
        int n = g.vertex_count();
        for (int lambda : {1, 2, 3}) {
            // A few deterministic labellings per graph: empty, first vertex
            // coloured, last vertex uncoloured, both.
            std::vector<LabelledGraph> labellings{
                th::labelled(g, {}, {}),
                th::labelled(g, {0}, {}),
                th::labelled(g, {}, {n - 1}),
            };
            if (n >= 2) labellings.push_back(th::labelled(g, {0}, {n - 1}));
            if (n >= 3) labellings.push_back(th::labelled(g, {0, 1}, {n - 1}));
            for (const LabelledGraph& lg : labellings)
                CHECK(ec_clique_reduce(lg, lambda) == ec_labelled(lg, lambda));
        }
    }
}

TEST_CASE("state limits are enforced") {
    CHECK_THROWS_WITH_AS(ec_fixed(complete_graph(4), 3, 100),
                         "state enumeration limit exceeded", LimitError);
}
