#include "graphpoly/errors.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/graph_io.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace graphpoly;
namespace th = test_helpers;

TEST_CASE("edge classification") {
    Multigraph g = Multigraph::from_edges(4, {{0, 1}, {0, 1}, {1, 2}, {2, 2}});
    CHECK(g.degree(1) == 3);
    CHECK(g.degree(2) == 3); // the loop counts twice
    CHECK(g.loop_count(2) == 1);
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK_FALSE(g.is_simple());
    CHECK(g.edge_is_loop(3));
    CHECK_FALSE(g.edge_is_bridge(0)); // parallel partner keeps 0-1 connected
    CHECK(g.edge_is_bridge(2));
    CHECK(g.edge_is_ordinary(0));
    CHECK_FALSE(g.edge_is_ordinary(2));
    CHECK_FALSE(g.edge_is_ordinary(3));
    CHECK(g.neighbours(2) == std::vector<int>{1});
    CHECK(g.neighbours(3).empty());
}

TEST_CASE("deletion, contraction, identification relabel compactly") {
    Multigraph g = Multigraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
    Multigraph del = g.delete_edge(1);
    CHECK(del.vertex_count() == 4);
    CHECK(del.edge_count() == 3);

    // Contracting 1-2 merges into vertex 1; vertex 3 becomes 2.
    Multigraph con = g.contract_edge(1);
    CHECK(con.vertex_count() == 3);
    CHECK(con.edge_count() == 3);
    CHECK(con.multiplicity(1, 2) == 2);

    // Contracting one of a parallel pair turns the other copy into a loop.
    Multigraph par = Multigraph::from_edges(2, {{0, 1}, {0, 1}});
    Multigraph merged = par.contract_edge(0);
    CHECK(merged.vertex_count() == 1);
    CHECK(merged.loop_count(0) == 1);

    // Contracting a loop deletes it.
    Multigraph loop = Multigraph::from_edges(1, {{0, 0}});
    CHECK(loop.contract_edge(0) == null_graph(1));

    // Identifying adjacent vertices turns joining edges into loops.
    Multigraph ident = Multigraph::from_edges(3, {{0, 1}, {1, 2}}).identify(0, 1);
    CHECK(ident.vertex_count() == 2);
    CHECK(ident.loop_count(0) == 1);
    CHECK(ident.multiplicity(0, 1) == 1);
}

TEST_CASE("components and induced subgraphs") {
    Multigraph g = Multigraph::from_edges(5, {{0, 1}, {3, 4}});
    CHECK(g.component_count() == 3);
    CHECK_FALSE(g.connected());
    CHECK(null_graph(0).connected());
    CHECK(g.induced_subgraph({0, 1, 2}).edge_count() == 1);
    CHECK(g.without_vertices({2, 4}).vertex_count() == 3);
    CHECK(g.strip_isolated().vertex_count() == 4);
    CHECK(g.disjoint_union(g).component_count() == 6);

    std::vector<int> ids = g.component_ids();
    CHECK(ids[0] == ids[1]);
    CHECK(ids[3] == ids[4]);
    CHECK(ids[0] != ids[2]);
}

TEST_CASE("subset statistics match the worked examples") {
    Multigraph c4 = cycle_graph(4);
    EdgeSubsetStats empty = subset_stats(c4, std::uint64_t{0});
    CHECK(empty == EdgeSubsetStats{0, 0, 0, 4, 0, 0});

    // Two adjacent edges of the square: 3 vertices covered, one covered
    // component, two components overall, rank 2, dual rank 1.
    EdgeSubsetStats adj = subset_stats(c4, std::vector<int>{0, 1});
    CHECK(adj.size == 2);
    CHECK(adj.covered_vertices == 3);
    CHECK(adj.covered_components == 1);
    CHECK(adj.components == 2);
    CHECK(adj.rank == 2);
    CHECK(adj.dual_rank == 1);

    EdgeSubsetStats full = subset_stats(c4, std::uint64_t{0b1111});
    CHECK(full.rank == 3);
    CHECK(full.dual_rank == 1);
    CHECK(graph_rank(c4) == 3);

    // A loop contributes to dual rank but never to rank.
    Multigraph loop = Multigraph::from_edges(1, {{0, 0}});
    EdgeSubsetStats ls = subset_stats(loop, std::uint64_t{1});
    CHECK(ls.rank == 0);
    CHECK(ls.dual_rank == 1);
    CHECK(ls.covered_vertices == 1);
}

TEST_CASE("subset rank agrees with GF(2) elimination on random graphs") {
    for (const Multigraph& g : th::random_multigraphs(25, 6, 8, 12345)) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
            EdgeSubsetStats st = subset_stats(g, mask);
            CHECK(st.rank == th::gf2_rank(g, mask));
        }
    }
}

TEST_CASE("canonical form characterises isomorphism") {
    Multigraph c4 = cycle_graph(4);
    Multigraph c4_relabelled = Multigraph::from_edges(4, {{2, 0}, {0, 3}, {3, 1}, {1, 2}});
    CHECK(canonical_form(c4) == canonical_form(c4_relabelled));
    CHECK(isomorphic(c4, c4_relabelled));
    CHECK_FALSE(isomorphic(c4, path_graph(4)));
    CHECK_FALSE(isomorphic(path_graph(4), star_graph(3)));
    CHECK(isomorphic(complete_bipartite(1, 3), star_graph(3)));
    CHECK_FALSE(isomorphic(th::gray_a(), th::gray_b()));
    CHECK(isomorphic(null_graph(0), null_graph(0)));

    // Parallel edges and loops are part of the form.
    Multigraph digon = cycle_graph(2);
    CHECK_FALSE(isomorphic(digon, path_graph(2)));
    Multigraph loop1 = Multigraph::from_edges(1, {{0, 0}});
    CHECK_FALSE(isomorphic(loop1, null_graph(1)));

    CHECK_THROWS_WITH_AS(canonical_form(null_graph(11)),
                         "canonicalisation limit exceeded", LimitError);
    CHECK(canonical_form(null_graph(11), 11) != "");
}

TEST_CASE("canonical form is invariant under random relabelling") {
    std::mt19937 gen(777);
    for (const Multigraph& g : th::random_multigraphs(20, 6, 8, 999)) {
        std::vector<int> perm(static_cast<size_t>(g.vertex_count()));
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::shuffle(perm.begin(), perm.end(), gen);
        Multigraph h(g.vertex_count());
        for (const Edge& e : g.edges())
            h.add_edge(perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)]);
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("corpus generator finds the known isomorphism-class counts") {
    std::vector<Multigraph> corpus = th::connected_simple_corpus(5);
    CHECK(corpus.size() == 31); // 1 + 1 + 2 + 6 + 21 connected simple graphs
    std::set<std::string> forms;
    for (const Multigraph& g : corpus) forms.insert(canonical_form(g));
    CHECK(forms.size() == corpus.size());
}

TEST_CASE("blocks decompose at cut vertices") {
    // Two triangles sharing vertex 2, plus a pendant edge and a loop.
    Multigraph g = Multigraph::from_edges(
        6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 5}});
    std::vector<Multigraph> bs = blocks(g);
    REQUIRE(bs.size() == 4);
    int triangles = 0, bridges = 0, loops = 0;
    for (const Multigraph& b : bs) {
        if (isomorphic(b, complete_graph(3))) ++triangles;
        if (isomorphic(b, path_graph(2))) ++bridges;
        if (isomorphic(b, Multigraph::from_edges(1, {{0, 0}}))) ++loops;
    }
    CHECK(triangles == 2);
    CHECK(bridges == 1);
    CHECK(loops == 1);

    CHECK(blocks(null_graph(3)).empty());
    CHECK(blocks(cycle_graph(4)).size() == 1);
    // A parallel pair is 2-connected, not two bridges.
    CHECK(blocks(cycle_graph(2)).size() == 1);
}

TEST_CASE("named constructions") {
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(cycle_graph(1).loop_count(0) == 1);
    CHECK(cycle_graph(2).multiplicity(0, 1) == 2);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(star_graph(3).degree(0) == 3);

    // The shipped six-vertex pair: ten edges each, exactly one doubled pair,
    // and the two are not isomorphic.
    for (const Multigraph& g : {gray_graph_a(), gray_graph_b()}) {
        CHECK(g.vertex_count() == 6);
        CHECK(g.edge_count() == 10);
        int doubled = 0;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (g.multiplicity(u, v) == 2) ++doubled;
        CHECK(doubled == 1);
        CHECK(g.loop_count(0) + g.loop_count(1) + g.loop_count(2) +
                  g.loop_count(3) + g.loop_count(4) + g.loop_count(5) ==
              0);
    }
    CHECK_FALSE(isomorphic(gray_graph_a(), gray_graph_b()));
}

TEST_CASE("line graphs") {
    // L(P_3) = K_2, L(K_3) = K_3, L(star_3) = K_3.
    CHECK(isomorphic(line_graph(path_graph(3)), path_graph(2)));
    CHECK(isomorphic(line_graph(complete_graph(3)), complete_graph(3)));
    CHECK(isomorphic(line_graph(star_graph(3)), complete_graph(3)));
    CHECK(line_graph(complete_graph(4)).edge_count() == 12);
    CHECK(line_graph(null_graph(2)).vertex_count() == 0);
    CHECK_THROWS_WITH_AS(line_graph(cycle_graph(2)),
                         "line graph restricted to simple graphs", DomainError);
}

TEST_CASE("edge list parsing") {
    LabelledGraph lg = parse_edge_list("# toy\n3 2\n0 1\n1 2\nC: 0\nU: 2\n");
    CHECK(lg.graph.vertex_count() == 3);
    CHECK(lg.graph.edge_count() == 2);
    CHECK(lg.coloured == std::vector<int>{0});
    CHECK(lg.uncoloured == std::vector<int>{2});

    CHECK(parse_edge_list("0 0\n").graph.vertex_count() == 0);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\nC: 0\nU: 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("x y\n"), ParseError);

    Multigraph g = Multigraph::from_edges(3, {{0, 1}, {1, 1}});
    LabelledGraph round = parse_edge_list(to_edge_list(g));
    CHECK(round.graph == g);
}

TEST_CASE("graph6 parsing") {
    // "A_" is the single edge on two vertices, "C~" the complete graph K_4.
    Multigraph k2 = parse_graph6("A_");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(isomorphic(parse_graph6("C~"), complete_graph(4)));
    CHECK(isomorphic(parse_graph6(">>graph6<<C~"), complete_graph(4)));
    CHECK(parse_graph6("D??").vertex_count() == 5);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("A"), ParseError);

    // Dispatch: an edge list needs a space on its first data line.
    CHECK(parse_graph_text("2 1\n0 1\n").graph == Multigraph::from_edges(2, {{0, 1}}));
    CHECK(parse_graph_text("A_").graph.edge_count() == 1);
}
