#include "graphpoly/tutte.hpp"

#include "graphpoly/errors.hpp"

#include <numeric>
#include <vector>

namespace graphpoly {

namespace {

// Index of the pivot edge under the given rule, or -1 if no edge is ordinary.
int pick_pivot(const Multigraph& g, PivotRule rule) {
    if (rule == PivotRule::FirstOrdinary) {
        for (int e = 0; e < g.edge_count(); ++e)
            if (g.edge_is_ordinary(e)) return e;
    } else {
        for (int e = g.edge_count() - 1; e >= 0; --e)
            if (g.edge_is_ordinary(e)) return e;
    }
    return -1;
}

} // namespace

MultiPoly TutteEngine::tutte(const Multigraph& g) { return compute(g); }

MultiPoly TutteEngine::compute(const Multigraph& g) {
    Multigraph core = g.strip_isolated();
    bool can_memo = options_.memoize && core.vertex_count() <= options_.canon_limit;
    std::string key;
    if (can_memo) {
        key = canonical_form(core, options_.canon_limit);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            ++hits_;
            return it->second;
        }
    }

    MultiPoly result;
    int pivot = pick_pivot(core, options_.pivot);
    if (pivot < 0) {
        // Only loops and bridges remain: T = x^bridges * y^loops.
        int loops = 0;
        for (int e = 0; e < core.edge_count(); ++e)
            if (core.edge_is_loop(e)) ++loops;
        int bridges = core.edge_count() - loops;
        result = MultiPoly::monomial(Rational(1), {{"x", bridges}, {"y", loops}});
    } else {
        result = compute(core.delete_edge(pivot)) + compute(core.contract_edge(pivot));
    }

    if (can_memo) memo_.emplace(std::move(key), result);
    return result;
}

MultiPoly tutte_poly(const Multigraph& g, TutteOptions options) {
    TutteEngine engine(options);
    return engine.tutte(g);
}

MultiPoly whitney_rank_poly(const Multigraph& g, int subset_limit) {
    int m = g.edge_count();
    if (m > subset_limit || m > 62) throw LimitError("subset enumeration limit exceeded");
    int n = g.vertex_count();
    int full_rank = graph_rank(g);

    // counts[a][b] accumulates subsets with x-exponent a and y-exponent b
    std::vector<std::vector<long long>> counts(
        static_cast<size_t>(full_rank + 1), std::vector<long long>(static_cast<size_t>(m + 1), 0));
    std::vector<int> parent(static_cast<size_t>(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                parent[static_cast<size_t>(x)] =
                    parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                x = parent[static_cast<size_t>(x)];
            }
            return x;
        };
        int rank = 0, size = 0;
        for (int e = 0; e < m; ++e) {
            if (!(mask >> e & 1)) continue;
            ++size;
            const Edge& ed = g.edge(e);
            int a = find(ed.u), b = find(ed.v);
            if (a != b) {
                parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
                ++rank;
            }
        }
        counts[static_cast<size_t>(full_rank - rank)][static_cast<size_t>(size - rank)]++;
    }

    MultiPoly out;
    for (int a = 0; a <= full_rank; ++a)
        for (int b = 0; b <= m; ++b)
            if (counts[static_cast<size_t>(a)][static_cast<size_t>(b)])
                out += MultiPoly::monomial(
                    Rational(counts[static_cast<size_t>(a)][static_cast<size_t>(b)]),
                    {{"x", a}, {"y", b}});
    return out;
}

MultiPoly whitney_from_tutte(const MultiPoly& tutte) {
    MultiPoly xp = MultiPoly::variable("x") + MultiPoly{Rational(1)};
    MultiPoly yp = MultiPoly::variable("y") + MultiPoly{Rational(1)};
    return tutte.substitute("x", xp).substitute("y", yp);
}

MultiPoly tutte_from_whitney(const MultiPoly& whitney) {
    MultiPoly xm = MultiPoly::variable("x") - MultiPoly{Rational(1)};
    MultiPoly ym = MultiPoly::variable("y") - MultiPoly{Rational(1)};
    return whitney.substitute("x", xm).substitute("y", ym);
}

MultiPoly chromatic_poly(const Multigraph& g, TutteOptions options) {
    MultiPoly t = tutte_poly(g, options);
    MultiPoly q = MultiPoly::variable("q");
    MultiPoly body = t.substitute("x", MultiPoly{Rational(1)} - q).substitute("y", Rational(0));
    int rank = graph_rank(g);
    Rational sign = rank % 2 == 0 ? Rational(1) : Rational(-1);
    return body * MultiPoly::monomial(sign, {{"q", g.component_count()}});
}

MultiPoly edge_chromatic_poly(const Multigraph& g, TutteOptions options) {
    return chromatic_poly(line_graph(g), options);
}

MultiPoly bp_poly(const Multigraph& g, int subset_limit) {
    int m = g.edge_count();
    if (m > subset_limit || m > 62) throw LimitError("subset enumeration limit exceeded");
    MultiPoly out;
    std::map<std::vector<int>, long long> counts; // (|X|, k, covered) -> count
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        EdgeSubsetStats s = subset_stats(g, mask);
        counts[{s.size, s.components, s.covered_vertices}]++;
    }
    for (const auto& [key, count] : counts)
        out += MultiPoly::monomial(Rational(count),
                                   {{"x", key[0]}, {"y", key[1]}, {"z", key[2]}});
    return out;
}

} // namespace graphpoly
