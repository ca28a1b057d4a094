#include "graphpoly/partial_colouring.hpp"

#include "graphpoly/errors.hpp"
#include "graphpoly/tutte.hpp"

#include <algorithm>
#include <set>

namespace graphpoly {

namespace {

void check_lambda(int lambda) {
    if (lambda < 0) throw DomainError("negative colour count");
}

MultiPoly uncoloured_weight_sym(int count) {
    // (1 - l*p)^count
    MultiPoly base = MultiPoly{Rational(1)} -
                     MultiPoly::monomial(Rational(1), {{"l", 1}, {"p", 1}});
    return base.pow(count);
}

MultiPoly uncoloured_weight(int lambda, int count) {
    MultiPoly base = MultiPoly{Rational(1)} -
                     MultiPoly::monomial(Rational(lambda), {{"p", 1}});
    return base.pow(count);
}

void check_labels(const LabelledGraph& lg) {
    for (int v : lg.coloured)
        if (std::binary_search(lg.uncoloured.begin(), lg.uncoloured.end(), v))
            throw DomainError("vertex labelled both coloured and uncoloured");
}

std::vector<int> free_vertices(const LabelledGraph& lg) {
    std::vector<int> free;
    for (int v = 0; v < lg.graph.vertex_count(); ++v)
        if (!std::binary_search(lg.coloured.begin(), lg.coloured.end(), v) &&
            !std::binary_search(lg.uncoloured.begin(), lg.uncoloured.end(), v))
            free.push_back(v);
    return free;
}

} // namespace

MultiPoly pc_labelled(const LabelledGraph& lg) {
    check_labels(lg);
    const Multigraph& g = lg.graph;
    int n = g.vertex_count();
    std::vector<int> free = free_vertices(lg);
    MultiPoly total;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << free.size()); ++pick) {
        std::vector<int> domain = lg.coloured;
        for (size_t i = 0; i < free.size(); ++i)
            if (pick >> i & 1) domain.push_back(free[i]);
        MultiPoly proper = chromatic_poly(g.induced_subgraph(domain)).substitute(
            "q", MultiPoly::variable("l"));
        int d = static_cast<int>(domain.size());
        total += proper * MultiPoly::monomial(Rational(1), {{"p", d}}) *
                 uncoloured_weight_sym(n - d);
    }
    return total;
}

MultiPoly pc_poly(const Multigraph& g) { return pc_labelled({g, {}, {}}); }

MultiPoly pc_fixed(const Multigraph& g, int lambda) {
    check_lambda(lambda);
    return pc_poly(g).substitute("l", Rational(lambda));
}

namespace {

LabelledGraph labelled_with(const LabelledGraph& lg, int v, bool colour) {
    LabelledGraph out = lg;
    auto& target = colour ? out.coloured : out.uncoloured;
    target.insert(std::upper_bound(target.begin(), target.end(), v), v);
    return out;
}

MultiPoly pc_reduction_step(const LabelledGraph& lg, int lambda) {
    std::vector<int> free = free_vertices(lg);
    if (!free.empty()) {
        int v = free.front();
        return pc_reduction_step(labelled_with(lg, v, true), lambda) +
               pc_reduction_step(labelled_with(lg, v, false), lambda);
    }
    const Multigraph& g = lg.graph;
    int n = g.vertex_count();
    int u = static_cast<int>(lg.uncoloured.size());
    MultiPoly proper =
        chromatic_poly(g.without_vertices(lg.uncoloured)).substitute("q", Rational(lambda));
    return proper * MultiPoly::monomial(Rational(1), {{"p", n - u}}) *
           uncoloured_weight(lambda, u);
}

} // namespace

MultiPoly pc_via_reduction(const Multigraph& g, int lambda) {
    check_lambda(lambda);
    return pc_reduction_step({g, {}, {}}, lambda);
}

bool proper_on_domain(const Multigraph& g, const std::vector<int>& partial) {
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) {
            if (partial[static_cast<size_t>(e.u)] >= 0) return false;
            continue;
        }
        int cu = partial[static_cast<size_t>(e.u)];
        int cv = partial[static_cast<size_t>(e.v)];
        if (cu >= 0 && cu == cv) return false;
    }
    return true;
}

namespace {

bool extend_from(const Multigraph& g, std::vector<int>& partial, int lambda, size_t pos,
                 const std::vector<int>& todo) {
    if (pos == todo.size()) return true;
    int v = todo[pos];
    for (int c = 0; c < lambda; ++c) {
        bool ok = true;
        for (int u : g.neighbours(v))
            if (partial[static_cast<size_t>(u)] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        partial[static_cast<size_t>(v)] = c;
        if (extend_from(g, partial, lambda, pos + 1, todo)) {
            partial[static_cast<size_t>(v)] = -1;
            return true;
        }
        partial[static_cast<size_t>(v)] = -1;
    }
    return false;
}

} // namespace

bool extendable(const Multigraph& g, const std::vector<int>& partial, int lambda) {
    if (!proper_on_domain(g, partial)) return false;
    for (const Edge& e : g.edges())
        if (e.is_loop()) return false; // loops admit no proper total colouring
    std::vector<int> todo;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (partial[static_cast<size_t>(v)] < 0) todo.push_back(v);
    std::vector<int> work = partial;
    return extend_from(g, work, lambda, 0, todo);
}

int forced_colour(const Multigraph& g, const std::vector<int>& partial, int lambda, int v) {
    if (partial[static_cast<size_t>(v)] >= 0) return -1;
    std::set<int> seen;
    for (int u : g.neighbours(v)) {
        int c = partial[static_cast<size_t>(u)];
        if (c >= 0) seen.insert(c);
    }
    if (static_cast<int>(seen.size()) != lambda - 1) return -1;
    for (int c = 0; c < lambda; ++c)
        if (!seen.count(c)) return c;
    return -1;
}

std::vector<int> forced_vertices(const Multigraph& g, const std::vector<int>& partial,
                                 int lambda) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (forced_colour(g, partial, lambda, v) >= 0) out.push_back(v);
    return out;
}

std::vector<int> forcing_closure(const Multigraph& g, std::vector<int> partial, int lambda) {
    for (;;) {
        bool progressed = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int c = forced_colour(g, partial, lambda, v);
            if (c >= 0) {
                partial[static_cast<size_t>(v)] = c;
                progressed = true;
            }
        }
        if (!progressed) return partial;
    }
}

namespace {

enum class Property { Extendable, ForcedTotal };

bool closure_total_proper(const Multigraph& g, const std::vector<int>& partial, int lambda) {
    if (!proper_on_domain(g, partial)) return false;
    std::vector<int> closed = forcing_closure(g, partial, lambda);
    for (int c : closed)
        if (c < 0) return false;
    return proper_on_domain(g, closed);
}

MultiPoly labelled_state_sum(const LabelledGraph& lg, int lambda, long long state_limit,
                             Property property) {
    check_lambda(lambda);
    check_labels(lg);
    const Multigraph& g = lg.graph;
    int n = g.vertex_count();
    std::vector<int> free = free_vertices(lg);

    double states = 1;
    for (size_t i = 0; i < lg.coloured.size(); ++i) states *= lambda;
    for (size_t i = 0; i < free.size(); ++i) states *= lambda + 1;
    if (states > static_cast<double>(state_limit))
        throw LimitError("state enumeration limit exceeded");
    if (states == 0) return MultiPoly{}; // coloured vertices but no colours

    // Mixed-radix odometer: coloured vertices range over colours, free
    // vertices additionally over "uncoloured".
    std::vector<int> slots;       // vertex per digit
    std::vector<int> radix;
    for (int v : lg.coloured) {
        slots.push_back(v);
        radix.push_back(lambda);
    }
    for (int v : free) {
        slots.push_back(v);
        radix.push_back(lambda + 1);
    }
    std::vector<int> digit(slots.size(), 0);
    std::vector<long long> by_domain(static_cast<size_t>(n + 1), 0);
    for (;;) {
        std::vector<int> partial(static_cast<size_t>(n), -1);
        int domain = 0;
        for (size_t i = 0; i < slots.size(); ++i) {
            int value = digit[i] == lambda ? -1 : digit[i];
            partial[static_cast<size_t>(slots[i])] = value;
            if (value >= 0) ++domain;
        }
        bool ok = property == Property::Extendable
                      ? extendable(g, partial, lambda)
                      : closure_total_proper(g, partial, lambda);
        if (ok) by_domain[static_cast<size_t>(domain)]++;
        size_t pos = 0;
        while (pos < digit.size() && ++digit[pos] == radix[pos]) digit[pos++] = 0;
        if (pos == digit.size()) break;
    }

    MultiPoly total;
    for (int d = 0; d <= n; ++d)
        if (by_domain[static_cast<size_t>(d)])
            total += MultiPoly::monomial(Rational(by_domain[static_cast<size_t>(d)]),
                                         {{"p", d}}) *
                     uncoloured_weight(lambda, n - d);
    return total;
}

} // namespace

MultiPoly ec_labelled(const LabelledGraph& lg, int lambda, long long state_limit) {
    return labelled_state_sum(lg, lambda, state_limit, Property::Extendable);
}

MultiPoly fc_labelled(const LabelledGraph& lg, int lambda, long long state_limit) {
    return labelled_state_sum(lg, lambda, state_limit, Property::ForcedTotal);
}

MultiPoly ec_fixed(const Multigraph& g, int lambda, long long state_limit) {
    return ec_labelled({g, {}, {}}, lambda, state_limit);
}

MultiPoly fc_fixed(const Multigraph& g, int lambda, long long state_limit) {
    return fc_labelled({g, {}, {}}, lambda, state_limit);
}

namespace {

bool colourable(const Multigraph& g, int lambda) {
    std::vector<int> empty(static_cast<size_t>(g.vertex_count()), -1);
    return extendable(g, empty, lambda);
}

// Relabels C and U through the merge performed by Multigraph::identify.
LabelledGraph identify_labelled(const LabelledGraph& lg, int u, int v) {
    int keep = std::min(u, v);
    int drop = std::max(u, v);
    auto relabel = [&](int w) {
        if (w == drop) return keep;
        return w > drop ? w - 1 : w;
    };
    LabelledGraph out;
    out.graph = lg.graph.identify(u, v);
    std::set<int> c, uu;
    for (int w : lg.coloured) c.insert(relabel(w));
    for (int w : lg.uncoloured) uu.insert(relabel(w));
    out.coloured.assign(c.begin(), c.end());
    out.uncoloured.assign(uu.begin(), uu.end());
    return out;
}

} // namespace

MultiPoly ec_clique_reduce(const LabelledGraph& lg, int lambda) {
    check_lambda(lambda);
    check_labels(lg);
    std::vector<int> free = free_vertices(lg);
    if (!free.empty()) {
        int v = free.front();
        return ec_clique_reduce(labelled_with(lg, v, true), lambda) +
               ec_clique_reduce(labelled_with(lg, v, false), lambda);
    }
    const std::vector<int>& d = lg.coloured;
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j) {
            if (lg.graph.adjacent(d[i], d[j])) continue;
            LabelledGraph joined = lg;
            joined.graph = lg.graph.with_edge(d[i], d[j]);
            return ec_clique_reduce(joined, lambda) +
                   MultiPoly::variable("p") *
                       ec_clique_reduce(identify_labelled(lg, d[i], d[j]), lambda);
        }
    // The coloured set is a clique; any injective colouring of it extends
    // exactly when the whole graph is colourable.
    if (!colourable(lg.graph, lambda)) return MultiPoly{};
    int size = static_cast<int>(d.size());
    return MultiPoly::monomial(falling_factorial(Rational(lambda), size), {{"p", size}}) *
           uncoloured_weight(lambda, static_cast<int>(lg.uncoloured.size()));
}

} // namespace graphpoly
