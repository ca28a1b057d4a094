#include "graphpoly/graph.hpp"

#include "graphpoly/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace graphpoly {

namespace {

// Minimal union-find over 0..n-1.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
        return true;
    }
};

void check_vertex(const Multigraph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw DomainError("vertex index out of range");
}

} // namespace

Multigraph::Multigraph(int n) : n_(n) {
    if (n < 0) throw DomainError("negative vertex count");
}

Multigraph Multigraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Multigraph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Multigraph::add_vertex() { return n_++; }

void Multigraph::add_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u > v) std::swap(u, v);
    edges_.push_back(Edge{u, v});
}

bool Multigraph::adjacent(int u, int v) const { return multiplicity(u, v) > 0; }

int Multigraph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    int count = 0;
    for (const Edge& e : edges_)
        if (e.u == u && e.v == v) ++count;
    return count;
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

int Multigraph::loop_count(int v) const { return multiplicity(v, v); }

bool Multigraph::is_simple() const {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
        if (e.is_loop()) return false;
        if (!seen.emplace(e.u, e.v).second) return false;
    }
    return true;
}

bool Multigraph::edge_is_bridge(int e) const {
    if (edge_is_loop(e)) return false;
    return delete_edge(e).component_count() > component_count();
}

Multigraph Multigraph::delete_edge(int e) const {
    Multigraph out = *this;
    out.edges_.erase(out.edges_.begin() + e);
    return out;
}

Multigraph Multigraph::identify(int u, int v) const {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) throw DomainError("cannot identify a vertex with itself");
    int keep = std::min(u, v);
    int drop = std::max(u, v);
    auto relabel = [&](int w) {
        if (w == drop) return keep;
        return w > drop ? w - 1 : w;
    };
    Multigraph out(n_ - 1);
    for (const Edge& e : edges_) out.add_edge(relabel(e.u), relabel(e.v));
    return out;
}

Multigraph Multigraph::contract_edge(int e) const {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    if (ed.is_loop()) return delete_edge(e);
    return delete_edge(e).identify(ed.u, ed.v);
}

Multigraph Multigraph::with_edge(int u, int v) const {
    Multigraph out = *this;
    out.add_edge(u, v);
    return out;
}

Multigraph Multigraph::disjoint_union(const Multigraph& other) const {
    Multigraph out = *this;
    out.n_ += other.n_;
    for (const Edge& e : other.edges_) out.add_edge(e.u + n_, e.v + n_);
    return out;
}

Multigraph Multigraph::induced_subgraph(const std::vector<int>& vertices) const {
    std::vector<int> verts = vertices;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::map<int, int> relabel;
    for (size_t i = 0; i < verts.size(); ++i) {
        check_vertex(*this, verts[i]);
        relabel[verts[i]] = static_cast<int>(i);
    }
    Multigraph out(static_cast<int>(verts.size()));
    for (const Edge& e : edges_) {
        auto iu = relabel.find(e.u);
        auto iv = relabel.find(e.v);
        if (iu != relabel.end() && iv != relabel.end())
            out.add_edge(iu->second, iv->second);
    }
    return out;
}

Multigraph Multigraph::without_vertices(const std::vector<int>& vertices) const {
    std::set<int> drop(vertices.begin(), vertices.end());
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (!drop.count(v)) keep.push_back(v);
    return induced_subgraph(keep);
}

Multigraph Multigraph::strip_isolated() const {
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (degree(v) > 0) keep.push_back(v);
    return induced_subgraph(keep);
}

std::vector<int> Multigraph::component_ids() const {
    UnionFind uf(n_);
    for (const Edge& e : edges_)
        if (!e.is_loop()) uf.unite(e.u, e.v);
    std::vector<int> ids(static_cast<size_t>(n_), -1);
    int next = 0;
    for (int v = 0; v < n_; ++v) {
        int root = uf.find(v);
        if (ids[static_cast<size_t>(root)] == -1) ids[static_cast<size_t>(root)] = next++;
        ids[static_cast<size_t>(v)] = ids[static_cast<size_t>(root)];
    }
    return ids;
}

int Multigraph::component_count() const {
    if (n_ == 0) return 0;
    auto ids = component_ids();
    return *std::max_element(ids.begin(), ids.end()) + 1;
}

bool Multigraph::connected() const { return component_count() <= 1; }

bool Multigraph::operator==(const Multigraph& rhs) const {
    if (n_ != rhs.n_) return false;
    std::vector<Edge> a = edges_, b = rhs.edges_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::vector<int> Multigraph::neighbours(int v) const {
    std::set<int> out;
    for (const Edge& e : edges_) {
        if (e.is_loop()) continue;
        if (e.u == v) out.insert(e.v);
        if (e.v == v) out.insert(e.u);
    }
    return {out.begin(), out.end()};
}

namespace {

int rank_of_edges(const Multigraph& g, const std::vector<int>& edge_indices,
                  int* covered_out, int* kappa_out) {
    UnionFind uf(g.vertex_count());
    std::vector<bool> covered(static_cast<size_t>(g.vertex_count()), false);
    for (int idx : edge_indices) {
        const Edge& e = g.edge(idx);
        covered[static_cast<size_t>(e.u)] = true;
        covered[static_cast<size_t>(e.v)] = true;
        if (!e.is_loop()) uf.unite(e.u, e.v);
    }
    int nu = 0;
    std::set<int> roots;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (covered[static_cast<size_t>(v)]) {
            ++nu;
            roots.insert(uf.find(v));
        }
    int kappa = static_cast<int>(roots.size());
    if (covered_out) *covered_out = nu;
    if (kappa_out) *kappa_out = kappa;
    return nu - kappa;
}

} // namespace

EdgeSubsetStats subset_stats(const Multigraph& g, const std::vector<int>& edge_indices) {
    for (int idx : edge_indices)
        if (idx < 0 || idx >= g.edge_count())
            throw DomainError("edge index out of range");
    std::vector<bool> in_x(static_cast<size_t>(g.edge_count()), false);
    for (int idx : edge_indices) in_x[static_cast<size_t>(idx)] = true;
    std::vector<int> complement;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!in_x[static_cast<size_t>(e)]) complement.push_back(e);

    EdgeSubsetStats s{};
    s.size = static_cast<int>(edge_indices.size());
    s.rank = rank_of_edges(g, edge_indices, &s.covered_vertices, &s.covered_components);
    s.components = s.covered_components + (g.vertex_count() - s.covered_vertices);
    int full_rank = graph_rank(g);
    int complement_rank = rank_of_edges(g, complement, nullptr, nullptr);
    s.dual_rank = s.size + complement_rank - full_rank;
    return s;
}

EdgeSubsetStats subset_stats(const Multigraph& g, std::uint64_t edge_mask) {
    if (g.edge_count() > 63) throw LimitError("subset enumeration limit exceeded");
    std::vector<int> indices;
    for (int e = 0; e < g.edge_count(); ++e)
        if (edge_mask >> e & 1) indices.push_back(e);
    return subset_stats(g, indices);
}

int graph_rank(const Multigraph& g) {
    UnionFind uf(g.vertex_count());
    int rank = 0;
    for (const Edge& e : g.edges())
        if (!e.is_loop() && uf.unite(e.u, e.v)) ++rank;
    return rank;
}

namespace {

// Iterated degree refinement. Class ids are assigned by sorted signature each
// round, so they are invariant under relabelling.
std::vector<int> refinement_classes(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    std::vector<int> colour(static_cast<size_t>(n));
    {
        std::vector<std::pair<int, int>> base(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) base[static_cast<size_t>(v)] = {g.degree(v), g.loop_count(v)};
        std::vector<std::pair<int, int>> sorted = base;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            colour[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), base[static_cast<size_t>(v)]) -
                sorted.begin());
    }
    for (int round = 0; round < n; ++round) {
        using Sig = std::pair<int, std::vector<int>>;
        std::vector<Sig> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> around;
            for (int u : adj[static_cast<size_t>(v)]) around.push_back(colour[static_cast<size_t>(u)]);
            std::sort(around.begin(), around.end());
            sig[static_cast<size_t>(v)] = {colour[static_cast<size_t>(v)], std::move(around)};
        }
        std::vector<Sig> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<size_t>(v)]) -
                sorted.begin());
        if (next == colour) break;
        colour = std::move(next);
    }
    return colour;
}

// Backtracking search for the least edge-list encoding. Edges of the
// relabelled graph are listed sorted by (max endpoint, min endpoint), which
// lets the sequence grow one placed vertex at a time.
struct CanonicalSearch {
    int n;
    std::vector<std::vector<int>> mult;        // multiplicity matrix, loops on diagonal
    std::vector<std::vector<int>> class_members;
    std::vector<int> pos_class;                // class id expected at each position
    std::vector<bool> used;
    std::vector<int> chosen;
    std::vector<std::pair<int, int>> cur, best;
    bool have_best = false;

    // cur versus the same-length prefix of best: -1 smaller, 0 equal, 1 larger.
    int compare_prefix() const {
        for (size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] < best[i]) return -1;
            if (best[i] < cur[i]) return 1;
        }
        return 0;
    }

    void search(int pos) {
        if (pos == n) {
            if (!have_best || compare_prefix() < 0) {
                best = cur;
                have_best = true;
            }
            return;
        }
        for (int v : class_members[static_cast<size_t>(pos_class[static_cast<size_t>(pos)])]) {
            if (used[static_cast<size_t>(v)]) continue;
            size_t save = cur.size();
            for (int j = 0; j < pos; ++j) {
                int m = mult[static_cast<size_t>(chosen[static_cast<size_t>(j)])][static_cast<size_t>(v)];
                for (int t = 0; t < m; ++t) cur.emplace_back(j, pos);
            }
            for (int t = 0; t < mult[static_cast<size_t>(v)][static_cast<size_t>(v)]; ++t)
                cur.emplace_back(pos, pos);
            if (!have_best || compare_prefix() <= 0) {
                used[static_cast<size_t>(v)] = true;
                chosen[static_cast<size_t>(pos)] = v;
                search(pos + 1);
                used[static_cast<size_t>(v)] = false;
            }
            cur.resize(save);
        }
    }
};

} // namespace

std::string canonical_form(const Multigraph& g, int limit) {
    if (g.vertex_count() > limit) throw LimitError("canonicalisation limit exceeded");
    int n = g.vertex_count();
    CanonicalSearch cs;
    cs.n = n;
    cs.mult.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (const Edge& e : g.edges()) {
        cs.mult[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)]++;
        if (!e.is_loop()) cs.mult[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)]++;
    }
    std::vector<int> colour = refinement_classes(g);
    int classes = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    cs.class_members.assign(static_cast<size_t>(classes), {});
    for (int v = 0; v < n; ++v)
        cs.class_members[static_cast<size_t>(colour[static_cast<size_t>(v)])].push_back(v);
    cs.pos_class.reserve(static_cast<size_t>(n));
    for (int c = 0; c < classes; ++c)
        for (size_t i = 0; i < cs.class_members[static_cast<size_t>(c)].size(); ++i)
            cs.pos_class.push_back(c);
    cs.used.assign(static_cast<size_t>(n), false);
    cs.chosen.assign(static_cast<size_t>(n), -1);
    cs.search(0);

    std::string out = std::to_string(n) + ";";
    for (size_t i = 0; i < cs.best.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(cs.best[i].first) + "-" + std::to_string(cs.best[i].second);
    }
    return out;
}

bool isomorphic(const Multigraph& a, const Multigraph& b, int limit) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto degree_profile = [](const Multigraph& g) {
        std::vector<std::pair<int, int>> p;
        for (int v = 0; v < g.vertex_count(); ++v) p.emplace_back(g.degree(v), g.loop_count(v));
        std::sort(p.begin(), p.end());
        return p;
    };
    if (degree_profile(a) != degree_profile(b)) return false;
    return canonical_form(a, limit) == canonical_form(b, limit);
}

std::vector<Multigraph> blocks(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n)); // (other, edge)
    std::vector<Multigraph> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) {
            Multigraph loop_block(1);
            loop_block.add_edge(0, 0);
            out.push_back(std::move(loop_block));
            continue;
        }
        adj[static_cast<size_t>(ed.u)].emplace_back(ed.v, e);
        adj[static_cast<size_t>(ed.v)].emplace_back(ed.u, e);
    }

    std::vector<int> disc(static_cast<size_t>(n), 0), low(static_cast<size_t>(n), 0);
    std::vector<int> edge_stack;
    std::vector<bool> edge_seen(static_cast<size_t>(g.edge_count()), false);
    int timer = 0;

    auto emit_block = [&](int top_edge) {
        std::vector<int> block_edges;
        while (!edge_stack.empty()) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            block_edges.push_back(e);
            if (e == top_edge) break;
        }
        std::vector<int> verts;
        for (int e : block_edges) {
            verts.push_back(g.edge(e).u);
            verts.push_back(g.edge(e).v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::map<int, int> relabel;
        for (size_t i = 0; i < verts.size(); ++i) relabel[verts[i]] = static_cast<int>(i);
        Multigraph block(static_cast<int>(verts.size()));
        std::sort(block_edges.begin(), block_edges.end());
        for (int e : block_edges) block.add_edge(relabel[g.edge(e).u], relabel[g.edge(e).v]);
        out.push_back(std::move(block));
    };

    std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
        disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = ++timer;
        for (const auto& [v, e] : adj[static_cast<size_t>(u)]) {
            if (e == parent_edge) continue;
            if (!edge_seen[static_cast<size_t>(e)]) {
                edge_seen[static_cast<size_t>(e)] = true;
                edge_stack.push_back(e);
            }
            if (disc[static_cast<size_t>(v)] == 0) {
                dfs(v, e);
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(v)]);
                if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(u)]) emit_block(e);
            } else {
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(v)]);
            }
        }
    };

    for (int v = 0; v < n; ++v)
        if (disc[static_cast<size_t>(v)] == 0) dfs(v, -1);
    return out;
}

Multigraph null_graph(int n) { return Multigraph(n); }

Multigraph complete_graph(int n) {
    Multigraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Multigraph path_graph(int n) {
    Multigraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Multigraph cycle_graph(int n) {
    if (n < 1) throw DomainError("cycle needs at least one vertex");
    Multigraph g(n);
    if (n == 1) {
        g.add_edge(0, 0);
        return g;
    }
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(n - 1, 0);
    return g;
}

Multigraph complete_bipartite(int a, int b) {
    Multigraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Multigraph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Multigraph gray_graph_a() {
    return Multigraph::from_edges(6, {{0, 1},
                                      {0, 1},
                                      {0, 2},
                                      {1, 2},
                                      {1, 3},
                                      {2, 3},
                                      {1, 4},
                                      {3, 4},
                                      {2, 5},
                                      {4, 5}});
}

Multigraph gray_graph_b() {
    return Multigraph::from_edges(6, {{0, 1},
                                      {0, 2},
                                      {1, 2},
                                      {2, 3},
                                      {2, 3},
                                      {3, 5},
                                      {1, 4},
                                      {3, 4},
                                      {2, 5},
                                      {4, 5}});
}

Multigraph line_graph(const Multigraph& g) {
    if (!g.is_simple()) throw DomainError("line graph restricted to simple graphs");
    Multigraph lg(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        for (int f = e + 1; f < g.edge_count(); ++f) {
            const Edge& a = g.edge(e);
            const Edge& b = g.edge(f);
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) lg.add_edge(e, f);
        }
    return lg;
}

} // namespace graphpoly
