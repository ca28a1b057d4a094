#include "graphpoly/extra_invariants.hpp"

#include "graphpoly/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace graphpoly {

long long hom_cycle_count(const Multigraph& g, int q, bool surjective,
                          long long state_limit) {
    if (q < 3) throw DomainError("cycle homomorphism count requires q >= 3");
    int n = g.vertex_count();
    double states = 1;
    for (int i = 0; i < n; ++i) states *= q;
    if (states > static_cast<double>(state_limit))
        throw LimitError("state enumeration limit exceeded");

    std::vector<int> image(static_cast<size_t>(n), 0);
    long long count = 0;
    for (;;) {
        bool ok = true;
        for (const Edge& e : g.edges()) {
            int d = image[static_cast<size_t>(e.u)] - image[static_cast<size_t>(e.v)];
            int dist = ((d % q) + q) % q;
            if (dist != 1 && dist != q - 1) {
                ok = false;
                break;
            }
        }
        if (ok && surjective) {
            std::vector<bool> hit(static_cast<size_t>(q), false);
            for (int c : image) hit[static_cast<size_t>(c)] = true;
            ok = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
        }
        if (ok) ++count;
        int pos = 0;
        while (pos < n && ++image[static_cast<size_t>(pos)] == q)
            image[static_cast<size_t>(pos++)] = 0;
        if (pos == n) break;
    }
    return count;
}

long long bounded_chromon_count(const Multigraph& g, int s, long long state_limit) {
    if (s < 0) throw DomainError("chromon bound must be nonnegative");
    int n = g.vertex_count();
    if (s == 0) return n == 0 ? 1 : 0; // each coloured vertex is a chromon already
    if (n > 62) throw LimitError("state enumeration limit exceeded");
    double states = 1;
    for (int i = 0; i < n; ++i) states *= 2;
    if (states > static_cast<double>(state_limit))
        throw LimitError("state enumeration limit exceeded");

    long long count = 0;
    std::vector<int> parent(static_cast<size_t>(n));
    std::vector<int> size(static_cast<size_t>(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        std::fill(size.begin(), size.end(), 1);
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x)
                x = parent[static_cast<size_t>(x)] =
                    parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            return x;
        };
        bool ok = true;
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) continue;
            if ((mask >> e.u & 1) != (mask >> e.v & 1)) continue;
            int a = find(e.u), b = find(e.v);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            parent[static_cast<size_t>(b)] = a;
            size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
            if (size[static_cast<size_t>(a)] > s) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

std::map<int, long long> genus_distribution(const Multigraph& g, long long state_limit) {
    for (const Edge& e : g.edges())
        if (e.is_loop()) throw DomainError("genus distribution restricted to loop-free graphs");
    if (!g.connected()) throw DomainError("genus distribution requires a connected graph");
    int n = g.vertex_count();
    int m = g.edge_count();
    if (m == 0) return {{0, 1}};

    double systems = 1;
    for (int v = 0; v < n; ++v)
        for (int i = 2; i < g.degree(v); ++i) systems *= i;
    if (systems > static_cast<double>(state_limit))
        throw LimitError("state enumeration limit exceeded");

    // Darts 2j (tail u) and 2j+1 (tail v) for edge j = uv; rev flips the low
    // bit. A rotation system assigns each vertex a cyclic order of its
    // outgoing darts; the face permutation is d -> sigma(rev(d)).
    std::vector<std::vector<int>> out(static_cast<size_t>(n));
    for (int j = 0; j < m; ++j) {
        out[static_cast<size_t>(g.edge(j).u)].push_back(2 * j);
        out[static_cast<size_t>(g.edge(j).v)].push_back(2 * j + 1);
    }
    std::vector<int> sigma(static_cast<size_t>(2 * m), -1);
    std::map<int, long long> distribution;

    auto count_faces = [&]() {
        std::vector<bool> seen(static_cast<size_t>(2 * m), false);
        int faces = 0;
        for (int d = 0; d < 2 * m; ++d) {
            if (seen[static_cast<size_t>(d)]) continue;
            ++faces;
            int walk = d;
            while (!seen[static_cast<size_t>(walk)]) {
                seen[static_cast<size_t>(walk)] = true;
                walk = sigma[static_cast<size_t>(walk ^ 1)];
            }
        }
        return faces;
    };

    std::function<void(int)> place = [&](int v) {
        if (v == n) {
            int faces = count_faces();
            distribution[(2 - n + m - faces) / 2]++;
            return;
        }
        std::vector<int>& darts = out[static_cast<size_t>(v)];
        if (darts.empty()) {
            place(v + 1);
            return;
        }
        // First dart stays fixed; the rest range over all arrangements, which
        // enumerates each cyclic order exactly once.
        std::vector<int> rest(darts.begin() + 1, darts.end());
        std::sort(rest.begin(), rest.end());
        do {
            int previous = darts[0];
            for (int d : rest) {
                sigma[static_cast<size_t>(previous)] = d;
                previous = d;
            }
            sigma[static_cast<size_t>(previous)] = darts[0];
            place(v + 1);
        } while (std::next_permutation(rest.begin(), rest.end()));
    };
    place(0);
    return distribution;
}

} // namespace graphpoly
