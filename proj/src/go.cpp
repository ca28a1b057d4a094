#include "graphpoly/go.hpp"

#include "graphpoly/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace graphpoly {

bool legal_position(const Multigraph& g, const std::vector<int>& position) {
    int n = g.vertex_count();
    // Group same-coloured stones into chromons.
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        int cu = position[static_cast<size_t>(e.u)];
        if (cu >= 0 && cu == position[static_cast<size_t>(e.v)]) {
            int a = find(e.u), b = find(e.v);
            if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    std::vector<bool> free_root(static_cast<size_t>(n), false);
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        int cu = position[static_cast<size_t>(e.u)];
        int cv = position[static_cast<size_t>(e.v)];
        if (cu >= 0 && cv < 0) free_root[static_cast<size_t>(find(e.u))] = true;
        if (cv >= 0 && cu < 0) free_root[static_cast<size_t>(find(e.v))] = true;
    }
    for (int v = 0; v < n; ++v)
        if (position[static_cast<size_t>(v)] >= 0 && !free_root[static_cast<size_t>(find(v))])
            return false;
    return true;
}

namespace {

// Runs fn over every position with the given number of colours.
template <typename Fn>
void for_each_position(const Multigraph& g, int lambda, long long state_limit, Fn fn) {
    int n = g.vertex_count();
    double states = 1;
    for (int i = 0; i < n; ++i) states *= lambda + 1;
    if (states > static_cast<double>(state_limit))
        throw LimitError("state enumeration limit exceeded");
    std::vector<int> position(static_cast<size_t>(n), -1);
    for (;;) {
        fn(position);
        int pos = 0;
        while (pos < n) {
            int& digit = position[static_cast<size_t>(pos)];
            if (++digit == lambda) {
                digit = -1;
                ++pos;
            } else {
                break;
            }
        }
        if (pos == n) break;
    }
}

} // namespace

long long count_legal(const Multigraph& g, int lambda, long long state_limit) {
    if (lambda < 0) throw DomainError("negative colour count");
    long long count = 0;
    for_each_position(g, lambda, state_limit, [&](const std::vector<int>& position) {
        if (legal_position(g, position)) ++count;
    });
    return count;
}

MultiPoly go_count_poly(const Multigraph& g, long long state_limit) {
    int n = g.vertex_count();
    std::vector<std::pair<Rational, Rational>> points;
    for (int lambda = 0; lambda <= n; ++lambda)
        points.emplace_back(Rational(lambda), Rational(count_legal(g, lambda, state_limit)));
    MultiPoly poly = interpolate(points, "l");
    Rational check = poly.evaluate({{"l", Rational(n + 1)}});
    if (check != Rational(count_legal(g, n + 1, state_limit)))
        throw std::logic_error("legal position count is not a degree-n polynomial");
    return poly;
}

MultiPoly go_prob(const Multigraph& g, int lambda, long long state_limit) {
    if (lambda < 0) throw DomainError("negative colour count");
    int n = g.vertex_count();
    std::vector<long long> by_domain(static_cast<size_t>(n + 1), 0);
    for_each_position(g, lambda, state_limit, [&](const std::vector<int>& position) {
        if (!legal_position(g, position)) return;
        int stones = 0;
        for (int c : position)
            if (c >= 0) ++stones;
        by_domain[static_cast<size_t>(stones)]++;
    });
    MultiPoly empty_weight = MultiPoly{Rational(1)} -
                             MultiPoly::monomial(Rational(lambda), {{"p", 1}});
    MultiPoly total;
    for (int d = 0; d <= n; ++d)
        if (by_domain[static_cast<size_t>(d)])
            total += MultiPoly::monomial(Rational(by_domain[static_cast<size_t>(d)]),
                                         {{"p", d}}) *
                     empty_weight.pow(n - d);
    return total;
}

} // namespace graphpoly
