#include "graphpoly/partition.hpp"

#include "graphpoly/errors.hpp"

#include <map>
#include <vector>

namespace graphpoly {

namespace {

void check_states(double states, long long limit) {
    if (states > static_cast<double>(limit))
        throw LimitError("state enumeration limit exceeded");
}

// counts[j] = number of q-colourings with exactly j differently-coloured
// non-loop edges.
std::vector<long long> disagreement_counts(const Multigraph& g, int q, long long limit) {
    int n = g.vertex_count();
    int m = g.edge_count();
    double states = 1;
    for (int i = 0; i < n; ++i) states *= q;
    check_states(states, limit);

    std::vector<long long> counts(static_cast<size_t>(m + 1), 0);
    std::vector<int> colour(static_cast<size_t>(n), 0);
    for (;;) {
        int diff = 0;
        for (const Edge& e : g.edges())
            if (colour[static_cast<size_t>(e.u)] != colour[static_cast<size_t>(e.v)]) ++diff;
        counts[static_cast<size_t>(diff)]++;
        int pos = 0;
        while (pos < n && ++colour[static_cast<size_t>(pos)] == q)
            colour[static_cast<size_t>(pos++)] = 0;
        if (pos == n) break;
    }
    return counts;
}

MultiPoly counts_to_poly(const std::vector<long long>& counts, const std::string& var) {
    MultiPoly out;
    for (size_t j = 0; j < counts.size(); ++j)
        if (counts[j])
            out += MultiPoly::monomial(Rational(counts[j]), {{var, static_cast<int>(j)}});
    return out;
}

} // namespace

MultiPoly potts_poly(const Multigraph& g, int q, long long state_limit) {
    if (q < 1) throw DomainError("potts requires q >= 1");
    return counts_to_poly(disagreement_counts(g, q, state_limit), "w");
}

MultiPoly ising_poly(const Multigraph& g, long long state_limit) {
    return counts_to_poly(disagreement_counts(g, 2, state_limit), "s");
}

MultiPoly symat_poly(const Multigraph& g, long long state_limit) {
    int n = g.vertex_count();
    if (n > 30) throw LimitError("state enumeration limit exceeded");
    double states = 1;
    for (int i = 0; i < 2 * n; ++i) states *= 2;
    check_states(states, state_limit);

    std::uint32_t total = std::uint32_t{1} << n;
    std::vector<int> diff(static_cast<size_t>(total), 0);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        int d = 0;
        for (const Edge& e : g.edges())
            if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) ++d;
        diff[mask] = d;
    }
    std::map<std::pair<int, int>, long long> counts; // (a exponent, b exponent)
    for (std::uint32_t s = 0; s < total; ++s)
        for (std::uint32_t t = 0; t < total; ++t)
            counts[{diff[s] + diff[t], diff[s ^ t]}]++;
    MultiPoly out;
    for (const auto& [key, count] : counts)
        out += MultiPoly::monomial(Rational(count), {{"a", key.first}, {"b", key.second}});
    return out;
}

std::string ising_prefactor(const Multigraph& g) {
    return "exp(" + std::to_string(g.edge_count()) + "*K)";
}

std::string symat_prefactor(const Multigraph& g) {
    return "exp(" + std::to_string(g.edge_count()) + "*(2*K + K'))";
}

} // namespace graphpoly
