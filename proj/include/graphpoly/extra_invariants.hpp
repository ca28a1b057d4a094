#pragma once

#include "graphpoly/graph.hpp"

#include <map>

namespace graphpoly {

// Number of homomorphisms from g to the q-cycle (q >= 3): assignments
// f: V -> Z_q with f(u) and f(v) adjacent on the cycle for every edge uv.
// Graphs with loops have none. With surjective set, only assignments using
// every cycle vertex are counted.
long long hom_cycle_count(const Multigraph& g, int q, bool surjective = false,
                          long long state_limit = 10'000'000);

// Number of total 2-colourings whose monochromatic components all have at
// most s vertices.
long long bounded_chromon_count(const Multigraph& g, int s,
                                long long state_limit = 10'000'000);

// Distribution of the embedding genus over all rotation systems of a
// connected loop-free multigraph: genus -> number of systems. The edgeless
// single vertex embeds once in the sphere.
std::map<int, long long> genus_distribution(const Multigraph& g,
                                            long long state_limit = 10'000'000);

} // namespace graphpoly
