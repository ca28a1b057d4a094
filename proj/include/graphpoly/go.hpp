#pragma once

#include "graphpoly/graph.hpp"
#include "graphpoly/multipoly.hpp"

#include <vector>

namespace graphpoly {

// Positions place stones of lambda colours on vertices; -1 marks an empty
// vertex. A chromon is a connected monochromatic group of stones; it is free
// when some member has an empty neighbour. A position is legal when every
// chromon is free.
bool legal_position(const Multigraph& g, const std::vector<int>& position);

long long count_legal(const Multigraph& g, int lambda, long long state_limit = 10'000'000);

// Number of legal positions as a polynomial in the colour count l, recovered
// from the counts at l = 0..n by interpolation (the count is a polynomial of
// degree at most n) and cross-checked at l = n + 1.
MultiPoly go_count_poly(const Multigraph& g, long long state_limit = 10'000'000);

// Probability that a random partial colouring (each vertex: one of lambda
// colours with probability p each, else empty) is a legal position, as a
// polynomial in p.
MultiPoly go_prob(const Multigraph& g, int lambda, long long state_limit = 10'000'000);

} // namespace graphpoly
