#pragma once

#include "graphpoly/graph_io.hpp"
#include "graphpoly/multipoly.hpp"

#include <vector>

namespace graphpoly {

// Random partial colourings: every vertex independently receives one of
// lambda colours (probability p each) or stays uncoloured (probability
// 1 - lambda*p). A labelled graph restricts the event to colourings whose
// domain contains C and avoids U. Polynomials are over variables p and, where
// lambda stays symbolic, l.

// Probability that the partial colouring is proper on its domain:
//   sum over admissible C' of P(G[C']; l) * p^|C'| * (1 - l*p)^(n - |C'|).
MultiPoly pc_labelled(const LabelledGraph& lg);
MultiPoly pc_poly(const Multigraph& g);

// pc with the number of colours fixed.
MultiPoly pc_fixed(const Multigraph& g, int lambda);

// Same value computed by the labelling recursion
//   F(C, U) = F(C + v, U) + F(C, U + v)
// down to totally labelled graphs, whose base value is
//   p^(n - |U|) * (1 - lambda*p)^|U| * P(G - U; lambda).
MultiPoly pc_via_reduction(const Multigraph& g, int lambda);

// Partial colourings in colours 0..lambda-1; -1 marks an uncoloured vertex.
bool proper_on_domain(const Multigraph& g, const std::vector<int>& partial);
bool extendable(const Multigraph& g, const std::vector<int>& partial, int lambda);

// A vertex is forced when it is uncoloured and its coloured neighbours show
// exactly lambda - 1 distinct colours, leaving a unique admissible colour.
std::vector<int> forced_vertices(const Multigraph& g, const std::vector<int>& partial,
                                 int lambda);
int forced_colour(const Multigraph& g, const std::vector<int>& partial, int lambda, int v);
// Repeatedly colours forced vertices until none remain. The result does not
// depend on the order vertices are picked in.
std::vector<int> forcing_closure(const Multigraph& g, std::vector<int> partial, int lambda);

// Probability that the colouring is proper on its domain and extends to a
// proper total colouring (ec), or that its forcing closure is a proper total
// colouring (fc). Enumerates all admissible partial colourings; throws
// LimitError when the state count exceeds state_limit.
MultiPoly ec_labelled(const LabelledGraph& lg, int lambda,
                      long long state_limit = 10'000'000);
MultiPoly fc_labelled(const LabelledGraph& lg, int lambda,
                      long long state_limit = 10'000'000);
MultiPoly ec_fixed(const Multigraph& g, int lambda, long long state_limit = 10'000'000);
MultiPoly fc_fixed(const Multigraph& g, int lambda, long long state_limit = 10'000'000);

// ec computed without state enumeration: label every free vertex (the same
// recursion as pc_via_reduction), then complete the coloured set to a clique
// with F(C, U) = F(G + uv) + p * F(G / uv), and finish on cliques with
//   p^|D| * falling_factorial(lambda, |D|) * (1 - lambda*p)^|U| * [G is
//   lambda-colourable].
MultiPoly ec_clique_reduce(const LabelledGraph& lg, int lambda);

} // namespace graphpoly
