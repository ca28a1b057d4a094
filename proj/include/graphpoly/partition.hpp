#pragma once

#include "graphpoly/graph.hpp"
#include "graphpoly/multipoly.hpp"

namespace graphpoly {

// Potts state sum in the reduced edge variable w: sum over q-colourings f of
// w^(number of non-loop edges whose endpoints receive different colours).
// Requires q >= 1; enumerates q^n states (LimitError beyond state_limit).
MultiPoly potts_poly(const Multigraph& g, int q, long long state_limit = 10'000'000);

// Two-state Potts sum in the reduced variable s.
MultiPoly ising_poly(const Multigraph& g, long long state_limit = 10'000'000);

// Symmetric Ashkin-Teller sum over spin pairs (sigma, tau) in reduced
// variables a (per disagreement of sigma and of tau) and b (per disagreement
// of the product spin sigma*tau).
MultiPoly symat_poly(const Multigraph& g, long long state_limit = 10'000'000);

// Physical prefactors carried alongside the reduced polynomials, as symbolic
// annotations. They are never folded into the polynomial itself.
std::string ising_prefactor(const Multigraph& g);  // exp(K*|E|)
std::string symat_prefactor(const Multigraph& g);  // exp((2K + K')*|E|)

} // namespace graphpoly
