#pragma once

#include "graphpoly/graph.hpp"
#include "graphpoly/multipoly.hpp"

#include <cstddef>
#include <unordered_map>

namespace graphpoly {

enum class PivotRule { FirstOrdinary, LastOrdinary };

struct TutteOptions {
    int canon_limit = 10;  // memoization keys need a canonical form
    PivotRule pivot = PivotRule::FirstOrdinary;
    bool memoize = true;
};

// Deletion-contraction evaluation of the Tutte polynomial T(G; x, y) with
// memoization on canonical forms (isolated vertices stripped first, since
// they do not affect T). Graphs whose stripped form exceeds the
// canonicalisation limit are recursed on without memoization.
class TutteEngine {
public:
    explicit TutteEngine(TutteOptions options = {}) : options_(options) {}

    MultiPoly tutte(const Multigraph& g);

    std::size_t memo_size() const { return memo_.size(); }
    std::size_t memo_hits() const { return hits_; }

private:
    TutteOptions options_;
    std::unordered_map<std::string, MultiPoly> memo_;
    std::size_t hits_ = 0;

    MultiPoly compute(const Multigraph& g);
};

MultiPoly tutte_poly(const Multigraph& g, TutteOptions options = {});

// Whitney rank polynomial R(G; x, y) = sum over edge subsets X of
// x^(rank(E) - rank(X)) * y^(|X| - rank(X)), by direct enumeration.
// Throws LimitError when edge_count > subset_limit.
MultiPoly whitney_rank_poly(const Multigraph& g, int subset_limit = 20);

// T(G; x, y) = R(G; x - 1, y - 1) and conversely.
MultiPoly whitney_from_tutte(const MultiPoly& tutte);
MultiPoly tutte_from_whitney(const MultiPoly& whitney);

// Proper-colouring counting polynomial in q, via the Tutte transform
// P(G; q) = (-1)^rank(G) * q^components * T(G; 1 - q, 0).
MultiPoly chromatic_poly(const Multigraph& g, TutteOptions options = {});

// Chromatic polynomial of the line graph (simple graphs only).
MultiPoly edge_chromatic_poly(const Multigraph& g, TutteOptions options = {});

// Three-variable subset expansion: sum over X of
// x^|X| * y^(components of (V, X)) * z^(vertices covered by X).
MultiPoly bp_poly(const Multigraph& g, int subset_limit = 20);

} // namespace graphpoly
