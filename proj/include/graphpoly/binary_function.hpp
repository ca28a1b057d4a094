#pragma once

#include "graphpoly/graph.hpp"
#include "graphpoly/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <vector>

namespace graphpoly {

// Rational-valued function on the subsets of a ground set {0..m-1}, stored as
// a table of 2^m values indexed by subset bitmask. vertex_count is carried as
// descriptive metadata for functions that came from a graph; no computation
// here depends on it.
class BinaryFunction {
public:
    BinaryFunction(int ground_size, std::vector<Rational> values, int vertex_count = 0);

    int ground_size() const { return m_; }
    int vertex_count() const { return vertex_count_; }
    const Rational& value(std::uint32_t mask) const { return values_[mask]; }
    const std::vector<Rational>& values() const { return values_; }

    bool operator==(const BinaryFunction& rhs) const;

    // Indicator of the GF(2) row space of the vertex-edge incidence matrix
    // (loops give zero columns). Value 1 on subsets in the space, else 0.
    static BinaryFunction graphic(const Multigraph& g);

    // One-element reduction: (f<lambda>e)(X) =
    //   (f(X) + lambda * f(X + e)) / (f(empty) + lambda * f({e})).
    // lambda = 0 acts as contraction of e, lambda = 1 as deletion.
    BinaryFunction reduce(int e, const Rational& lambda) const;

    nlohmann::json to_json() const;
    static BinaryFunction from_json(const nlohmann::json& j);

private:
    int m_;
    int vertex_count_;
    std::vector<Rational> values_;
};

// The dual parameter (1 - lambda) / (1 + lambda); an involution. Undefined at
// lambda = -1.
Rational dual_lambda(const Rational& lambda);

// Generalised rank Q_lambda(f)(X) =
//   log2( (1 + dual_lambda)^|X| * S / D(X) )
// with S = sum over W of lambda^|W| f(W) and
// D(X) = sum over W of lambda^|W \ X| * dual_lambda^|W cap X| * f(W).
// At lambda = 1 this is the rank of X for graphic functions, at lambda = 0
// the dual rank. Throws DomainError("Q undefined") when the ratio is not a
// positive rational.
double q_rank(const BinaryFunction& f, std::uint32_t x_mask, const Rational& lambda);

// Loopiness of element e: Q_(dual lambda) over the full ground set minus the
// same with e removed from the queried subset. Coloopiness is the dual.
double loopiness(const BinaryFunction& f, int e, const Rational& lambda);
double coloopiness(const BinaryFunction& f, int e, const Rational& lambda);

// Rank-polynomial evaluation
//   R_lambda(f; x, y) = y^(-Q(E)) * sum over X of (x*y)^(Q(E) - Q(X)) * y^|X|
// computed in floating point (the exponents are generally irrational).
double lambda_tw(const BinaryFunction& f, double x, double y, const Rational& lambda);

} // namespace graphpoly
