#pragma once

#include "graphpoly/graph.hpp"
#include "graphpoly/multipoly.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace graphpoly {

// Certificates are step-by-step derivations showing two graphs share a
// polynomial. An expression is a linear combination of products of graphs;
// its value under a context is the matching polynomial combination. Each step
// rewrites one expression into the next by a named rule, and a certificate is
// valid when every step is admissible and every expression has exactly the
// same value.

enum class CertContext { Tutte, Chromatic };

enum class CertRule { DC, AI, BLOCKS, GLUE, ISO, ALG };

struct CertTerm {
    Rational coef;
    std::vector<Multigraph> factors;
};
using CertExpression = std::vector<CertTerm>;

struct CertStep {
    CertRule rule;
    int term = 0;   // locus: term index
    int factor = 0; // locus: factor index within the term
    // Rule-specific parameters:
    //   DC  forward: edge          AI  forward: u, v
    //   DC/AI reverse: reverse=true, partner (term index), graph, and the
    //     same edge / u,v fields describing the move that produced the pair
    //   GLUE: factors (indices into the term), graph
    //   ISO: graph
    //   ALG: terms (indices of merged terms)
    bool reverse = false;
    int partner = -1;        // reverse rules: term index of the second operand
    int partner_factor = -1; // reverse rules: factor index within that term
    int edge = -1;
    int u = -1, v = -1;
    std::vector<int> members; // GLUE factor indices or ALG term indices
    Multigraph graph;         // replacement graph where a rule needs one
    bool has_graph = false;
};

struct Certificate {
    CertContext context = CertContext::Tutte;
    std::vector<CertExpression> expressions; // steps.size() + 1 of them
    std::vector<CertStep> steps;
};

struct VerifyResult {
    bool valid = false;
    std::string reason; // empty when valid; names the first failing step
};

struct SearchOptions {
    int max_steps = 5;
    long long node_limit = 20000;
    int canon_limit = 10;
};

struct SearchResult {
    bool found = false;
    Certificate certificate;
    std::string reason; // when not found
};

// Exact polynomial value of an expression under the context.
MultiPoly expression_value(const CertExpression& expr, CertContext context);

// Applies one rule application, checking its preconditions; throws
// DomainError when the step is inadmissible.
CertExpression apply_rule(const CertExpression& expr, const CertStep& step,
                          CertContext context, int canon_limit = 10);

// All admissible rule applications on the expression, in a fixed order
// (DC, reverse DC, AI, reverse AI, BLOCKS, GLUE, ALG). GLUE replacement
// candidates are restricted to glue_goal when given, otherwise omitted.
std::vector<CertStep> enumerate_moves(const CertExpression& expr, CertContext context,
                                      const Multigraph* glue_goal = nullptr,
                                      int canon_limit = 10);

VerifyResult verify(const Certificate& cert, int canon_limit = 10);

// Breadth-first search for a certificate turning [1 * g] into a single
// factor isomorphic to h. Checks the context polynomials match first.
SearchResult cert_search(const Multigraph& g, const Multigraph& h, CertContext context,
                         SearchOptions options = {});

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

std::string context_name(CertContext context);
CertContext context_from_name(const std::string& name);

} // namespace graphpoly
