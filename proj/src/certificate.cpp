#include "graphpoly/certificate.hpp"

#include "graphpoly/errors.hpp"
#include "graphpoly/graph_io.hpp"
#include "graphpoly/tutte.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace graphpoly {

std::string context_name(CertContext context) {
    return context == CertContext::Tutte ? "tutte" : "chromatic";
}

CertContext context_from_name(const std::string& name) {
    if (name == "tutte") return CertContext::Tutte;
    if (name == "chromatic") return CertContext::Chromatic;
    throw ParseError("unknown certificate context: " + name);
}

MultiPoly expression_value(const CertExpression& expr, CertContext context) {
    TutteEngine engine;
    MultiPoly total;
    for (const CertTerm& term : expr) {
        MultiPoly product{term.coef};
        for (const Multigraph& factor : term.factors) {
            MultiPoly value = engine.tutte(factor);
            if (context == CertContext::Chromatic) {
                MultiPoly q = MultiPoly::variable("q");
                value = value.substitute("x", MultiPoly{Rational(1)} - q)
                            .substitute("y", Rational(0));
                int rank = graph_rank(factor);
                Rational sign = rank % 2 == 0 ? Rational(1) : Rational(-1);
                value = value * MultiPoly::monomial(sign, {{"q", factor.component_count()}});
            }
            product *= value;
        }
        total += product;
    }
    return total;
}

namespace {

std::string term_signature(const CertTerm& term, int canon_limit) {
    std::vector<std::string> forms;
    forms.reserve(term.factors.size());
    for (const Multigraph& f : term.factors) forms.push_back(canonical_form(f, canon_limit));
    std::sort(forms.begin(), forms.end());
    std::string out = rat_str(term.coef) + "*";
    for (const std::string& f : forms) out += "[" + f + "]";
    return out;
}

std::string expression_signature(const CertExpression& expr, int canon_limit) {
    std::vector<std::string> parts;
    parts.reserve(expr.size());
    for (const CertTerm& t : expr) parts.push_back(term_signature(t, canon_limit));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const std::string& p : parts) out += p + ";";
    return out;
}

std::string factors_signature(const std::vector<Multigraph>& factors, int canon_limit) {
    std::vector<std::string> forms;
    forms.reserve(factors.size());
    for (const Multigraph& f : factors) forms.push_back(canonical_form(f, canon_limit));
    std::sort(forms.begin(), forms.end());
    std::string out;
    for (const std::string& f : forms) out += "[" + f + "]";
    return out;
}

const CertTerm& term_at(const CertExpression& expr, int t) {
    if (t < 0 || t >= static_cast<int>(expr.size()))
        throw DomainError("term index out of range");
    return expr[static_cast<size_t>(t)];
}

const Multigraph& factor_at(const CertTerm& term, int f) {
    if (f < 0 || f >= static_cast<int>(term.factors.size()))
        throw DomainError("factor index out of range");
    return term.factors[static_cast<size_t>(f)];
}

void check_dc_edge(const Multigraph& g, int e, CertContext context) {
    if (e < 0 || e >= g.edge_count()) throw DomainError("edge index out of range");
    if (context == CertContext::Tutte && !g.edge_is_ordinary(e))
        throw DomainError("deletion-contraction needs an ordinary edge");
}

void check_ai_pair(const Multigraph& g, int u, int v, CertContext context) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw DomainError("vertex index out of range");
    if (u == v) throw DomainError("addition-identification needs two distinct vertices");
    if (g.adjacent(u, v))
        throw DomainError("addition-identification needs a non-adjacent pair");
    if (context == CertContext::Tutte) {
        auto ids = g.component_ids();
        if (ids[static_cast<size_t>(u)] != ids[static_cast<size_t>(v)])
            throw DomainError("addition-identification in this context needs vertices in "
                              "one component");
    }
}

// Factor multisets of two terms, each with one designated position removed.
bool rest_factors_match(const CertTerm& a, int fa, const CertTerm& b, int fb,
                        int canon_limit) {
    std::vector<Multigraph> ra, rb;
    for (int i = 0; i < static_cast<int>(a.factors.size()); ++i)
        if (i != fa) ra.push_back(a.factors[static_cast<size_t>(i)]);
    for (int i = 0; i < static_cast<int>(b.factors.size()); ++i)
        if (i != fb) rb.push_back(b.factors[static_cast<size_t>(i)]);
    if (ra.size() != rb.size()) return false;
    return factors_signature(ra, canon_limit) == factors_signature(rb, canon_limit);
}

CertExpression splice_pair(const CertExpression& expr, int t, const CertTerm& first,
                           const CertTerm& second) {
    CertExpression out;
    for (int i = 0; i < static_cast<int>(expr.size()); ++i) {
        if (i == t) {
            out.push_back(first);
            out.push_back(second);
        } else {
            out.push_back(expr[static_cast<size_t>(i)]);
        }
    }
    return out;
}

CertExpression merge_pair(const CertExpression& expr, int t, int p, CertTerm merged) {
    CertExpression out;
    int insert_at = std::min(t, p);
    for (int i = 0; i < static_cast<int>(expr.size()); ++i) {
        if (i == t || i == p) {
            if (i == insert_at) out.push_back(merged);
            continue;
        }
        out.push_back(expr[static_cast<size_t>(i)]);
    }
    return out;
}

} // namespace

CertExpression apply_rule(const CertExpression& expr, const CertStep& step,
                          CertContext context, int canon_limit) {
    const CertTerm& term = term_at(expr, step.term);

    switch (step.rule) {
    case CertRule::DC: {
        if (!step.reverse) {
            const Multigraph& g = factor_at(term, step.factor);
            check_dc_edge(g, step.edge, context);
            CertTerm deleted = term, contracted = term;
            deleted.factors[static_cast<size_t>(step.factor)] = g.delete_edge(step.edge);
            contracted.factors[static_cast<size_t>(step.factor)] = g.contract_edge(step.edge);
            if (context == CertContext::Chromatic) contracted.coef = -contracted.coef;
            return splice_pair(expr, step.term, deleted, contracted);
        }
        if (step.partner == step.term) throw DomainError("reverse step needs two terms");
        const CertTerm& other = term_at(expr, step.partner);
        if (!step.has_graph) throw DomainError("reverse step needs a replacement graph");
        const Multigraph& a = step.graph;
        check_dc_edge(a, step.edge, context);
        Rational expected = context == CertContext::Chromatic ? Rational(-term.coef)
                                                              : term.coef;
        if (other.coef != expected)
            throw DomainError("reverse step coefficients do not match the rule");
        const Multigraph& x = factor_at(term, step.factor);
        const Multigraph& y = factor_at(other, step.partner_factor);
        if (!isomorphic(a.delete_edge(step.edge), x, canon_limit) ||
            !isomorphic(a.contract_edge(step.edge), y, canon_limit))
            throw DomainError("replacement graph does not reduce to the two terms");
        if (!rest_factors_match(term, step.factor, other, step.partner_factor, canon_limit))
            throw DomainError("terms differ outside the rewritten factor");
        CertTerm merged = term;
        merged.factors[static_cast<size_t>(step.factor)] = a;
        return merge_pair(expr, step.term, step.partner, std::move(merged));
    }
    case CertRule::AI: {
        if (!step.reverse) {
            const Multigraph& g = factor_at(term, step.factor);
            check_ai_pair(g, step.u, step.v, context);
            CertTerm added = term, merged = term;
            added.factors[static_cast<size_t>(step.factor)] = g.with_edge(step.u, step.v);
            merged.factors[static_cast<size_t>(step.factor)] = g.identify(step.u, step.v);
            if (context == CertContext::Tutte) merged.coef = -merged.coef;
            return splice_pair(expr, step.term, added, merged);
        }
        if (step.partner == step.term) throw DomainError("reverse step needs two terms");
        const CertTerm& other = term_at(expr, step.partner);
        if (!step.has_graph) throw DomainError("reverse step needs a replacement graph");
        const Multigraph& a = step.graph;
        check_ai_pair(a, step.u, step.v, context);
        Rational expected = context == CertContext::Tutte ? Rational(-term.coef) : term.coef;
        if (other.coef != expected)
            throw DomainError("reverse step coefficients do not match the rule");
        const Multigraph& x = factor_at(term, step.factor);
        const Multigraph& y = factor_at(other, step.partner_factor);
        if (!isomorphic(a.with_edge(step.u, step.v), x, canon_limit) ||
            !isomorphic(a.identify(step.u, step.v), y, canon_limit))
            throw DomainError("replacement graph does not reduce to the two terms");
        if (!rest_factors_match(term, step.factor, other, step.partner_factor, canon_limit))
            throw DomainError("terms differ outside the rewritten factor");
        CertTerm merged = term;
        merged.factors[static_cast<size_t>(step.factor)] = a;
        return merge_pair(expr, step.term, step.partner, std::move(merged));
    }
    case CertRule::BLOCKS: {
        if (context != CertContext::Tutte)
            throw DomainError("block factorisation applies in the tutte context only");
        const Multigraph& g = factor_at(term, step.factor);
        std::vector<Multigraph> parts = blocks(g);
        CertTerm rebuilt = term;
        rebuilt.factors.erase(rebuilt.factors.begin() + step.factor);
        rebuilt.factors.insert(rebuilt.factors.begin() + step.factor, parts.begin(),
                               parts.end());
        CertExpression out = expr;
        out[static_cast<size_t>(step.term)] = std::move(rebuilt);
        return out;
    }
    case CertRule::GLUE: {
        if (context != CertContext::Tutte)
            throw DomainError("gluing applies in the tutte context only");
        if (!step.has_graph) throw DomainError("gluing needs a replacement graph");
        if (step.members.empty()) throw DomainError("gluing needs at least one factor");
        std::set<int> chosen(step.members.begin(), step.members.end());
        if (chosen.size() != step.members.size())
            throw DomainError("duplicate factor indices");
        std::vector<Multigraph> combined;
        for (int f : step.members) {
            const Multigraph& g = factor_at(term, f);
            for (Multigraph& b : blocks(g)) combined.push_back(std::move(b));
        }
        std::vector<Multigraph> target = blocks(step.graph);
        if (factors_signature(combined, canon_limit) !=
            factors_signature(target, canon_limit))
            throw DomainError("replacement graph has different blocks");
        CertTerm rebuilt;
        rebuilt.coef = term.coef;
        int first = *chosen.begin();
        for (int i = 0; i < static_cast<int>(term.factors.size()); ++i) {
            if (i == first) rebuilt.factors.push_back(step.graph);
            if (chosen.count(i)) continue;
            rebuilt.factors.push_back(term.factors[static_cast<size_t>(i)]);
        }
        CertExpression out = expr;
        out[static_cast<size_t>(step.term)] = std::move(rebuilt);
        return out;
    }
    case CertRule::ISO: {
        if (!step.has_graph) throw DomainError("relabelling needs a replacement graph");
        const Multigraph& g = factor_at(term, step.factor);
        if (!isomorphic(step.graph, g, canon_limit))
            throw DomainError("replacement graph is not isomorphic to the factor");
        CertExpression out = expr;
        out[static_cast<size_t>(step.term)].factors[static_cast<size_t>(step.factor)] =
            step.graph;
        return out;
    }
    case CertRule::ALG: {
        if (step.members.size() < 2) throw DomainError("merging needs at least two terms");
        std::set<int> chosen(step.members.begin(), step.members.end());
        if (chosen.size() != step.members.size()) throw DomainError("duplicate term indices");
        if (*chosen.begin() != step.term)
            throw DomainError("locus must name the first merged term");
        std::string shape = factors_signature(term.factors, canon_limit);
        Rational sum(0);
        for (int t : chosen) {
            const CertTerm& merged = term_at(expr, t);
            if (factors_signature(merged.factors, canon_limit) != shape)
                throw DomainError("merged terms have different factors");
            sum += merged.coef;
        }
        CertExpression out;
        for (int i = 0; i < static_cast<int>(expr.size()); ++i) {
            if (chosen.count(i)) {
                if (i == step.term && sum != 0) {
                    CertTerm kept = expr[static_cast<size_t>(i)];
                    kept.coef = sum;
                    out.push_back(std::move(kept));
                }
                continue;
            }
            out.push_back(expr[static_cast<size_t>(i)]);
        }
        return out;
    }
    }
    throw DomainError("unknown rule");
}

std::vector<CertStep> enumerate_moves(const CertExpression& expr, CertContext context,
                                      const Multigraph* glue_goal, int canon_limit) {
    std::vector<CertStep> moves;
    int terms = static_cast<int>(expr.size());

    // Forward deletion-contraction.
    for (int t = 0; t < terms; ++t)
        for (int f = 0; f < static_cast<int>(expr[static_cast<size_t>(t)].factors.size()); ++f) {
            const Multigraph& g = expr[static_cast<size_t>(t)].factors[static_cast<size_t>(f)];
            for (int e = 0; e < g.edge_count(); ++e) {
                if (context == CertContext::Tutte && !g.edge_is_ordinary(e)) continue;
                CertStep step;
                step.rule = CertRule::DC;
                step.term = t;
                step.factor = f;
                step.edge = e;
                moves.push_back(std::move(step));
            }
        }

    // Reverse deletion-contraction: the merged graph is the first term's
    // factor plus one extra edge.
    for (int t = 0; t < terms; ++t)
        for (int p = 0; p < terms; ++p) {
            if (t == p) continue;
            const CertTerm& a = expr[static_cast<size_t>(t)];
            const CertTerm& b = expr[static_cast<size_t>(p)];
            Rational expected = context == CertContext::Chromatic ? Rational(-a.coef) : a.coef;
            if (b.coef != expected) continue;
            for (int f = 0; f < static_cast<int>(a.factors.size()); ++f)
                for (int pf = 0; pf < static_cast<int>(b.factors.size()); ++pf) {
                    if (!rest_factors_match(a, f, b, pf, canon_limit)) continue;
                    const Multigraph& x = a.factors[static_cast<size_t>(f)];
                    const Multigraph& y = b.factors[static_cast<size_t>(pf)];
                    for (int u = 0; u < x.vertex_count(); ++u)
                        for (int v = u; v < x.vertex_count(); ++v) {
                            Multigraph candidate = x.with_edge(u, v);
                            int e = candidate.edge_count() - 1;
                            if (context == CertContext::Tutte &&
                                !candidate.edge_is_ordinary(e))
                                continue;
                            if (!isomorphic(candidate.contract_edge(e), y, canon_limit))
                                continue;
                            CertStep step;
                            step.rule = CertRule::DC;
                            step.term = t;
                            step.factor = f;
                            step.reverse = true;
                            step.partner = p;
                            step.partner_factor = pf;
                            step.edge = e;
                            step.graph = std::move(candidate);
                            step.has_graph = true;
                            moves.push_back(std::move(step));
                        }
                }
        }

    // Forward addition-identification.
    for (int t = 0; t < terms; ++t)
        for (int f = 0; f < static_cast<int>(expr[static_cast<size_t>(t)].factors.size()); ++f) {
            const Multigraph& g = expr[static_cast<size_t>(t)].factors[static_cast<size_t>(f)];
            auto ids = g.component_ids();
            for (int u = 0; u < g.vertex_count(); ++u)
                for (int v = u + 1; v < g.vertex_count(); ++v) {
                    if (g.adjacent(u, v)) continue;
                    if (context == CertContext::Tutte &&
                        ids[static_cast<size_t>(u)] != ids[static_cast<size_t>(v)])
                        continue;
                    CertStep step;
                    step.rule = CertRule::AI;
                    step.term = t;
                    step.factor = f;
                    step.u = u;
                    step.v = v;
                    moves.push_back(std::move(step));
                }
        }

    // Reverse addition-identification: the merged graph is the first term's
    // factor with one edge removed.
    for (int t = 0; t < terms; ++t)
        for (int p = 0; p < terms; ++p) {
            if (t == p) continue;
            const CertTerm& a = expr[static_cast<size_t>(t)];
            const CertTerm& b = expr[static_cast<size_t>(p)];
            Rational expected = context == CertContext::Tutte ? Rational(-a.coef) : a.coef;
            if (b.coef != expected) continue;
            for (int f = 0; f < static_cast<int>(a.factors.size()); ++f)
                for (int pf = 0; pf < static_cast<int>(b.factors.size()); ++pf) {
                    if (!rest_factors_match(a, f, b, pf, canon_limit)) continue;
                    const Multigraph& x = a.factors[static_cast<size_t>(f)];
                    const Multigraph& y = b.factors[static_cast<size_t>(pf)];
                    for (int e = 0; e < x.edge_count(); ++e) {
                        if (x.edge_is_loop(e)) continue;
                        Multigraph candidate = x.delete_edge(e);
                        int u = x.edge(e).u, v = x.edge(e).v;
                        if (candidate.adjacent(u, v)) continue;
                        if (context == CertContext::Tutte) {
                            auto ids = candidate.component_ids();
                            if (ids[static_cast<size_t>(u)] != ids[static_cast<size_t>(v)])
                                continue;
                        }
                        if (!isomorphic(candidate.identify(u, v), y, canon_limit)) continue;
                        CertStep step;
                        step.rule = CertRule::AI;
                        step.term = t;
                        step.factor = f;
                        step.reverse = true;
                        step.partner = p;
                        step.partner_factor = pf;
                        step.u = u;
                        step.v = v;
                        step.graph = std::move(candidate);
                        step.has_graph = true;
                        moves.push_back(std::move(step));
                    }
                }
        }

    if (context == CertContext::Tutte) {
        // Block factorisation, skipping applications that change nothing.
        for (int t = 0; t < terms; ++t)
            for (int f = 0; f < static_cast<int>(expr[static_cast<size_t>(t)].factors.size());
                 ++f) {
                const Multigraph& g =
                    expr[static_cast<size_t>(t)].factors[static_cast<size_t>(f)];
                std::vector<Multigraph> parts = blocks(g);
                if (parts.size() == 1 && parts[0].vertex_count() == g.vertex_count()) continue;
                CertStep step;
                step.rule = CertRule::BLOCKS;
                step.term = t;
                step.factor = f;
                moves.push_back(std::move(step));
            }
        if (glue_goal) {
            std::vector<Multigraph> target = blocks(*glue_goal);
            std::string target_sig = factors_signature(target, canon_limit);
            for (int t = 0; t < terms; ++t) {
                const CertTerm& term = expr[static_cast<size_t>(t)];
                if (term.factors.empty()) continue;
                std::vector<Multigraph> combined;
                for (const Multigraph& g : term.factors)
                    for (Multigraph& b : blocks(g)) combined.push_back(std::move(b));
                if (factors_signature(combined, canon_limit) != target_sig) continue;
                CertStep step;
                step.rule = CertRule::GLUE;
                step.term = t;
                step.factor = 0;
                for (int f = 0; f < static_cast<int>(term.factors.size()); ++f)
                    step.members.push_back(f);
                step.graph = *glue_goal;
                step.has_graph = true;
                moves.push_back(std::move(step));
            }
        }
    }

    // Merging of like terms.
    std::map<std::string, std::vector<int>> groups;
    for (int t = 0; t < terms; ++t)
        groups[factors_signature(expr[static_cast<size_t>(t)].factors, canon_limit)]
            .push_back(t);
    for (const auto& [sig, members] : groups) {
        if (members.size() < 2) continue;
        CertStep step;
        step.rule = CertRule::ALG;
        step.term = members.front();
        step.factor = 0;
        step.members = members;
        moves.push_back(std::move(step));
    }
    return moves;
}

VerifyResult verify(const Certificate& cert, int canon_limit) {
    if (cert.expressions.empty()) return {false, "certificate has no expressions"};
    if (cert.expressions.size() != cert.steps.size() + 1)
        return {false, "expression count does not match step count"};

    for (size_t i = 0; i < cert.steps.size(); ++i) {
        std::string label = "step " + std::to_string(i + 1);
        CertExpression derived;
        try {
            derived = apply_rule(cert.expressions[i], cert.steps[i], cert.context,
                                 canon_limit);
        } catch (const std::exception& e) {
            return {false, label + ": " + e.what()};
        }
        if (expression_signature(derived, canon_limit) !=
            expression_signature(cert.expressions[i + 1], canon_limit))
            return {false, label + ": derived expression does not match the stated one"};
    }

    MultiPoly reference = expression_value(cert.expressions[0], cert.context);
    for (size_t i = 1; i < cert.expressions.size(); ++i)
        if (expression_value(cert.expressions[i], cert.context) != reference)
            return {false,
                    "step " + std::to_string(i) + ": expression value changed"};
    return {true, ""};
}

SearchResult cert_search(const Multigraph& g, const Multigraph& h, CertContext context,
                         SearchOptions options) {
    CertExpression start{CertTerm{Rational(1), {g}}};
    CertExpression goal{CertTerm{Rational(1), {h}}};
    if (expression_value(start, context) != expression_value(goal, context))
        return {false, {}, "not equivalent"};

    auto is_goal = [&](const CertExpression& expr) {
        return expr.size() == 1 && expr[0].coef == 1 && expr[0].factors.size() == 1 &&
               isomorphic(expr[0].factors[0], h, options.canon_limit);
    };

    struct Node {
        CertExpression expr;
        int parent;
        CertStep step;
    };
    std::vector<Node> nodes;
    nodes.push_back({start, -1, {}});
    std::set<std::string> visited{expression_signature(start, options.canon_limit)};
    std::deque<std::pair<int, int>> queue; // node index, depth
    queue.emplace_back(0, 0);

    int found_at = -1;
    while (!queue.empty()) {
        auto [index, depth] = queue.front();
        queue.pop_front();
        if (is_goal(nodes[static_cast<size_t>(index)].expr)) {
            found_at = index;
            break;
        }
        if (depth >= options.max_steps) continue;
        if (static_cast<long long>(nodes.size()) > options.node_limit)
            throw LimitError("search node limit exceeded");
        std::vector<CertStep> moves = enumerate_moves(nodes[static_cast<size_t>(index)].expr,
                                                      context, &h, options.canon_limit);
        for (CertStep& move : moves) {
            CertExpression next =
                apply_rule(nodes[static_cast<size_t>(index)].expr, move, context,
                           options.canon_limit);
            std::string sig = expression_signature(next, options.canon_limit);
            if (!visited.insert(sig).second) continue;
            nodes.push_back({std::move(next), index, std::move(move)});
            queue.emplace_back(static_cast<int>(nodes.size()) - 1, depth + 1);
        }
    }
    if (found_at < 0)
        return {false, {},
                "no certificate within " + std::to_string(options.max_steps) + " steps"};

    Certificate cert;
    cert.context = context;
    std::vector<int> chain;
    for (int i = found_at; i >= 0; i = nodes[static_cast<size_t>(i)].parent)
        chain.push_back(i);
    std::reverse(chain.begin(), chain.end());
    for (size_t i = 0; i < chain.size(); ++i) {
        cert.expressions.push_back(nodes[static_cast<size_t>(chain[i])].expr);
        if (i > 0) cert.steps.push_back(nodes[static_cast<size_t>(chain[i])].step);
    }
    return {true, std::move(cert), ""};
}

namespace {

const char* rule_name(CertRule rule) {
    switch (rule) {
    case CertRule::DC: return "DC";
    case CertRule::AI: return "AI";
    case CertRule::BLOCKS: return "BLOCKS";
    case CertRule::GLUE: return "GLUE";
    case CertRule::ISO: return "ISO";
    case CertRule::ALG: return "ALG";
    }
    return "?";
}

CertRule rule_from_name(const std::string& name) {
    if (name == "DC") return CertRule::DC;
    if (name == "AI") return CertRule::AI;
    if (name == "BLOCKS") return CertRule::BLOCKS;
    if (name == "GLUE") return CertRule::GLUE;
    if (name == "ISO") return CertRule::ISO;
    if (name == "ALG") return CertRule::ALG;
    throw ParseError("unknown certificate rule: " + name);
}

nlohmann::json expression_to_json(const CertExpression& expr) {
    nlohmann::json terms = nlohmann::json::array();
    for (const CertTerm& term : expr) {
        nlohmann::json t;
        t["coef"] = rat_str(term.coef);
        nlohmann::json factors = nlohmann::json::array();
        for (const Multigraph& f : term.factors) factors.push_back(to_edge_list(f));
        t["factors"] = std::move(factors);
        terms.push_back(std::move(t));
    }
    return nlohmann::json{{"terms", std::move(terms)}};
}

CertExpression expression_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("invalid certificate expression");
    CertExpression expr;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coef") || !t.contains("factors") ||
            !t["factors"].is_array())
            throw ParseError("invalid certificate term");
        CertTerm term;
        term.coef = t["coef"].is_string() ? rat_parse(t["coef"].get<std::string>())
                                          : Rational(t["coef"].get<long long>());
        for (const auto& f : t["factors"]) {
            if (!f.is_string()) throw ParseError("invalid certificate factor");
            term.factors.push_back(parse_edge_list(f.get<std::string>()).graph);
        }
        expr.push_back(std::move(term));
    }
    return expr;
}

} // namespace

nlohmann::json certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["context"] = context_name(cert.context);
    nlohmann::json exprs = nlohmann::json::array();
    for (const CertExpression& e : cert.expressions) exprs.push_back(expression_to_json(e));
    j["expressions"] = std::move(exprs);
    nlohmann::json steps = nlohmann::json::array();
    for (const CertStep& s : cert.steps) {
        nlohmann::json step;
        step["rule"] = rule_name(s.rule);
        step["locus"] = nlohmann::json::array({s.term, s.factor});
        nlohmann::json params = nlohmann::json::object();
        if (s.reverse) {
            params["reverse"] = true;
            params["partner"] = nlohmann::json::array({s.partner, s.partner_factor});
        }
        if (s.rule == CertRule::DC && s.edge >= 0) params["edge"] = s.edge;
        if (s.rule == CertRule::AI) {
            params["u"] = s.u;
            params["v"] = s.v;
        }
        if (s.rule == CertRule::GLUE) params["factors"] = s.members;
        if (s.rule == CertRule::ALG) params["terms"] = s.members;
        if (s.has_graph) params["graph"] = to_edge_list(s.graph);
        step["params"] = std::move(params);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("context") || !j.contains("expressions") ||
        !j.contains("steps") || !j["expressions"].is_array() || !j["steps"].is_array())
        throw ParseError("invalid certificate JSON");
    Certificate cert;
    cert.context = context_from_name(j["context"].get<std::string>());
    for (const auto& e : j["expressions"])
        cert.expressions.push_back(expression_from_json(e));
    for (const auto& s : j["steps"]) {
        if (!s.is_object() || !s.contains("rule") || !s.contains("locus") ||
            !s["locus"].is_array() || s["locus"].size() != 2)
            throw ParseError("invalid certificate step");
        CertStep step;
        step.rule = rule_from_name(s["rule"].get<std::string>());
        step.term = s["locus"][0].get<int>();
        step.factor = s["locus"][1].get<int>();
        nlohmann::json params =
            s.contains("params") ? s["params"] : nlohmann::json::object();
        if (!params.is_object()) throw ParseError("invalid certificate step");
        if (params.contains("reverse") && params["reverse"].get<bool>()) {
            step.reverse = true;
            if (!params.contains("partner") || !params["partner"].is_array() ||
                params["partner"].size() != 2)
                throw ParseError("reverse step needs a partner locus");
            step.partner = params["partner"][0].get<int>();
            step.partner_factor = params["partner"][1].get<int>();
        }
        if (params.contains("edge")) step.edge = params["edge"].get<int>();
        if (params.contains("u")) step.u = params["u"].get<int>();
        if (params.contains("v")) step.v = params["v"].get<int>();
        if (params.contains("factors"))
            step.members = params["factors"].get<std::vector<int>>();
        if (params.contains("terms"))
            step.members = params["terms"].get<std::vector<int>>();
        if (params.contains("graph")) {
            step.graph = parse_edge_list(params["graph"].get<std::string>()).graph;
            step.has_graph = true;
        }
        cert.steps.push_back(std::move(step));
    }
    return cert;
}

} // namespace graphpoly
