#include "graphpoly/multipoly.hpp"

#include "graphpoly/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace graphpoly {

bool GradedLexDescending::operator()(const std::vector<int>& a,
                                     const std::vector<int>& b) const {
    long long da = std::accumulate(a.begin(), a.end(), 0LL);
    long long db = std::accumulate(b.begin(), b.end(), 0LL);
    if (da != db) return da > db;
    return a > b; // lexicographically larger exponent vector first
}

MultiPoly::MultiPoly(const Rational& constant) {
    if (constant != 0) terms_.emplace(std::vector<int>{}, constant);
}

MultiPoly MultiPoly::variable(const std::string& name) {
    return monomial(Rational(1), {{name, 1}});
}

MultiPoly MultiPoly::monomial(const Rational& coef,
                              const std::vector<std::pair<std::string, int>>& powers) {
    MultiPoly p;
    if (coef == 0) return p;
    std::map<std::string, int> collected;
    for (const auto& [name, e] : powers) {
        if (e < 0) throw DomainError("negative exponent in monomial");
        if (e > 0) collected[name] += e;
    }
    p.vars_.reserve(collected.size());
    std::vector<int> exp;
    for (const auto& [name, e] : collected) {
        p.vars_.push_back(name);
        exp.push_back(e);
    }
    p.terms_.emplace(std::move(exp), coef);
    return p;
}

int MultiPoly::total_degree() const {
    int best = -1;
    for (const auto& [exp, coef] : terms_) {
        int d = std::accumulate(exp.begin(), exp.end(), 0);
        best = std::max(best, d);
    }
    return best;
}

Rational MultiPoly::coefficient(
    const std::vector<std::pair<std::string, int>>& powers) const {
    std::map<std::string, int> wanted;
    for (const auto& [name, e] : powers)
        if (e > 0) wanted[name] += e;
    std::vector<int> exp(vars_.size(), 0);
    for (const auto& [name, e] : wanted) {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
        if (it == vars_.end() || *it != name) return Rational(0);
        exp[static_cast<size_t>(it - vars_.begin())] = e;
    }
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const std::vector<int>& exp, const Rational& coef) {
    auto [it, inserted] = terms_.emplace(exp, coef);
    if (!inserted) it->second += coef;
}

void MultiPoly::normalise() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [exp, coef] : terms_)
        for (size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
    std::vector<std::string> kept;
    std::vector<size_t> keep_idx;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) {
            kept.push_back(vars_[i]);
            keep_idx.push_back(i);
        }
    TermMap pruned;
    for (const auto& [exp, coef] : terms_) {
        std::vector<int> e(keep_idx.size());
        for (size_t i = 0; i < keep_idx.size(); ++i) e[i] = exp[keep_idx[i]];
        pruned.emplace(std::move(e), coef);
    }
    vars_ = std::move(kept);
    terms_ = std::move(pruned);
}

// Rewrites the terms over a sorted superset of the current variables.
MultiPoly MultiPoly::reindexed(const std::vector<std::string>& new_vars) const {
    MultiPoly out;
    out.vars_ = new_vars;
    std::vector<size_t> where(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(new_vars.begin(), new_vars.end(), vars_[i]);
        where[i] = static_cast<size_t>(it - new_vars.begin());
    }
    for (const auto& [exp, coef] : terms_) {
        std::vector<int> e(new_vars.size(), 0);
        for (size_t i = 0; i < exp.size(); ++i) e[where[i]] = exp[i];
        out.terms_.emplace(std::move(e), coef);
    }
    return out;
}

namespace {
std::vector<std::string> var_union(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b) {
    std::vector<std::string> merged;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
    return merged;
}
} // namespace

MultiPoly aligned_combine(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    auto vars = var_union(a.vars_, b.vars_);
    MultiPoly out = a.reindexed(vars);
    MultiPoly rb = b.reindexed(vars);
    for (const auto& [exp, coef] : rb.terms_)
        out.add_term(exp, subtract ? Rational(-coef) : coef);
    out.normalise();
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [exp, coef] : out.terms_) coef = -coef;
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    return aligned_combine(*this, rhs, false);
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
    return aligned_combine(*this, rhs, true);
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    auto vars = var_union(vars_, rhs.vars_);
    MultiPoly a = reindexed(vars);
    MultiPoly b = rhs.reindexed(vars);
    MultiPoly out;
    out.vars_ = vars;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(vars.size());
            for (size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    out.normalise();
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) { return *this = *this + rhs; }
MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this = *this - rhs; }
MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly MultiPoly::operator*(const Rational& scalar) const {
    MultiPoly out;
    if (scalar == 0) return out;
    out.vars_ = vars_;
    for (const auto& [exp, coef] : terms_) out.terms_.emplace(exp, coef * scalar);
    return out;
}

MultiPoly MultiPoly::pow(int exponent) const {
    if (exponent < 0) throw DomainError("negative polynomial power");
    MultiPoly result{Rational(1)};
    MultiPoly base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    return vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& replacement) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return *this;
    size_t pos = static_cast<size_t>(it - vars_.begin());
    std::map<int, MultiPoly> powers;
    powers[0] = MultiPoly{Rational(1)};
    MultiPoly out;
    for (const auto& [exp, coef] : terms_) {
        int e = exp[pos];
        auto pit = powers.find(e);
        if (pit == powers.end())
            pit = powers.emplace(e, replacement.pow(e)).first;
        std::vector<std::pair<std::string, int>> rest;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (i != pos && exp[i] > 0) rest.emplace_back(vars_[i], exp[i]);
        out += monomial(coef, rest) * pit->second;
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::string& var, const Rational& value) const {
    return substitute(var, MultiPoly{value});
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& bindings) const {
    std::vector<Rational> values(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = bindings.find(vars_[i]);
        if (it == bindings.end()) throw DomainError("unbound variable");
        values[i] = it->second;
    }
    Rational sum(0);
    for (const auto& [exp, coef] : terms_) {
        Rational term = coef;
        for (size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > 0) term *= rat_pow(values[i], exp[i]);
        sum += term;
    }
    return sum;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [exp, coef] : terms_) {
        Rational mag = coef < 0 ? Rational(-coef) : coef;
        if (first) {
            if (coef < 0) out += "-";
            first = false;
        } else {
            out += coef < 0 ? " - " : " + ";
        }
        std::string mono;
        for (size_t i = 0; i < exp.size(); ++i) {
            if (exp[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (exp[i] > 1) mono += "^" + std::to_string(exp[i]);
        }
        if (mono.empty()) {
            out += rat_str(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += rat_str(mag) + "*" + mono;
        }
    }
    return out;
}

namespace {

struct PolyParser {
    const std::string& src;
    size_t pos = 0;

    explicit PolyParser(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail() { throw ParseError("invalid polynomial: " + src); }

    std::string read_integer_digits() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) fail();
        return src.substr(start, pos - start);
    }

    Rational read_rational() {
        std::string num = read_integer_digits();
        if (eat('/')) return Rational(BigInt(num), BigInt(read_integer_digits()));
        return Rational(BigInt(num));
    }

    bool at_identifier() {
        skip_ws();
        return pos < src.size() &&
               (std::isalpha(static_cast<unsigned char>(src[pos])) || src[pos] == '_');
    }

    std::string read_identifier() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) ||
                                    src[pos] == '_'))
            ++pos;
        if (pos == start) fail();
        return src.substr(start, pos - start);
    }

    // factor := rational | identifier ('^' integer)?
    MultiPoly read_factor() {
        skip_ws();
        if (pos >= src.size()) fail();
        if (at_identifier()) {
            std::string name = read_identifier();
            int e = 1;
            if (eat('^')) {
                std::string digits = read_integer_digits();
                try {
                    e = std::stoi(digits);
                } catch (const std::exception&) {
                    fail();
                }
            }
            return MultiPoly::monomial(Rational(1), {{name, e}});
        }
        if (std::isdigit(static_cast<unsigned char>(src[pos])))
            return MultiPoly{read_rational()};
        fail();
    }

    MultiPoly read_term() {
        MultiPoly p = read_factor();
        while (eat('*')) p *= read_factor();
        return p;
    }

    MultiPoly read_poly() {
        skip_ws();
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        MultiPoly total = read_term();
        if (negative) total = -total;
        for (;;) {
            skip_ws();
            if (pos >= src.size()) break;
            if (eat('+')) {
                total += read_term();
            } else if (eat('-')) {
                total -= read_term();
            } else {
                fail();
            }
        }
        return total;
    }
};

} // namespace

MultiPoly MultiPoly::parse(const std::string& text) {
    PolyParser parser(text);
    parser.skip_ws();
    if (parser.pos >= text.size()) throw ParseError("invalid polynomial: empty input");
    return parser.read_poly();
}

nlohmann::json MultiPoly::to_json() const {
    nlohmann::json j;
    j["vars"] = vars_;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exp, coef] : terms_) {
        nlohmann::json t;
        t["exp"] = exp;
        t["coef"] = rat_str(coef);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms") ||
        !j["vars"].is_array() || !j["terms"].is_array())
        throw ParseError("invalid polynomial JSON");
    std::vector<std::string> names;
    for (const auto& v : j["vars"]) {
        if (!v.is_string()) throw ParseError("invalid polynomial JSON");
        names.push_back(v.get<std::string>());
    }
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size()) throw ParseError("invalid polynomial JSON");
    MultiPoly out;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef") ||
            !t["exp"].is_array() || t["exp"].size() != names.size())
            throw ParseError("invalid polynomial JSON");
        std::vector<std::pair<std::string, int>> powers;
        for (size_t i = 0; i < names.size(); ++i) {
            if (!t["exp"][i].is_number_integer()) throw ParseError("invalid polynomial JSON");
            int e = t["exp"][i].get<int>();
            if (e < 0) throw ParseError("invalid polynomial JSON");
            powers.emplace_back(names[i], e);
        }
        std::string coef_text;
        if (t["coef"].is_string())
            coef_text = t["coef"].get<std::string>();
        else if (t["coef"].is_number_integer())
            coef_text = std::to_string(t["coef"].get<long long>());
        else
            throw ParseError("invalid polynomial JSON");
        out += monomial(rat_parse(coef_text), powers);
    }
    return out;
}

MultiPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points,
                      const std::string& var) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw DomainError("duplicate abscissae in interpolation");
    MultiPoly x = MultiPoly::variable(var);
    MultiPoly total;
    for (size_t i = 0; i < points.size(); ++i) {
        MultiPoly basis{Rational(1)};
        Rational denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis *= x - MultiPoly{points[j].first};
            denom *= points[i].first - points[j].first;
        }
        total += basis * (points[i].second / denom);
    }
    return total;
}

} // namespace graphpoly
