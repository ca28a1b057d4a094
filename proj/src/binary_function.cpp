#include "graphpoly/binary_function.hpp"

#include "graphpoly/errors.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <cmath>

namespace graphpoly {

BinaryFunction::BinaryFunction(int ground_size, std::vector<Rational> values, int vertex_count)
    : m_(ground_size), vertex_count_(vertex_count), values_(std::move(values)) {
    if (m_ < 0 || m_ > 24) throw LimitError("binary function ground set too large");
    if (values_.size() != (std::size_t{1} << m_))
        throw DomainError("binary function table has wrong size");
}

bool BinaryFunction::operator==(const BinaryFunction& rhs) const {
    return m_ == rhs.m_ && values_ == rhs.values_;
}

BinaryFunction BinaryFunction::graphic(const Multigraph& g) {
    int m = g.edge_count();
    if (m > 24) throw LimitError("binary function ground set too large");
    // Row of the incidence matrix for each vertex, as an edge bitmask. Loops
    // contribute nothing (their column is zero over GF(2)).
    std::vector<std::uint32_t> rows(static_cast<size_t>(g.vertex_count()), 0);
    for (int e = 0; e < m; ++e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        rows[static_cast<size_t>(ed.u)] ^= std::uint32_t{1} << e;
        rows[static_cast<size_t>(ed.v)] ^= std::uint32_t{1} << e;
    }
    // Gaussian elimination to a basis of the row space.
    std::vector<std::uint32_t> basis;
    for (std::uint32_t row : rows) {
        for (std::uint32_t b : basis) row = std::min(row, row ^ b);
        if (row) basis.push_back(row);
    }
    std::vector<Rational> table(std::size_t{1} << m, Rational(0));
    std::uint32_t combos = std::uint32_t{1} << basis.size();
    for (std::uint32_t pick = 0; pick < combos; ++pick) {
        std::uint32_t vec = 0;
        for (size_t i = 0; i < basis.size(); ++i)
            if (pick >> i & 1) vec ^= basis[i];
        table[vec] = Rational(1);
    }
    return BinaryFunction(m, std::move(table), g.vertex_count());
}

BinaryFunction BinaryFunction::reduce(int e, const Rational& lambda) const {
    if (e < 0 || e >= m_) throw DomainError("ground element out of range");
    std::uint32_t bit = std::uint32_t{1} << e;
    Rational denom = values_[0] + lambda * values_[bit];
    if (denom == 0) throw DomainError("λ-reduction undefined for this element");

    std::vector<Rational> table(std::size_t{1} << (m_ - 1));
    std::uint32_t low_mask = bit - 1;
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << (m_ - 1)); ++x) {
        std::uint32_t expanded = (x & low_mask) | ((x & ~low_mask) << 1);
        table[x] = (values_[expanded] + lambda * values_[expanded | bit]) / denom;
    }
    return BinaryFunction(m_ - 1, std::move(table), vertex_count_);
}

nlohmann::json BinaryFunction::to_json() const {
    nlohmann::json j;
    j["m"] = m_;
    j["vertex_count"] = vertex_count_;
    nlohmann::json vals = nlohmann::json::array();
    for (const Rational& v : values_) vals.push_back(rat_str(v));
    j["values"] = std::move(vals);
    return j;
}

BinaryFunction BinaryFunction::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("values") ||
        !j["m"].is_number_integer() || !j["values"].is_array())
        throw ParseError("invalid binary function JSON");
    int m = j["m"].get<int>();
    if (m < 0 || m > 24) throw LimitError("binary function ground set too large");
    if (j["values"].size() != (std::size_t{1} << m))
        throw ParseError("invalid binary function JSON");
    int vc = 0;
    if (j.contains("vertex_count")) {
        if (!j["vertex_count"].is_number_integer())
            throw ParseError("invalid binary function JSON");
        vc = j["vertex_count"].get<int>();
    }
    std::vector<Rational> values;
    values.reserve(j["values"].size());
    for (const auto& v : j["values"]) {
        if (v.is_string())
            values.push_back(rat_parse(v.get<std::string>()));
        else if (v.is_number_integer())
            values.push_back(Rational(v.get<long long>()));
        else
            throw ParseError("invalid binary function JSON");
    }
    return BinaryFunction(m, std::move(values), vc);
}

Rational dual_lambda(const Rational& lambda) {
    if (lambda == -1) throw DomainError("dual λ undefined at λ = -1");
    return (Rational(1) - lambda) / (Rational(1) + lambda);
}

namespace {

double log2_rational(const Rational& r) {
    // Split into numerator and denominator to dodge double overflow.
    double num = rat_double(Rational(numerator(r)));
    double den = rat_double(Rational(denominator(r)));
    return std::log2(num) - std::log2(den);
}

} // namespace

double q_rank(const BinaryFunction& f, std::uint32_t x_mask, const Rational& lambda) {
    int m = f.ground_size();
    if (m > 0 && (x_mask >> m) != 0) throw DomainError("subset outside ground set");
    Rational dual = dual_lambda(lambda);
    std::uint32_t total = std::uint32_t{1} << m;

    Rational s(0), d(0);
    for (std::uint32_t w = 0; w < total; ++w) {
        if (f.value(w) == 0) continue;
        int inside = std::popcount(w & x_mask);
        int outside = std::popcount(w) - inside;
        s += rat_pow(lambda, std::popcount(w)) * f.value(w);
        d += rat_pow(lambda, outside) * rat_pow(dual, inside) * f.value(w);
    }
    if (d == 0) throw DomainError("Q undefined");
    Rational ratio = rat_pow(Rational(1) + dual, std::popcount(x_mask)) * s / d;
    if (ratio <= 0) throw DomainError("Q undefined");
    return log2_rational(ratio);
}

double loopiness(const BinaryFunction& f, int e, const Rational& lambda) {
    if (e < 0 || e >= f.ground_size()) throw DomainError("ground element out of range");
    Rational dual = dual_lambda(lambda);
    std::uint32_t full = (std::uint32_t{1} << f.ground_size()) - 1;
    return q_rank(f, full, dual) - q_rank(f, full & ~(std::uint32_t{1} << e), dual);
}

double coloopiness(const BinaryFunction& f, int e, const Rational& lambda) {
    return loopiness(f, e, dual_lambda(lambda));
}

double lambda_tw(const BinaryFunction& f, double x, double y, const Rational& lambda) {
    int m = f.ground_size();
    std::uint32_t total = std::uint32_t{1} << m;
    std::uint32_t full = total - 1;
    double q_full = q_rank(f, full, lambda);
    double sum = 0;
    for (std::uint32_t x_mask = 0; x_mask < total; ++x_mask) {
        double q = q_rank(f, x_mask, lambda);
        sum += std::pow(x * y, q_full - q) * std::pow(y, std::popcount(x_mask));
    }
    return std::pow(y, -q_full) * sum;
}

} // namespace graphpoly
