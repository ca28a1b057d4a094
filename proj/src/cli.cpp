#include "graphpoly/cli.hpp"

#include "graphpoly/binary_function.hpp"
#include "graphpoly/certificate.hpp"
#include "graphpoly/errors.hpp"
#include "graphpoly/extra_invariants.hpp"
#include "graphpoly/go.hpp"
#include "graphpoly/graph_io.hpp"
#include "graphpoly/partial_colouring.hpp"
#include "graphpoly/partition.hpp"
#include "graphpoly/tutte.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace graphpoly {

namespace {

struct CliSettings {
    std::string invariant;
    std::string graph_path;
    std::string graph_path_b;
    std::string lambda = "";
    int q = 0;
    int s = 0;
    double x = 0, y = 0;
    bool have_x = false, have_y = false;
    bool json = false;
    int canon_limit = 10;
    int subset_limit = 20;
    long long state_limit = 10'000'000;
    std::vector<std::string> compare_invariants{"tutte", "chromatic"};
    std::string context = "tutte";
    int depth = 5;
    long long node_limit = 20000;
    std::string cert_path;
    std::string out_path;
};

int parse_int_lambda(const std::string& text) {
    Rational r = rat_parse(text);
    if (denominator(r) != 1 || r < 0)
        throw ParseError("this invariant needs a nonnegative integer --lambda");
    return static_cast<int>(numerator(r).convert_to<long long>());
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ParseError(message);
}

// Computes one invariant of one graph. Returns the text form and fills the
// JSON form.
std::string compute_invariant(const std::string& name, const LabelledGraph& lg,
                              const CliSettings& s, nlohmann::json& out_json) {
    const Multigraph& g = lg.graph;
    TutteOptions topt;
    topt.canon_limit = s.canon_limit;

    auto poly_result = [&](const MultiPoly& p) {
        out_json = p.to_json();
        return p.str();
    };

    if (name == "tutte") return poly_result(tutte_poly(g, topt));
    if (name == "whitney") return poly_result(whitney_rank_poly(g, s.subset_limit));
    if (name == "chromatic") return poly_result(chromatic_poly(g, topt));
    if (name == "edge-chromatic") return poly_result(edge_chromatic_poly(g, topt));
    if (name == "bp") return poly_result(bp_poly(g, s.subset_limit));
    if (name == "potts") {
        require(s.q >= 1, "potts needs --q at least 1");
        return poly_result(potts_poly(g, s.q, s.state_limit));
    }
    if (name == "ising") {
        MultiPoly p = ising_poly(g, s.state_limit);
        out_json = nlohmann::json{{"poly", p.to_json()}, {"prefactor", ising_prefactor(g)}};
        return p.str() + "\n# prefactor: " + ising_prefactor(g);
    }
    if (name == "symat") {
        MultiPoly p = symat_poly(g, s.state_limit);
        out_json = nlohmann::json{{"poly", p.to_json()}, {"prefactor", symat_prefactor(g)}};
        return p.str() + "\n# prefactor: " + symat_prefactor(g);
    }
    if (name == "pc") return poly_result(pc_labelled(lg));
    if (name == "pc-fixed") {
        require(!s.lambda.empty(), "pc-fixed needs --lambda");
        int lambda = parse_int_lambda(s.lambda);
        if (lg.coloured.empty() && lg.uncoloured.empty())
            return poly_result(pc_fixed(g, lambda));
        return poly_result(pc_labelled(lg).substitute("l", Rational(lambda)));
    }
    if (name == "ec") {
        require(!s.lambda.empty(), "ec needs --lambda");
        return poly_result(ec_labelled(lg, parse_int_lambda(s.lambda), s.state_limit));
    }
    if (name == "fc") {
        require(!s.lambda.empty(), "fc needs --lambda");
        return poly_result(fc_labelled(lg, parse_int_lambda(s.lambda), s.state_limit));
    }
    if (name == "go-count") return poly_result(go_count_poly(g, s.state_limit));
    if (name == "go-prob") {
        require(!s.lambda.empty(), "go-prob needs --lambda");
        return poly_result(go_prob(g, parse_int_lambda(s.lambda), s.state_limit));
    }
    if (name == "homcyc") {
        long long count = hom_cycle_count(g, s.q, false, s.state_limit);
        out_json = nlohmann::json{{"value", count}};
        return std::to_string(count);
    }
    if (name == "mc") {
        long long count = bounded_chromon_count(g, s.s, s.state_limit);
        out_json = nlohmann::json{{"value", count}};
        return std::to_string(count);
    }
    if (name == "genus-dist") {
        auto dist = genus_distribution(g, s.state_limit);
        out_json = nlohmann::json::object();
        std::ostringstream text;
        bool first = true;
        for (const auto& [genus, count] : dist) {
            out_json[std::to_string(genus)] = count;
            if (!first) text << "\n";
            text << genus << ": " << count;
            first = false;
        }
        return text.str();
    }
    if (name == "lambda-tw") {
        require(!s.lambda.empty(), "lambda-tw needs --lambda");
        require(s.have_x && s.have_y, "lambda-tw needs --x and --y");
        Rational lambda = rat_parse(s.lambda);
        double value = lambda_tw(BinaryFunction::graphic(g), s.x, s.y, lambda);
        out_json = nlohmann::json{{"value", value}};
        return format_double(value);
    }
    throw ParseError("unknown invariant: " + name);
}

int cmd_poly(const CliSettings& s, std::ostream& out) {
    LabelledGraph lg = read_graph_file(s.graph_path);
    nlohmann::json j;
    std::string text = compute_invariant(s.invariant, lg, s, j);
    if (s.json)
        out << j.dump(2) << "\n";
    else
        out << text << "\n";
    return 0;
}

int cmd_compare(const CliSettings& s, std::ostream& out) {
    LabelledGraph a = read_graph_file(s.graph_path);
    LabelledGraph b = read_graph_file(s.graph_path_b);
    nlohmann::json table = nlohmann::json::object();
    std::ostringstream text;
    for (const std::string& name : s.compare_invariants) {
        nlohmann::json ja, jb;
        std::string ta = compute_invariant(name, a, s, ja);
        std::string tb = compute_invariant(name, b, s, jb);
        bool equal = ja == jb && ta == tb;
        table[name] = equal ? "EQUAL" : "DISTINCT";
        text << name << ": " << (equal ? "EQUAL" : "DISTINCT") << "\n";
    }
    if (s.json)
        out << table.dump(2) << "\n";
    else
        out << text.str();
    return 0;
}

int cmd_cert_verify(const CliSettings& s, std::ostream& out) {
    std::ifstream in(s.cert_path);
    if (!in) throw ParseError("cannot open certificate file: " + s.cert_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid certificate JSON: ") + e.what());
    }
    Certificate cert = certificate_from_json(j);
    VerifyResult result = verify(cert, s.canon_limit);
    if (result.valid) {
        out << "VALID\n";
        return 0;
    }
    out << "INVALID: " << result.reason << "\n";
    return 1;
}

int cmd_cert_search(const CliSettings& s, std::ostream& out) {
    LabelledGraph g = read_graph_file(s.graph_path);
    LabelledGraph h = read_graph_file(s.graph_path_b);
    SearchOptions options;
    options.max_steps = s.depth;
    options.node_limit = s.node_limit;
    options.canon_limit = s.canon_limit;
    SearchResult result =
        cert_search(g.graph, h.graph, context_from_name(s.context), options);
    if (!result.found) {
        out << "NOT-FOUND: " << result.reason << "\n";
        return 1;
    }
    std::string dumped = certificate_to_json(result.certificate).dump(2);
    out << dumped << "\n";
    if (!s.out_path.empty()) {
        std::ofstream file(s.out_path);
        if (!file) throw ParseError("cannot write certificate file: " + s.out_path);
        file << dumped << "\n";
    }
    return 0;
}

void add_shared_flags(CLI::App* cmd, CliSettings& s) {
    cmd->add_flag("--json", s.json, "emit JSON instead of text");
    cmd->add_option("--canon-limit", s.canon_limit,
                    "largest vertex count handled by canonicalisation");
    cmd->add_option("--subset-limit", s.subset_limit,
                    "largest edge count for subset enumerations");
    cmd->add_option("--state-limit", s.state_limit,
                    "largest number of enumerated states");
}

void add_param_flags(CLI::App* cmd, CliSettings& s) {
    cmd->add_option("--lambda", s.lambda, "colour count (integer, or rational for lambda-tw)");
    cmd->add_option("--q", s.q, "colour or cycle-length parameter");
    cmd->add_option("--s", s.s, "chromon size bound");
    cmd->add_option("--x", s.x, "x evaluation point")->each([&](const std::string&) {
        s.have_x = true;
    });
    cmd->add_option("--y", s.y, "y evaluation point")->each([&](const std::string&) {
        s.have_y = true;
    });
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliSettings s;
    CLI::App app{"graph polynomial toolkit"};
    app.require_subcommand(1);

    CLI::App* poly = app.add_subcommand("poly", "compute an invariant of one graph");
    poly->add_option("invariant", s.invariant, "invariant name")->required();
    poly->add_option("graph", s.graph_path, "graph file")->required();
    add_param_flags(poly, s);
    add_shared_flags(poly, s);

    CLI::App* compare = app.add_subcommand("compare", "compare invariants of two graphs");
    compare->add_option("graph-a", s.graph_path, "first graph file")->required();
    compare->add_option("graph-b", s.graph_path_b, "second graph file")->required();
    compare->add_option("--invariants", s.compare_invariants, "invariants to compare")
        ->delimiter(',');
    add_param_flags(compare, s);
    add_shared_flags(compare, s);

    CLI::App* cert = app.add_subcommand("cert", "verify or search for certificates");
    cert->require_subcommand(1);
    CLI::App* cert_verify = cert->add_subcommand("verify", "check a certificate file");
    cert_verify->add_option("certificate", s.cert_path, "certificate JSON file")->required();
    add_shared_flags(cert_verify, s);
    CLI::App* cert_search_cmd =
        cert->add_subcommand("search", "search for a certificate between two graphs");
    cert_search_cmd->add_option("graph-a", s.graph_path, "first graph file")->required();
    cert_search_cmd->add_option("graph-b", s.graph_path_b, "second graph file")->required();
    cert_search_cmd->add_option("--context", s.context, "tutte or chromatic");
    cert_search_cmd->add_option("--depth", s.depth, "maximum number of steps");
    cert_search_cmd->add_option("--node-limit", s.node_limit, "search node budget");
    cert_search_cmd->add_option("--out", s.out_path, "also write the certificate here");
    add_shared_flags(cert_search_cmd, s);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (poly->parsed()) return cmd_poly(s, out);
        if (compare->parsed()) return cmd_compare(s, out);
        if (cert_verify->parsed()) return cmd_cert_verify(s, out);
        if (cert_search_cmd->parsed()) return cmd_cert_search(s, out);
        err << "no command given\n";
        return 2;
    } catch (const LimitError& e) {
        err << "limit exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace graphpoly
