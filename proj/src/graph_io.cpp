#include "graphpoly/graph_io.hpp"

#include "graphpoly/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace graphpoly {

namespace {

std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
            ++start;
        line.erase(0, start);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& body, const std::string& context) {
    std::vector<int> out;
    std::istringstream in(body);
    std::string tok;
    while (in >> tok) {
        try {
            size_t used = 0;
            int value = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(value);
        } catch (const std::exception&) {
            throw ParseError("invalid " + context + " entry: " + tok);
        }
    }
    return out;
}

} // namespace

LabelledGraph parse_edge_list(const std::string& text) {
    auto lines = data_lines(text);
    if (lines.empty()) throw ParseError("empty graph description");

    std::vector<int> header = parse_int_list(lines[0], "header");
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        throw ParseError("expected header line \"n m\"");
    int n = header[0], m = header[1];

    LabelledGraph lg;
    lg.graph = Multigraph(n);
    size_t next = 1;
    for (int e = 0; e < m; ++e, ++next) {
        if (next >= lines.size()) throw ParseError("fewer edge lines than declared");
        std::vector<int> pair = parse_int_list(lines[next], "edge");
        if (pair.size() != 2) throw ParseError("expected edge line \"u v\"");
        if (pair[0] < 0 || pair[0] >= n || pair[1] < 0 || pair[1] >= n)
            throw ParseError("edge endpoint out of range");
        lg.graph.add_edge(pair[0], pair[1]);
    }
    for (; next < lines.size(); ++next) {
        const std::string& line = lines[next];
        std::vector<int>* target = nullptr;
        if (line.rfind("C:", 0) == 0)
            target = &lg.coloured;
        else if (line.rfind("U:", 0) == 0)
            target = &lg.uncoloured;
        else
            throw ParseError("unexpected trailing line: " + line);
        for (int v : parse_int_list(line.substr(2), "label")) {
            if (v < 0 || v >= n) throw ParseError("labelled vertex out of range");
            target->push_back(v);
        }
    }
    auto tidy = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    tidy(lg.coloured);
    tidy(lg.uncoloured);
    for (int v : lg.coloured)
        if (std::binary_search(lg.uncoloured.begin(), lg.uncoloured.end(), v))
            throw ParseError("vertex labelled both coloured and uncoloured");
    return lg;
}

Multigraph parse_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
    if (s.empty()) throw ParseError("empty graph6 line");
    for (char c : s)
        if (c < 63 || c > 126) throw ParseError("invalid graph6 character");
    size_t pos = 0;
    int n;
    if (s[0] == '~') throw ParseError("graph6 with more than 62 vertices not supported");
    n = s[0] - 63;
    pos = 1;

    int bits_needed = n * (n - 1) / 2;
    int bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<int>(s.size() - pos) != bytes_needed)
        throw ParseError("graph6 length does not match vertex count");

    Multigraph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = s[static_cast<size_t>(pos) + static_cast<size_t>(bit / 6)] - 63;
            if (byte >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    return g;
}

LabelledGraph parse_graph_text(const std::string& text) {
    auto lines = data_lines(text);
    if (lines.empty()) throw ParseError("empty graph description");
    if (lines[0].find(' ') != std::string::npos || lines[0].find('\t') != std::string::npos)
        return parse_edge_list(text);
    LabelledGraph lg;
    lg.graph = parse_graph6(lines[0]);
    return lg;
}

std::string to_edge_list(const Multigraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

LabelledGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_text(buffer.str());
}

} // namespace graphpoly
