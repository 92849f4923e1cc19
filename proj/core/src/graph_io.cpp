#include "exactcolor/graph_io.hpp"

#include "exactcolor/errors.hpp"

#include <sstream>
#include <string>

namespace exactcolor {

namespace {

bool parse_int(std::istringstream& in, long long& out) {
    return static_cast<bool>(in >> out);
}

bool line_is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    return line;
}

} // namespace

Graph read_dimacs_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0, edges_seen = 0;
    Graph g;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_cr(raw);
        if (line_is_blank(line) || line[0] == 'c')
            continue;
        std::istringstream fields(line);
        std::string head;
        fields >> head;
        if (head == "p") {
            if (have_header)
                throw ParseError("duplicate p line", line_no);
            std::string format;
            if (!(fields >> format) || format != "edge")
                throw ParseError("expected 'p edge <n> <m>'", line_no);
            if (!parse_int(fields, n) || !parse_int(fields, m) || n < 0 || m < 0)
                throw ParseError("expected 'p edge <n> <m>'", line_no);
            std::string trailing;
            if (fields >> trailing)
                throw ParseError("trailing tokens after header", line_no);
            have_header = true;
            g = Graph(static_cast<int>(n));
        } else if (head == "e") {
            if (!have_header)
                throw ParseError("edge before 'p edge' header", line_no);
            long long u = 0, v = 0;
            if (!parse_int(fields, u) || !parse_int(fields, v))
                throw ParseError("expected 'e <u> <v>'", line_no);
            std::string trailing;
            if (fields >> trailing)
                throw ParseError("trailing tokens after edge", line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("edge endpoint out of range", line_no);
            if (u == v)
                throw ParseError("self-loop", line_no);
            g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
            ++edges_seen;
        } else {
            throw ParseError("unrecognized line", line_no);
        }
    }
    if (!have_header)
        throw ParseError("missing 'p edge' header");
    if (edges_seen != m)
        throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges_seen));
    return g;
}

std::string write_dimacs_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

namespace {

std::string escape_dot(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '\\' || c == '"')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string write_dot(const Graph& g, const Coloring* coloring) {
    if (coloring && static_cast<int>(coloring->assignment.size()) != g.vertex_count())
        throw std::invalid_argument("coloring does not match graph");
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        const std::string& label = g.label(v);
        const bool fill = coloring != nullptr;
        if (!label.empty() || fill) {
            out << " [";
            bool first = true;
            if (!label.empty()) {
                out << "label=\"" << escape_dot(label) << "\"";
                first = false;
            }
            if (fill) {
                if (!first)
                    out << ", ";
                out << "style=filled, colorscheme=set312, fillcolor="
                    << coloring->assignment[v] % 12 + 1;
            }
            out << "]";
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace exactcolor
