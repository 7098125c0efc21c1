#include "oddc/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace oddc {

namespace {

void check_colors(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.vertex_count())
        throw std::invalid_argument("coloring size mismatch");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.color[v] < 1 || c.color[v] > c.palette)
            throw std::invalid_argument("color of vertex " + std::to_string(v) +
                                        " out of range 1.." +
                                        std::to_string(c.palette));
}

std::vector<int> odd_set_unchecked(const Graph& g, const Coloring& c, int v,
                                   std::vector<int>& scratch) {
    scratch.assign(c.palette + 1, 0);
    for (int u : g.neighbors(v)) scratch[c.color[u]] ^= 1;
    std::vector<int> out;
    for (int col = 1; col <= c.palette; ++col)
        if (scratch[col]) out.push_back(col);
    return out;
}

}  // namespace

std::vector<int> odd_color_set(const Graph& g, const Coloring& c, int v) {
    check_colors(g, c);
    if (g.degree(v) == 0)
        throw std::invalid_argument("odd color set of isolated vertex " +
                                    std::to_string(v));
    std::vector<int> scratch;
    return odd_set_unchecked(g, c, v, scratch);
}

OddReport is_odd_coloring(const Graph& g, const Coloring& c) {
    check_colors(g, c);
    OddReport report;
    report.odd_colors.resize(g.vertex_count());
    std::vector<int> scratch;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int u : g.neighbors(v))
            if (u > v && c.color[u] == c.color[v])
                report.proper_violations.emplace_back(v, u);
        if (g.degree(v) == 0) continue;
        report.odd_colors[v] = odd_set_unchecked(g, c, v, scratch);
        if (report.odd_colors[v].empty()) report.odd_violations.push_back(v);
    }
    report.pass = report.proper_violations.empty() && report.odd_violations.empty();
    return report;
}

Coloring parse_coloring(std::string_view text, int vertex_count,
                        int palette_override) {
    Coloring c;
    c.color.assign(vertex_count, 0);
    std::vector<char> seen(vertex_count, 0);
    std::size_t line_start = 0;
    for (std::size_t pos = 0; pos <= text.size(); ++pos) {
        if (pos != text.size() && text[pos] != '\n') continue;
        std::string_view line = text.substr(line_start, pos - line_start);
        std::size_t offset = line_start;
        line_start = pos + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        std::istringstream ss{std::string(line)};
        int v, col;
        if (!(ss >> v)) continue;  // blank
        if (!(ss >> col)) throw ParseError("coloring line needs \"v color\"", offset);
        std::string rest;
        if (ss >> rest) throw ParseError("trailing tokens on coloring line", offset);
        if (v < 0 || v >= vertex_count)
            throw ParseError("vertex id out of range in coloring", offset);
        if (seen[v]) throw ParseError("vertex colored twice", offset);
        if (col < 1) throw ParseError("colors start at 1", offset);
        seen[v] = 1;
        c.color[v] = col;
    }
    for (int v = 0; v < vertex_count; ++v)
        if (!seen[v])
            throw ParseError("vertex " + std::to_string(v) + " has no color", 0);
    int max_color = 0;
    for (int col : c.color) max_color = std::max(max_color, col);
    c.palette = palette_override > 0 ? palette_override : max_color;
    if (c.palette < max_color)
        throw std::invalid_argument("palette smaller than max used color");
    return c;
}

std::string write_coloring(const Coloring& c) {
    std::ostringstream os;
    for (std::size_t v = 0; v < c.color.size(); ++v)
        os << v << ' ' << c.color[v] << '\n';
    return os.str();
}

}  // namespace oddc
