#include "oddc/embedding.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <ostream>
#include <sstream>

namespace oddc {

namespace {

std::int64_t dart_key(int tail, int head) {
    return (static_cast<std::int64_t>(tail) << 32) | static_cast<std::uint32_t>(head);
}

}  // namespace

RotationSystem::RotationSystem(Graph g, std::vector<std::vector<int>> rotation)
    : g_(std::move(g)), rot_(std::move(rotation)) {
    if (static_cast<int>(rot_.size()) != g_.vertex_count())
        throw std::invalid_argument("rotation table size mismatch");
    for (int v = 0; v < g_.vertex_count(); ++v) {
        auto nbrs = g_.neighbors(v);
        std::vector<int> sorted_rot(rot_[v]);
        std::sort(sorted_rot.begin(), sorted_rot.end());
        if (!std::equal(sorted_rot.begin(), sorted_rot.end(), nbrs.begin(), nbrs.end()))
            throw std::invalid_argument(
                "rotation at vertex " + std::to_string(v) +
                " is not a permutation of its neighbors");
        for (std::size_t i = 0; i < rot_[v].size(); ++i)
            pos_[dart_key(v, rot_[v][i])] = static_cast<int>(i);
    }
}

int RotationSystem::successor(int v, int u) const {
    auto it = pos_.find(dart_key(v, u));
    if (it == pos_.end())
        throw std::invalid_argument("no edge " + std::to_string(v) + "-" +
                                    std::to_string(u));
    const auto& row = rot_[v];
    return row[(it->second + 1) % row.size()];
}

int FaceSet::face_of(int tail, int head) const {
    auto it = face_of_dart.find(dart_key(tail, head));
    if (it == face_of_dart.end())
        throw std::invalid_argument("unknown dart " + std::to_string(tail) +
                                    "->" + std::to_string(head));
    return it->second;
}

FaceSet trace_faces(const RotationSystem& rs) {
    const Graph& g = rs.graph();
    if (g.edge_count() == 0)
        throw std::invalid_argument("face tracing needs at least one edge");
    FaceSet fs;
    // Darts in ascending (tail, head) order; each new face is discovered
    // from its smallest dart, which becomes the walk's starting point.
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (fs.face_of_dart.count(dart_key(u, v))) continue;
            int id = fs.face_count();
            std::vector<int> walk;
            int a = u, b = v;
            do {
                fs.face_of_dart[dart_key(a, b)] = id;
                walk.push_back(a);
                int c = rs.successor(b, a);
                a = b;
                b = c;
            } while (!(a == u && b == v));
            fs.walks.push_back(std::move(walk));
        }
    }
    std::size_t total = 0;
    for (const auto& w : fs.walks) total += w.size();
    assert(total == 2 * static_cast<std::size_t>(g.edge_count()));
    return fs;
}

int euler_characteristic(const RotationSystem& rs, const FaceSet& faces) {
    if (!is_connected(rs.graph()))
        throw std::invalid_argument("euler characteristic of a disconnected graph");
    return rs.graph().vertex_count() - rs.graph().edge_count() + faces.face_count();
}

int euler_characteristic(const RotationSystem& rs) {
    return euler_characteristic(rs, trace_faces(rs));
}

Incidences incidences(const RotationSystem& rs, const FaceSet& faces) {
    Incidences inc;
    inc.faces_of_vertex.resize(rs.graph().vertex_count());
    for (int f = 0; f < faces.face_count(); ++f) {
        const auto& w = faces.walks[f];
        int k = static_cast<int>(w.size());
        for (int i = 0; i < k; ++i) {
            int prev = w[(i + k - 1) % k];
            int next = w[(i + 1) % k];
            inc.corners.push_back(Corner{w[i], f, prev, next});
            inc.faces_of_vertex[w[i]].push_back(f);
        }
    }
    return inc;
}

RotationSystem subdivide_edge(const RotationSystem& rs, int u, int v) {
    const Graph& g = rs.graph();
    if (!g.adjacent(u, v))
        throw std::invalid_argument("subdivide: no edge " + std::to_string(u) +
                                    "-" + std::to_string(v));
    int w = g.vertex_count();
    Graph g2(w + 1);
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b : g.neighbors(a))
            if (a < b && !(a == std::min(u, v) && b == std::max(u, v)))
                g2.add_edge(a, b);
    g2.add_edge(u, w);
    g2.add_edge(w, v);

    std::vector<std::vector<int>> rot;
    rot.reserve(w + 1);
    for (int a = 0; a < g.vertex_count(); ++a) {
        std::vector<int> row(rs.rotation(a).begin(), rs.rotation(a).end());
        if (a == u) std::replace(row.begin(), row.end(), v, w);
        if (a == v) std::replace(row.begin(), row.end(), u, w);
        rot.push_back(std::move(row));
    }
    rot.push_back({u, v});
    return RotationSystem(std::move(g2), std::move(rot));
}

RotationSystem parse_rot(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::vector<int> ids;
    std::size_t line_start = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        if (pos == text.size() || text[pos] == '\n') {
            std::string_view line = text.substr(line_start, pos - line_start);
            std::size_t offset = line_start;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            std::size_t hash = line.find('#');
            if (hash != std::string_view::npos) line = line.substr(0, hash);
            std::size_t first = line.find_first_not_of(" \t");
            if (first != std::string_view::npos) {
                std::size_t colon = line.find(':');
                if (colon == std::string_view::npos)
                    throw ParseError("rotation line missing ':'", offset);
                int v = 0;
                auto head = line.substr(first, colon - first);
                auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), v);
                if (ec != std::errc() || p != head.data() + head.size())
                    throw ParseError("bad vertex id in rotation line", offset + first);
                std::vector<int> nbrs;
                std::size_t i = colon + 1;
                while (i < line.size()) {
                    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
                    if (i >= line.size()) break;
                    std::size_t j = i;
                    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
                    int id = 0;
                    auto tok = line.substr(i, j - i);
                    auto [q, ec2] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
                    if (ec2 != std::errc() || q != tok.data() + tok.size())
                        throw ParseError("bad neighbor id in rotation line", offset + i);
                    nbrs.push_back(id);
                    i = j;
                }
                ids.push_back(v);
                rows.push_back(std::move(nbrs));
            }
            line_start = pos + 1;
            if (pos == text.size()) break;
        }
        ++pos;
    }
    if (ids.empty()) throw ParseError("empty rotation file", 0);
    int n = *std::max_element(ids.begin(), ids.end()) + 1;
    std::vector<std::vector<int>> rot(n);
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        int v = ids[i];
        if (v < 0) throw ParseError("negative vertex id", 0);
        if (seen[v]) throw ParseError("duplicate rotation line for vertex " +
                                      std::to_string(v), 0);
        seen[v] = 1;
        rot[v] = std::move(rows[i]);
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            throw ParseError("missing rotation line for vertex " + std::to_string(v), 0);

    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int u : rot[v]) {
            if (u < 0 || u >= n)
                throw std::invalid_argument("neighbor id out of range in rotation of " +
                                            std::to_string(v));
            if (u > v) {
                // symmetry is enforced by RotationSystem's permutation check
                g.add_edge(v, u);
            }
        }
    return RotationSystem(std::move(g), std::move(rot));
}

std::string write_rot(const RotationSystem& rs) {
    std::ostringstream os;
    for (int v = 0; v < rs.graph().vertex_count(); ++v) {
        os << v << ":";
        for (int u : rs.rotation(v)) os << ' ' << u;
        os << '\n';
    }
    return os.str();
}

void write_face_listing(std::ostream& os, const FaceSet& faces) {
    for (int f = 0; f < faces.face_count(); ++f) {
        os << "face " << f << " (deg " << faces.degree(f) << "):";
        for (int v : faces.walks[f]) os << ' ' << v;
        os << '\n';
    }
}

}  // namespace oddc
