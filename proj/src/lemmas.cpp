#include "oddc/lemmas.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace oddc {

namespace {

struct LemmaInfo {
    LemmaId id;
    const char* name;
    bool needs_embedding;
};

constexpr LemmaInfo kLemmas[] = {
    {LemmaId::No3V, "L-no3v", false},
    {LemmaId::Tool1, "L-tool1", false},
    {LemmaId::Tool2, "L-tool2", false},
    {LemmaId::Tool3, "L-tool3", false},
    {LemmaId::FourFiveFace, "L-4f5f", true},
    {LemmaId::NonConv4V, "L-nc4v", true},
    {LemmaId::FiveThreeNbr, "L-53nbr", true},
    {LemmaId::TwoPath4F, "L-2path4f", true},
    {LemmaId::All40Face, "L-4040face", true},
    {LemmaId::TwelveVert, "L-12vert", true},
};

const LemmaInfo& info(LemmaId id) {
    for (const auto& l : kLemmas)
        if (l.id == id) return l;
    throw std::logic_error("unknown lemma id");
}

}  // namespace

std::string lemma_id_str(LemmaId id) { return info(id).name; }

std::optional<LemmaId> parse_lemma_id(std::string_view text) {
    for (const auto& l : kLemmas)
        if (text == l.name) return l.id;
    return std::nullopt;
}

bool lemma_needs_embedding(LemmaId id) { return info(id).needs_embedding; }

std::vector<LemmaId> all_lemma_ids() {
    std::vector<LemmaId> out;
    for (const auto& l : kLemmas) out.push_back(l.id);
    return out;
}

int ConfigMatch::vertex(std::string_view role) const {
    for (const auto& [name, v] : vertex_map)
        if (name == role) return v;
    throw std::invalid_argument("no role " + std::string(role) + " in match");
}

namespace {

void sort_canonical(std::vector<ConfigMatch>& matches) {
    std::stable_sort(matches.begin(), matches.end(),
                     [](const ConfigMatch& a, const ConfigMatch& b) {
                         auto key = [](const ConfigMatch& m) {
                             std::vector<int> k;
                             for (const auto& [_, v] : m.vertex_map) k.push_back(v);
                             for (const auto& [_, f] : m.face_map) k.push_back(f);
                             return k;
                         };
                         return key(a) < key(b);
                     });
}

// Other neighbors of v, excluding the given ones, ascending.
std::vector<int> others(const Graph& g, int v, std::initializer_list<int> except) {
    std::vector<int> out;
    for (int u : g.neighbors(v))
        if (std::find(except.begin(), except.end(), u) == except.end())
            out.push_back(u);
    return out;
}

std::vector<ConfigMatch> find_graph_matches(const Graph& g, LemmaId id) {
    auto vc = classify_vertices(g);
    std::vector<ConfigMatch> out;
    switch (id) {
        case LemmaId::No3V:
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (g.degree(v) != 3) continue;
                ConfigMatch m{id, {{"v", v}}, {}};
                auto nbrs = g.neighbors(v);
                m.vertex_map.emplace_back("v1", nbrs[0]);
                m.vertex_map.emplace_back("v2", nbrs[1]);
                m.vertex_map.emplace_back("v3", nbrs[2]);
                out.push_back(std::move(m));
            }
            break;
        case LemmaId::Tool1:
            for (int u = 0; u < g.vertex_count(); ++u) {
                if (g.degree(u) != 2) continue;
                for (int v : g.neighbors(u)) {
                    if (v <= u || g.degree(v) != 2) continue;
                    ConfigMatch m{id, {{"u", u}, {"v", v}}, {}};
                    m.vertex_map.emplace_back("u'", others(g, u, {v})[0]);
                    m.vertex_map.emplace_back("v'", others(g, v, {u})[0]);
                    out.push_back(std::move(m));
                }
            }
            break;
        case LemmaId::Tool2:
            for (int u = 0; u < g.vertex_count(); ++u) {
                if (!vc[u].convenient) continue;
                for (int v : g.neighbors(u))
                    if (v > u && vc[v].convenient)
                        out.push_back(ConfigMatch{id, {{"u", u}, {"v", v}}, {}});
            }
            break;
        case LemmaId::Tool3:
            for (int v = 0; v < g.vertex_count(); ++v) {
                int k = g.degree(v);
                if (k < 4 || k > 6) continue;
                int hits = 0;
                for (int u : g.neighbors(v))
                    if (vc[u].degree == 2 || vc[u].convenient) ++hits;
                if (hits < 2 * k - 6) continue;
                ConfigMatch m{id, {{"v", v}}, {}};
                int i = 1;
                for (int u : g.neighbors(v))
                    m.vertex_map.emplace_back("v" + std::to_string(i++), u);
                out.push_back(std::move(m));
            }
            break;
        default:
            throw std::invalid_argument(lemma_id_str(id) +
                                        " needs an embedding");
    }
    sort_canonical(out);
    return out;
}

std::vector<ConfigMatch> find_face_matches(const RotationSystem& rs,
                                           const FaceSet& faces, LemmaId id) {
    const Graph& g = rs.graph();
    auto vc = classify_vertices(g);
    std::vector<ConfigMatch> out;
    auto is_53 = [&](int v) {
        return vc[v].degree == 5 && vc[v].two_neighbor_count == 3;
    };
    switch (id) {
        case LemmaId::FourFiveFace:
            for (int f = 0; f < faces.face_count(); ++f) {
                int k = faces.degree(f);
                if (k != 4 && k != 5) continue;
                const auto& w = faces.walks[f];
                for (int i = 0; i < k; ++i) {
                    int a = w[i], b = w[(i + 2) % k];
                    if (a == b || g.degree(a) != 2 || g.degree(b) != 2) continue;
                    ConfigMatch m{id, {}, {{"f", f}}};
                    for (int j = 0; j < k; ++j)
                        m.vertex_map.emplace_back("v" + std::to_string(j + 1),
                                                  w[(i + j) % k]);
                    out.push_back(std::move(m));
                }
            }
            break;
        case LemmaId::NonConv4V:
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (vc[v].degree != 4 || !is_nonconvenient_4plus(vc[v])) continue;
                std::vector<int> conv, nonconv;
                for (int u : g.neighbors(v)) {
                    if (vc[u].convenient)
                        conv.push_back(u);
                    else if (is_nonconvenient_4plus(vc[u]))
                        nonconv.push_back(u);
                }
                if (conv.size() != 1 || nonconv.size() != 3) continue;
                for (int v2 : nonconv) {
                    if (vc[v2].degree != 4) continue;
                    ConfigMatch m{id, {{"v", v}, {"v1", conv[0]}, {"v2", v2}}, {}};
                    auto rest = others(g, v, {conv[0], v2});
                    m.vertex_map.emplace_back("v3", rest[0]);
                    m.vertex_map.emplace_back("v4", rest[1]);
                    auto o2 = others(g, v2, {v});
                    m.vertex_map.emplace_back("v2'", o2[0]);
                    m.vertex_map.emplace_back("v2''", o2[1]);
                    m.vertex_map.emplace_back("v2'''", o2[2]);
                    out.push_back(std::move(m));
                }
            }
            break;
        case LemmaId::FiveThreeNbr:
            for (int v = 0; v < g.vertex_count(); ++v) {
                int k = vc[v].degree;
                if (!is_nonconvenient_4plus(vc[v])) continue;
                if (k != 4 && k != 6 && k != 8 && k != 10) continue;
                int conv_count = 0;
                for (int u : g.neighbors(v))
                    if (vc[u].convenient) ++conv_count;
                if (2 * conv_count < 3 * k - 10) continue;
                for (int v1 : g.neighbors(v)) {
                    if (!vc[v1].convenient || !is_53(v1)) continue;
                    ConfigMatch m{id, {{"v", v}, {"v1", v1}}, {}};
                    std::vector<int> twos;
                    for (int u : others(g, v1, {v}))
                        if (g.degree(u) == 2)
                            twos.push_back(u);
                        else
                            m.vertex_map.emplace_back("v1'", u);
                    const char* names[] = {"v1''", "v1'''", "v1''''"};
                    for (std::size_t i = 0; i < twos.size(); ++i)
                        m.vertex_map.emplace_back(names[i], twos[i]);
                    out.push_back(std::move(m));
                }
            }
            break;
        case LemmaId::TwoPath4F:
            for (int w = 0; w < g.vertex_count(); ++w) {
                if (g.degree(w) != 2) continue;
                int u = g.neighbors(w)[0], v = g.neighbors(w)[1];
                if (!is_53(u) || !is_53(v)) continue;
                int f1 = faces.face_of(u, w);
                int f2 = faces.face_of(v, w);
                if (f1 == f2) continue;
                if (faces.degree(f1) != 4 || faces.degree(f2) != 4) continue;
                auto fourth = [&](int f, int skip1, int skip2, int skip3) {
                    for (int z : faces.walks[f])
                        if (z != skip1 && z != skip2 && z != skip3) return z;
                    return -1;
                };
                int x = fourth(f1, u, w, v);
                int y = fourth(f2, u, w, v);
                if (x < 0 || y < 0) continue;
                out.push_back(ConfigMatch{
                    id,
                    {{"u", u}, {"w", w}, {"v", v}, {"x", x}, {"y", y}},
                    {{"f1", f1}, {"f2", f2}}});
            }
            break;
        case LemmaId::All40Face:
            for (int f = 0; f < faces.face_count(); ++f) {
                if (faces.degree(f) != 4) continue;
                const auto& w = faces.walks[f];
                std::set<int> distinct(w.begin(), w.end());
                if (distinct.size() != 4) continue;
                bool all_40 = true;
                for (int v : w)
                    if (vc[v].degree != 4 || vc[v].two_neighbor_count != 0)
                        all_40 = false;
                if (!all_40) continue;
                ConfigMatch m{id, {}, {{"f", f}}};
                for (int j = 0; j < 4; ++j)
                    m.vertex_map.emplace_back("v" + std::to_string(j + 1), w[j]);
                auto o1 = others(g, w[0], {w[1], w[3]});
                m.vertex_map.emplace_back("v1'", o1[0]);
                m.vertex_map.emplace_back("v1''", o1[1]);
                auto o2 = others(g, w[1], {w[0], w[2]});
                m.vertex_map.emplace_back("v2'", o2[0]);
                m.vertex_map.emplace_back("v2''", o2[1]);
                out.push_back(std::move(m));
            }
            break;
        case LemmaId::TwelveVert: {
            auto poors = poor_relations(rs, faces);
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (vc[v].degree != 12 || !is_nonconvenient_4plus(vc[v])) continue;
                bool all_poor = true;
                for (int u : g.neighbors(v)) {
                    bool found = false;
                    for (const auto& p : poors)
                        if (p.poor_vertex == u && p.beneficiary == v) found = true;
                    if (!found) all_poor = false;
                }
                if (!all_poor) continue;
                ConfigMatch m{id, {{"v", v}}, {}};
                // neighbors in rotation order, starting at the smallest
                auto rot = rs.rotation(v);
                int start = 0;
                for (std::size_t i = 1; i < rot.size(); ++i)
                    if (rot[i] < rot[start]) start = static_cast<int>(i);
                for (int i = 0; i < 12; ++i)
                    m.vertex_map.emplace_back("v" + std::to_string(i + 1),
                                              rot[(start + i) % 12]);
                out.push_back(std::move(m));
            }
            break;
        }
        default:
            return find_graph_matches(g, id);
    }
    sort_canonical(out);
    return out;
}

}  // namespace

std::vector<ConfigMatch> find_configurations(const Graph& g, LemmaId id) {
    return find_graph_matches(g, id);
}

std::vector<ConfigMatch> find_configurations(const RotationSystem& rs,
                                             const FaceSet& faces, LemmaId id) {
    if (!lemma_needs_embedding(id)) return find_graph_matches(rs.graph(), id);
    return find_face_matches(rs, faces, id);
}

namespace {

SurgeryResult delete_vertices(const Graph& g, std::vector<int> victims) {
    std::sort(victims.begin(), victims.end());
    SurgeryResult r;
    r.steps.push_back(SurgeryStep{SurgeryKind::DeleteVertices, victims, {}});
    r.to_reduced.assign(g.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (std::binary_search(victims.begin(), victims.end(), v)) continue;
        r.to_reduced[v] = next++;
        r.from_reduced.push_back(v);
    }
    r.reduced = Graph(next);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (r.to_reduced[v] < 0) continue;
        for (int u : g.neighbors(v))
            if (u > v && r.to_reduced[u] >= 0)
                r.reduced.add_edge(r.to_reduced[v], r.to_reduced[u]);
    }
    return r;
}

void add_2path(SurgeryResult& r, int a_orig, int b_orig) {
    int a = r.to_reduced[a_orig], b = r.to_reduced[b_orig];
    assert(a >= 0 && b >= 0 && a != b);
    Graph g2(r.reduced.vertex_count() + 1);
    for (int v = 0; v < r.reduced.vertex_count(); ++v)
        for (int u : r.reduced.neighbors(v))
            if (u > v) g2.add_edge(v, u);
    int mid = r.reduced.vertex_count();
    g2.add_edge(a, mid);
    g2.add_edge(mid, b);
    r.reduced = std::move(g2);
    r.from_reduced.push_back(-1);
    r.produced.push_back(mid);
    r.steps.push_back(SurgeryStep{SurgeryKind::Add2Path, {a_orig, b_orig}, {mid}});
}

SurgeryResult split_edge_surgery(const Graph& g, int u, int v) {
    SurgeryResult r;
    r.to_reduced.resize(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) {
        r.to_reduced[i] = i;
        r.from_reduced.push_back(i);
    }
    int mid = g.vertex_count();
    r.reduced = Graph(mid + 1);
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b : g.neighbors(a))
            if (a < b && !(a == std::min(u, v) && b == std::max(u, v)))
                r.reduced.add_edge(a, b);
    r.reduced.add_edge(u, mid);
    r.reduced.add_edge(mid, v);
    r.from_reduced.push_back(-1);
    r.produced.push_back(mid);
    r.steps.push_back(SurgeryStep{SurgeryKind::SplitEdge, {u, v}, {mid}});
    return r;
}

}  // namespace

SurgeryResult apply_surgery(const Graph& g, const ConfigMatch& m) {
    switch (m.lemma) {
        case LemmaId::No3V:
        case LemmaId::Tool3:
            return delete_vertices(g, {m.vertex("v")});
        case LemmaId::Tool1:
            return delete_vertices(g, {m.vertex("v")});
        case LemmaId::FourFiveFace:
            return delete_vertices(g, {m.vertex("v1")});
        case LemmaId::Tool2:
            return split_edge_surgery(g, m.vertex("u"), m.vertex("v"));
        case LemmaId::FiveThreeNbr:
            return split_edge_surgery(g, m.vertex("v"), m.vertex("v1"));
        case LemmaId::TwoPath4F:
            return split_edge_surgery(g, m.vertex("x"), m.vertex("v"));
        case LemmaId::NonConv4V: {
            SurgeryResult r = delete_vertices(g, {m.vertex("v"), m.vertex("v2")});
            add_2path(r, m.vertex("v1"), m.vertex("v3"));
            add_2path(r, m.vertex("v1"), m.vertex("v4"));
            add_2path(r, m.vertex("v3"), m.vertex("v4"));
            add_2path(r, m.vertex("v2'"), m.vertex("v2''"));
            add_2path(r, m.vertex("v2''"), m.vertex("v2'''"));
            add_2path(r, m.vertex("v2'''"), m.vertex("v2'"));
            return r;
        }
        case LemmaId::All40Face: {
            SurgeryResult r = delete_vertices(g, {m.vertex("v1"), m.vertex("v2")});
            add_2path(r, m.vertex("v1'"), m.vertex("v1''"));
            add_2path(r, m.vertex("v1'"), m.vertex("v4"));
            add_2path(r, m.vertex("v1''"), m.vertex("v4"));
            add_2path(r, m.vertex("v2'"), m.vertex("v2''"));
            add_2path(r, m.vertex("v2'"), m.vertex("v3"));
            add_2path(r, m.vertex("v2''"), m.vertex("v3"));
            return r;
        }
        case LemmaId::TwelveVert:
            throw std::invalid_argument(
                "L-12vert is detection-only; it has no surgery");
    }
    throw std::logic_error("unreachable");
}

namespace {

// Minimum color of C_o(v) in the reduced coloring, or 0 when v is
// isolated there (nothing to protect).
int min_odd_color(const Graph& reduced, const Coloring& rc, int v) {
    if (reduced.degree(v) == 0) return 0;
    auto set = odd_color_set(reduced, rc, v);
    assert(!set.empty());
    return set.front();
}

std::string forbid_str(const std::set<int>& forbidden) {
    std::string s = "{";
    for (int c : forbidden) s += std::to_string(c) + ",";
    if (s.size() > 1) s.pop_back();
    return s + "}";
}

// Restriction of the reduced coloring to the original vertex set;
// deleted vertices stay 0 and must be filled by the caller.
Coloring restrict_coloring(const Graph& g, const SurgeryResult& s,
                           const Coloring& rc) {
    Coloring c{std::vector<int>(g.vertex_count(), 0), rc.palette};
    for (int v = 0; v < g.vertex_count(); ++v)
        if (s.to_reduced[v] >= 0) c.color[v] = rc.color[s.to_reduced[v]];
    return c;
}

bool verify(const Graph& g, const Coloring& c) {
    return is_odd_coloring(g, c).pass;
}

// Exhaustive search over all palette^|order| assignments of the given
// vertices, colors ascending, lexicographic; first verified assignment
// wins. Properness against already-fixed colors prunes the recursion.
bool bounded_search(const Graph& g, Coloring& c, const std::vector<int>& order,
                    std::size_t idx) {
    if (idx == order.size()) return verify(g, c);
    int v = order[idx];
    for (int cand = 1; cand <= c.palette; ++cand) {
        bool proper = true;
        for (int u : g.neighbors(v))
            if (c.color[u] == cand) {
                proper = false;
                break;
            }
        if (!proper) continue;
        c.color[v] = cand;
        if (bounded_search(g, c, order, idx + 1)) return true;
    }
    c.color[v] = 0;
    return false;
}

Extension finish_with_search(const Graph& g, Coloring c,
                             std::vector<int> search_set, Extension ext,
                             bool as_fallback) {
    for (int v : search_set) c.color[v] = 0;
    if (bounded_search(g, c, search_set, 0)) {
        ext.used_fallback = as_fallback;
        ext.coloring = std::move(c);
        return ext;
    }
    std::string set_str;
    for (int v : search_set) set_str += " " + std::to_string(v);
    ext.trace.push_back("bounded search exhausted over {" + set_str + " }");
    return ext;
}

std::vector<int> two_neighbors(const Graph& g, int v) {
    std::vector<int> out;
    for (int u : g.neighbors(v))
        if (g.degree(u) == 2) out.push_back(u);
    return out;
}

}  // namespace

bool repair_via_2_neighbor(const Graph& g, Coloring& c, int x) {
    auto odd_ok = [&](int v) {
        if (g.degree(v) == 0) return true;
        return !odd_color_set(g, c, v).empty();
    };
    if (odd_ok(x)) return true;
    for (int t : two_neighbors(g, x)) {
        int s = g.neighbors(t)[0] == x ? g.neighbors(t)[1] : g.neighbors(t)[0];
        int old = c.color[t];
        for (int cand = 1; cand <= c.palette; ++cand) {
            if (cand == old || cand == c.color[x] || cand == c.color[s]) continue;
            c.color[t] = cand;
            if (odd_ok(x) && odd_ok(s) && odd_ok(t)) return true;
        }
        c.color[t] = old;
    }
    return false;
}

Extension extend_coloring(const Graph& g, const ConfigMatch& m,
                          const SurgeryResult& s, const Coloring& rc) {
    if (rc.palette != 7)
        throw std::invalid_argument("extensions expect a 7-color palette");
    Extension ext;
    Coloring c = restrict_coloring(g, s, rc);

    auto scripted_fill = [&](int target, const std::set<int>& forbidden,
                             std::vector<int> fallback_set) -> Extension {
        ext.trace.push_back("forbidden for v" + std::to_string(target) + ": " +
                            forbid_str(forbidden));
        for (int cand = 1; cand <= 7; ++cand) {
            if (forbidden.count(cand)) continue;
            c.color[target] = cand;
            if (verify(g, c)) {
                ext.coloring = c;
                return ext;
            }
            ext.trace.push_back("scripted color " + std::to_string(cand) +
                                " failed verification");
            break;
        }
        return finish_with_search(g, c, std::move(fallback_set), ext, true);
    };

    switch (m.lemma) {
        case LemmaId::No3V: {
            int v = m.vertex("v");
            std::set<int> forbidden;
            for (int u : g.neighbors(v)) {
                forbidden.insert(c.color[u]);
                int oc = min_odd_color(s.reduced, rc, s.to_reduced[u]);
                if (oc) forbidden.insert(oc);
            }
            return scripted_fill(v, forbidden, {v});
        }
        case LemmaId::Tool1: {
            int v = m.vertex("v"), u = m.vertex("u");
            int vp = m.vertex("v'"), up = m.vertex("u'");
            std::set<int> forbidden = {c.color[u], c.color[vp], c.color[up]};
            int oc = min_odd_color(s.reduced, rc, s.to_reduced[vp]);
            if (oc) forbidden.insert(oc);
            return scripted_fill(v, forbidden, {v});
        }
        case LemmaId::FourFiveFace: {
            int v1 = m.vertex("v1");
            std::set<int> forbidden;
            for (int u : g.neighbors(v1)) {
                forbidden.insert(c.color[u]);
                int oc = min_odd_color(s.reduced, rc, s.to_reduced[u]);
                if (oc) forbidden.insert(oc);
            }
            return scripted_fill(v1, forbidden, {v1});
        }
        case LemmaId::Tool2: {
            int u = m.vertex("u"), v = m.vertex("v");
            // The restriction drops the split vertex; u and v keep odd
            // colorings because they are convenient: odd degree is
            // automatic, even degree repairs through a 2-neighbor.
            for (int round = 0; round < 8 && !verify(g, c); ++round) {
                bool progressed = false;
                for (int x : {u, v})
                    if (!odd_color_set(g, c, x).empty() ||
                        repair_via_2_neighbor(g, c, x))
                        progressed = true;
                if (!progressed) break;
            }
            if (verify(g, c)) {
                ext.coloring = c;
                return ext;
            }
            ext.trace.push_back("2-neighbor repair did not settle");
            std::vector<int> set = two_neighbors(g, u);
            for (int t : two_neighbors(g, v)) set.push_back(t);
            std::sort(set.begin(), set.end());
            set.erase(std::unique(set.begin(), set.end()), set.end());
            return finish_with_search(g, restrict_coloring(g, s, rc),
                                      std::move(set), ext, true);
        }
        case LemmaId::Tool3: {
            std::vector<int> set = {m.vertex("v")};
            for (int t : two_neighbors(g, m.vertex("v"))) set.push_back(t);
            return finish_with_search(g, c, std::move(set), ext, false);
        }
        case LemmaId::NonConv4V:
            return finish_with_search(
                g, c, {m.vertex("v2"), m.vertex("v")}, ext, false);
        case LemmaId::FiveThreeNbr:
            return finish_with_search(
                g, c, {m.vertex("v1"), m.vertex("v")}, ext, false);
        case LemmaId::TwoPath4F:
            return finish_with_search(
                g, c, {m.vertex("u"), m.vertex("w"), m.vertex("v")}, ext, false);
        case LemmaId::All40Face:
            return finish_with_search(
                g, c, {m.vertex("v1"), m.vertex("v2"), m.vertex("v4")}, ext,
                false);
        case LemmaId::TwelveVert:
            throw std::invalid_argument(
                "L-12vert is detection-only; it has no extension");
    }
    throw std::logic_error("unreachable");
}

namespace {

std::string match_lines(const ConfigMatch& m) {
    std::ostringstream os;
    for (const auto& [role, v] : m.vertex_map) os << role << "=" << v << '\n';
    for (const auto& [role, f] : m.face_map) os << role << "=f" << f << '\n';
    return os.str();
}

void dump_reproducer(const std::string& dir, const std::string& stem,
                     const CorpusEntry& entry, const ConfigMatch& match,
                     const SurgeryResult& surgery, const Coloring& oracle) {
    auto put = [&](const std::string& suffix, const std::string& body) {
        std::ofstream out(dir + "/" + stem + suffix);
        out << body;
    };
    put(".g6", encode_graph6(entry.g) + "\n");
    if (entry.rs) put(".rot", write_rot(*entry.rs));
    put(".match", match_lines(match));
    put(".reduced.g6", encode_graph6(surgery.reduced) + "\n");
    put(".oracle", write_coloring(oracle));
}

// Seeded selection of `want` match indices out of `count` using raw
// mt19937 draws (portable across standard libraries).
std::vector<std::size_t> sample_indices(std::size_t count, std::size_t want,
                                        std::uint64_t seed) {
    std::vector<std::size_t> idx(count);
    for (std::size_t i = 0; i < count; ++i) idx[i] = i;
    if (want >= count) return idx;
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    for (std::size_t i = 0; i < want; ++i) {
        std::size_t j = i + rng() % (count - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(want);
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace

HarnessSummary run_lemma_harness(const std::vector<CorpusEntry>& corpus,
                                 LemmaId id, int trials, std::uint64_t seed,
                                 const SearchConfig& oracle_cfg,
                                 const std::string& reproducer_dir) {
    HarnessSummary sum;
    sum.lemma = id;
    sum.entries = static_cast<int>(corpus.size());
    for (std::size_t e = 0; e < corpus.size(); ++e) {
        const CorpusEntry& entry = corpus[e];
        if (lemma_needs_embedding(id) && !entry.rs)
            throw std::invalid_argument(lemma_id_str(id) +
                                        " needs an embedded corpus entry");
        if (id == LemmaId::All40Face) {
            auto gir = girth(entry.g);
            if (gir && *gir < 4)
                throw std::invalid_argument(
                    "L-4040face corpus must be triangle-free");
        }
        std::vector<ConfigMatch> matches;
        FaceSet faces;
        if (entry.rs) {
            faces = trace_faces(*entry.rs);
            matches = find_configurations(*entry.rs, faces, id);
        } else {
            matches = find_configurations(entry.g, id);
        }
        sum.matches += matches.size();
        auto picked = sample_indices(
            matches.size(),
            trials <= 0 ? matches.size() : static_cast<std::size_t>(trials),
            seed + e);
        for (std::size_t mi : picked) {
            const ConfigMatch& match = matches[mi];
            ++sum.processed;
            if (id == LemmaId::TwelveVert) {
                // detection + ledger recomputation only
                auto ledger = twelve_vertex_ledger(*entry.rs, faces, match);
                (void)ledger;
                ++sum.passed;
                continue;
            }
            SurgeryResult surgery = apply_surgery(entry.g, match);
            SearchConfig cfg = oracle_cfg;
            cfg.palette = 7;
            SolveResult oracle = solve_odd_coloring(surgery.reduced, cfg);
            if (oracle.status == SolveStatus::Timeout) {
                ++sum.oracle_timeouts;
                continue;
            }
            if (oracle.status == SolveStatus::NotColorable) {
                ++sum.oracle_infeasible;
                continue;
            }
            Extension ext =
                extend_coloring(entry.g, match, surgery, *oracle.witness);
            if (ext.coloring && verify(entry.g, *ext.coloring)) {
                ++sum.passed;
            } else {
                ++sum.failed;
                std::string detail;
                for (const auto& t : ext.trace) detail += t + "; ";
                sum.failures.push_back(
                    HarnessFailure{static_cast<int>(e), match, detail});
                if (!reproducer_dir.empty())
                    dump_reproducer(reproducer_dir,
                                    lemma_id_str(id) + "-e" + std::to_string(e) +
                                        "-m" + std::to_string(mi),
                                    entry, match, surgery, *oracle.witness);
            }
        }
    }
    return sum;
}

NeighborhoodLedger twelve_vertex_ledger(const RotationSystem& rs,
                                        const FaceSet& faces,
                                        const ConfigMatch& match) {
    if (match.lemma != LemmaId::TwelveVert)
        throw std::invalid_argument("expected an L-12vert match");
    const Graph& g = rs.graph();
    ChargeLedger ledger = apply_rules(rs, faces);
    NeighborhoodLedger out;
    std::set<int> verts;
    std::set<int> face_ids;
    int v = match.vertex("v");
    verts.insert(v);
    for (int u : g.neighbors(v)) {
        verts.insert(u);
        for (int t : g.neighbors(u))
            if (g.degree(t) == 2) verts.insert(t);
        face_ids.insert(faces.face_of(v, u));
        face_ids.insert(faces.face_of(u, v));
    }
    for (int u : verts)
        out.finals.emplace_back(ElementId{false, u}, ledger.vertex_final[u]);
    for (int f : face_ids)
        out.finals.emplace_back(ElementId{true, f}, ledger.face_final[f]);
    return out;
}

}  // namespace oddc
