#include "oddc/classify.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace oddc {

std::vector<VertexClass> classify_vertices(const Graph& g) {
    std::vector<VertexClass> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexClass& c = out[v];
        c.degree = g.degree(v);
        for (int u : g.neighbors(v))
            if (g.degree(u) == 2) ++c.two_neighbor_count;
        c.convenient = c.degree >= 4 &&
                       (c.degree % 2 == 1 || c.two_neighbor_count > 0);
        if (c.degree == 2)
            c.role = VertexRole::TwoVertex;
        else
            c.role = c.convenient ? VertexRole::Convenient : VertexRole::NonConvenient;
    }
    return out;
}

std::vector<TwoVertexBadness> classify_two_vertices(const RotationSystem& rs,
                                                    const FaceSet& faces) {
    const Graph& g = rs.graph();
    std::vector<TwoVertexBadness> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 2) continue;
        TwoVertexBadness b;
        b.vertex = v;
        for (int u : rs.rotation(v))
            if (faces.degree(faces.face_of(v, u)) == 4) ++b.four_face_corners;
        assert(b.four_face_corners <= 2);
        b.kind = b.four_face_corners == 2   ? TwoVertexKind::Bad
                 : b.four_face_corners == 1 ? TwoVertexKind::SemiBad
                                            : TwoVertexKind::NonBad;
        out.push_back(b);
    }
    return out;
}

std::vector<FaceClass> classify_faces(const RotationSystem& rs,
                                      const FaceSet& faces) {
    const Graph& g = rs.graph();
    std::vector<FaceClass> out(faces.face_count());
    for (int f = 0; f < faces.face_count(); ++f) {
        FaceClass& c = out[f];
        c.degree = faces.degree(f);
        std::set<int> twos;
        for (int v : faces.walks[f]) {
            c.degree_vector.push_back(g.degree(v));
            if (g.degree(v) == 2) twos.insert(v);
        }
        c.two_vertex_count = static_cast<int>(twos.size());
    }
    return out;
}

std::vector<PoorRelation> poor_relations(const RotationSystem& rs,
                                         const FaceSet& faces) {
    const Graph& g = rs.graph();
    auto vc = classify_vertices(g);
    auto fc = classify_faces(rs, faces);
    auto is_41_face = [&](int f) {
        return fc[f].degree == 4 && fc[f].two_vertex_count == 1;
    };
    std::vector<PoorRelation> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (vc[v].degree != 5 || vc[v].two_neighbor_count != 3) continue;
        for (int u : g.neighbors(v)) {
            if (!is_nonconvenient_4plus(vc[u])) continue;
            int f1 = faces.face_of(v, u);
            int f2 = faces.face_of(u, v);
            if (is_41_face(f1) && is_41_face(f2))
                out.push_back(PoorRelation{v, u, std::min(f1, f2), std::max(f1, f2)});
        }
    }
    return out;
}

namespace {

void graph_screens(const Graph& g, const std::vector<VertexClass>& vc,
                   std::vector<ScreenMatch>& out) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            if (vc[u].degree == 2 && vc[v].degree == 2)
                out.push_back({"adjacent-2-vertices", {u, v}, {}});
            if (vc[u].convenient && vc[v].convenient)
                out.push_back({"adjacent-convenient", {u, v}, {}});
        }
    for (int v = 0; v < g.vertex_count(); ++v) {
        int k = vc[v].degree;
        if (k < 4 || k > 6) continue;
        std::vector<int> hits;
        for (int u : g.neighbors(v))
            if (vc[u].degree == 2 || vc[u].convenient) hits.push_back(u);
        if (static_cast<int>(hits.size()) > 2 * k - 7) {
            hits.insert(hits.begin(), v);
            out.push_back({"overloaded-k-vertex", std::move(hits), {}});
        }
    }
}

}  // namespace

std::vector<ScreenMatch> run_screens(const Graph& g) {
    std::vector<ScreenMatch> out;
    graph_screens(g, classify_vertices(g), out);
    return out;
}

std::vector<ScreenMatch> run_screens(const RotationSystem& rs,
                                     const FaceSet& faces) {
    const Graph& g = rs.graph();
    auto vc = classify_vertices(g);
    std::vector<ScreenMatch> out;
    graph_screens(g, vc, out);
    auto fc = classify_faces(rs, faces);
    for (int f = 0; f < faces.face_count(); ++f) {
        if ((fc[f].degree == 4 || fc[f].degree == 5) && fc[f].two_vertex_count >= 2) {
            std::vector<int> twos;
            for (int v : faces.walks[f])
                if (g.degree(v) == 2) twos.push_back(v);
            std::sort(twos.begin(), twos.end());
            twos.erase(std::unique(twos.begin(), twos.end()), twos.end());
            out.push_back({"face-two-2-vertices", std::move(twos), {f}});
        }
        if (fc[f].degree == 4) {
            bool all_40 = true;
            for (int v : faces.walks[f])
                if (!(vc[v].degree == 4 && vc[v].two_neighbor_count == 0))
                    all_40 = false;
            if (all_40)
                out.push_back({"all-4_0-face",
                               {faces.walks[f].begin(), faces.walks[f].end()},
                               {f}});
        }
    }
    return out;
}

}  // namespace oddc
