#pragma once

#include <string>
#include <vector>

#include "oddc/embedding.hpp"
#include "oddc/graph.hpp"

namespace oddc {

enum class VertexRole { TwoVertex, Convenient, NonConvenient };

// A 4+-vertex is convenient if its degree is odd or it has a 2-neighbor.
// 2-vertices get role TwoVertex; everything else that is not convenient
// (including 0-, 1- and 3-vertices) gets role NonConvenient with
// convenient=false. Predicates that demand a "non-convenient vertex"
// additionally require degree >= 4; use is_nonconvenient_4plus.
struct VertexClass {
    int degree = 0;
    int two_neighbor_count = 0;  // the i of a k_i-vertex
    bool convenient = false;
    VertexRole role = VertexRole::NonConvenient;
};

std::vector<VertexClass> classify_vertices(const Graph& g);

inline bool is_nonconvenient_4plus(const VertexClass& c) {
    return c.degree >= 4 && !c.convenient;
}

enum class TwoVertexKind { Bad, SemiBad, NonBad };

// Badness counts 4-face incidences per corner; a 2-vertex has exactly
// two corners, so the same 4-face touching it twice counts twice.
struct TwoVertexBadness {
    int vertex = 0;
    TwoVertexKind kind = TwoVertexKind::NonBad;
    int four_face_corners = 0;
};

std::vector<TwoVertexBadness> classify_two_vertices(const RotationSystem& rs,
                                                    const FaceSet& faces);

// k_i-face data: i counts distinct 2-vertices on the boundary walk;
// degree_vector lists boundary degrees in walk order from the canonical
// starting dart.
struct FaceClass {
    int degree = 0;
    int two_vertex_count = 0;
    std::vector<int> degree_vector;
};

std::vector<FaceClass> classify_faces(const RotationSystem& rs,
                                      const FaceSet& faces);

// A 5_3-vertex v is poor to u when u is a non-convenient (4+) neighbor
// and both faces along edge uv are 4_1-faces.
struct PoorRelation {
    int poor_vertex = 0;
    int beneficiary = 0;
    int face1 = 0;
    int face2 = 0;
};

std::vector<PoorRelation> poor_relations(const RotationSystem& rs,
                                         const FaceSet& faces);

// Counterexample-shape screens: local structures the discharging
// argument forbids. Detection only; every match is returned.
//   adjacent-2-vertices      two adjacent 2-vertices
//   adjacent-convenient      two adjacent convenient vertices
//   overloaded-k-vertex      a k-vertex (4<=k<=6) adjacent to more than
//                            2k-7 vertices that are 2-vertices or convenient
//   face-two-2-vertices      a 4- or 5-face with >= 2 distinct 2-vertices
//   all-4_0-face             a (4_0,4_0,4_0,4_0)-face
struct ScreenMatch {
    std::string screen;
    std::vector<int> vertices;
    std::vector<int> faces;
};

// Graph-only screens (the first three).
std::vector<ScreenMatch> run_screens(const Graph& g);
// All five screens.
std::vector<ScreenMatch> run_screens(const RotationSystem& rs,
                                     const FaceSet& faces);

}  // namespace oddc
