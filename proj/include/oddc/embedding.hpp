#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "oddc/graph.hpp"

namespace oddc {

// Combinatorial embedding of an orientable surface: a cyclic order of
// neighbors (clockwise) around every vertex. The rotation at v must be a
// permutation of v's neighbor set; this is checked at construction.
class RotationSystem {
public:
    RotationSystem(Graph g, std::vector<std::vector<int>> rotation);

    const Graph& graph() const { return g_; }
    std::span<const int> rotation(int v) const { return rot_[v]; }

    // Neighbor following u in the cyclic order at v.
    int successor(int v, int u) const;

    bool operator==(const RotationSystem& other) const {
        return g_ == other.g_ && rot_ == other.rot_;
    }

private:
    Graph g_;
    std::vector<std::vector<int>> rot_;
    std::unordered_map<std::int64_t, int> pos_;  // (v,u) -> index in rot_[v]
};

// Faces of an embedding as closed boundary walks. walks[f] lists the
// boundary vertices; consecutive entries (cyclically) are the darts of
// the face. Each walk starts at its lexicographically smallest dart, and
// faces are numbered in order of that smallest dart.
struct FaceSet {
    std::vector<std::vector<int>> walks;
    std::unordered_map<std::int64_t, int> face_of_dart;

    int face_count() const { return static_cast<int>(walks.size()); }
    int degree(int f) const { return static_cast<int>(walks[f].size()); }
    int face_of(int tail, int head) const;
};

// A vertex/face incidence: the two darts (prev -> v) and (v -> next)
// meeting at v along the boundary of face.
struct Corner {
    int vertex;
    int face;
    int prev;
    int next;
};

struct Incidences {
    std::vector<Corner> corners;                   // grouped by face, walk order
    std::vector<std::vector<int>> faces_of_vertex; // with multiplicity
};

// Face tracing: from dart (u,v) the next dart is (v,w) where w is the
// successor of u in the rotation at v. Every dart lies on exactly one
// face. Requires at least one edge.
FaceSet trace_faces(const RotationSystem& rs);

// |V| - |E| + |F|; 2 for the sphere, 0 for the torus. Throws on
// disconnected graphs.
int euler_characteristic(const RotationSystem& rs);
int euler_characteristic(const RotationSystem& rs, const FaceSet& faces);

Incidences incidences(const RotationSystem& rs, const FaceSet& faces);

// Replaces edge u-v by a path u-w-v through a fresh vertex w (id n).
// w takes over the edge's slot in the rotations at u and v.
RotationSystem subdivide_edge(const RotationSystem& rs, int u, int v);

// .rot file format: one line per vertex, "v: n1 n2 ... nk" giving the
// clockwise neighbor order. Blank lines and '#' comments are ignored.
RotationSystem parse_rot(std::string_view text);
std::string write_rot(const RotationSystem& rs);

// "face <id> (deg k): v1 v2 ... vk" listing.
void write_face_listing(std::ostream& os, const FaceSet& faces);

}  // namespace oddc
