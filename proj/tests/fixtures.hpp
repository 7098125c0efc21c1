#pragma once

// Shared graph and embedding fixtures for the test suites.

#include <vector>

#include "oddc/embedding.hpp"
#include "oddc/graph.hpp"

namespace fixtures {

using oddc::Graph;
using oddc::RotationSystem;

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

// k triangles sharing vertex 0; the 2k outer vertices are adjacent
// 2-vertex pairs (2i+1, 2i+2).
inline Graph friendship(int k) {
    Graph g(2 * k + 1);
    for (int i = 0; i < k; ++i) {
        g.add_edge(0, 1 + 2 * i);
        g.add_edge(0, 2 + 2 * i);
        g.add_edge(1 + 2 * i, 2 + 2 * i);
    }
    return g;
}

// Cubic circulant C_{2k}(1, k): a 3-regular ladder with a twist.
inline Graph mobius_ladder(int k) {
    Graph g(2 * k);
    for (int i = 0; i < 2 * k; ++i) g.add_edge(i, (i + 1) % (2 * k));
    for (int i = 0; i < k; ++i) g.add_edge(i, i + k);
    return g;
}

inline Graph circulant(int n, const std::vector<int>& offsets) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int d : offsets) {
            int u = (v + d) % n;
            if (u != v && !g.adjacent(v, u)) g.add_edge(v, u);
        }
    return g;
}

// Sorted-neighbor rotation; any valid cyclic order works where the test
// does not care about the face structure.
inline RotationSystem natural_rot(const Graph& g) {
    std::vector<std::vector<int>> rot(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        rot[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    return RotationSystem(g, std::move(rot));
}

// K_7 triangulating the torus: rotation at v is v+1, v+3, v+2, v+6,
// v+4, v+5 (mod 7); tracing yields 14 triangles.
inline RotationSystem k7_torus() {
    Graph g = complete_graph(7);
    std::vector<std::vector<int>> rot(7);
    for (int v = 0; v < 7; ++v)
        for (int d : {1, 3, 2, 6, 4, 5}) rot[v].push_back((v + d) % 7);
    return RotationSystem(std::move(g), std::move(rot));
}

// K_{2,m} drawn on the sphere as m quadrilateral pages between hubs 0
// and 1; page vertices are 2..m+1, every face is a 4-face with two
// opposite 2-vertices.
inline RotationSystem book(int m) {
    Graph g(m + 2);
    for (int i = 0; i < m; ++i) {
        g.add_edge(0, 2 + i);
        g.add_edge(1, 2 + i);
    }
    std::vector<std::vector<int>> rot(m + 2);
    for (int i = m - 1; i >= 0; --i) rot[0].push_back(2 + i);
    for (int i = 0; i < m; ++i) rot[1].push_back(2 + i);
    for (int i = 0; i < m; ++i) rot[2 + i] = {0, 1};
    return RotationSystem(std::move(g), std::move(rot));
}

// Two 4-cycles sharing vertex 0, planar: the outer face walk passes
// through 0 twice.
inline RotationSystem two_squares() {
    Graph g(7);
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 0},
                        {0, 4}, {4, 5}, {5, 6}, {6, 0}})
        g.add_edge(a, b);
    std::vector<std::vector<int>> rot(7);
    rot[0] = {3, 1, 6, 4};
    for (int v = 1; v < 7; ++v)
        rot[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    return RotationSystem(std::move(g), std::move(rot));
}

// A non-convenient 4-vertex (0) next to a 5_3-vertex (1); a second such
// pair is (6, 5). Used by the L-53nbr harness.
inline RotationSystem five_three_neighbor() {
    Graph g(9);
    for (auto [a, b] : {std::pair{0, 1}, {0, 6}, {0, 7}, {0, 8}, {1, 2},
                        {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5},
                        {5, 6}, {6, 7}, {6, 8}, {7, 8}})
        g.add_edge(a, b);
    return natural_rot(g);
}

// A 2-path u-w-v between two 5_3-vertices with both incident faces
// 4-faces [u w v x] and [v w u y]; x and y are 6-vertices.
inline RotationSystem two_path_two_four_faces() {
    const int u = 0, w = 1, v = 2, x = 3, y = 4, t1 = 5, t2 = 6, s1 = 7,
              s2 = 8, p1 = 9, p2 = 10, p3 = 11, p4 = 12, q1 = 13, q2 = 14,
              q3 = 15, q4 = 16;
    Graph g(17);
    for (auto [a, b] :
         {std::pair{u, w}, {w, v}, {u, x}, {v, x}, {u, y}, {v, y},
          {u, t1}, {u, t2}, {v, s1}, {v, s2}, {t1, p1}, {t2, p2},
          {s1, q1}, {s2, q2}, {x, p1}, {x, p2}, {x, p3}, {x, p4},
          {y, q1}, {y, q2}, {y, q3}, {y, q4}, {p1, p2}, {p2, p3},
          {p3, p4}, {p4, p1}, {q1, q2}, {q2, q3}, {q3, q4}, {q4, q1}})
        g.add_edge(a, b);
    std::vector<std::vector<int>> rot(17);
    rot[u] = {x, w, y, t1, t2};
    rot[v] = {y, w, x, s1, s2};
    rot[w] = {u, v};
    rot[x] = {v, u, p1, p2, p3, p4};
    rot[y] = {u, v, q1, q2, q3, q4};
    for (int z : {t1, t2, s1, s2, p1, p2, p3, p4, q1, q2, q3, q4})
        rot[z].assign(g.neighbors(z).begin(), g.neighbors(z).end());
    return RotationSystem(std::move(g), std::move(rot));
}

// A non-convenient 12-vertex (0) whose twelve neighbors are all
// 5_3-vertices poor to it: spokes v_i = 1..12, rim 2-vertices
// u_i = 13..24 on the 4_1-faces [v_i 0 v_{i+1} u_i], pendant 2-vertices
// w_i = 25..36 and outer hubs h_i = 37..48.
inline RotationSystem twelve_vertex_hub() {
    auto vi = [](int i) { return 1 + (i - 1 + 12) % 12; };
    auto ui = [](int i) { return 13 + (i - 1 + 12) % 12; };
    auto wi = [](int i) { return 25 + (i - 1 + 12) % 12; };
    auto hi = [](int i) { return 37 + (i - 1 + 12) % 12; };
    Graph g(49);
    for (int i = 1; i <= 12; ++i) {
        g.add_edge(0, vi(i));
        g.add_edge(vi(i), ui(i));
        g.add_edge(ui(i), vi(i + 1));
        g.add_edge(vi(i), wi(i));
        g.add_edge(wi(i), hi(i));
        g.add_edge(vi(i), hi(i));
        g.add_edge(hi(i), hi(i + 1));
    }
    std::vector<std::vector<int>> rot(49);
    for (int i = 1; i <= 12; ++i) rot[0].push_back(vi(i));
    for (int i = 1; i <= 12; ++i) {
        rot[vi(i)] = {ui(i), 0, ui(i - 1), wi(i), hi(i)};
        rot[ui(i)] = {vi(i), vi(i + 1)};
        rot[wi(i)] = {vi(i), hi(i)};
        rot[hi(i)] = {vi(i), wi(i), hi(i - 1), hi(i + 1)};
    }
    return RotationSystem(std::move(g), std::move(rot));
}

// A 5_3-vertex (1) poor to a non-convenient 4-vertex (0): both faces at
// edge 01 are 4_1-faces. Passing make_u_convenient attaches a 2-vertex
// to 0 instead, so the poor relation disappears.
inline RotationSystem poor_pair(bool make_u_convenient = false) {
    Graph g(9);
    std::vector<std::pair<int, int>> edges = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 6}, {1, 7}, {1, 8},
        {2, 6}, {3, 7}, {2, 5}, {3, 5}, {4, 5}, {1, 5}};
    edges.emplace_back(make_u_convenient ? std::pair{5, 8} : std::pair{4, 8});
    for (auto [a, b] : edges) g.add_edge(a, b);
    std::vector<std::vector<int>> rot(9);
    rot[0] = {2, 1, 3, 4};
    rot[1] = {0, 6, 8, 5, 7};
    rot[2] = {6, 0, 5};
    rot[3] = {0, 7, 5};
    rot[6] = {1, 2};
    rot[7] = {3, 1};
    for (int z : {4, 5, 8})
        rot[z].assign(g.neighbors(z).begin(), g.neighbors(z).end());
    return RotationSystem(std::move(g), std::move(rot));
}

}  // namespace fixtures
