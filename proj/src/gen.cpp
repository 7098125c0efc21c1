#include "oddc/gen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace oddc {

RotationSystem gen_torus_grid(int m, int n, bool triangle_free) {
    if (m < 3 || n < 3)
        throw std::invalid_argument("torus grid needs m, n >= 3");
    if (triangle_free && (m == 3 || n == 3))
        throw std::invalid_argument(
            "torus grid with a 3-cycle factor is not triangle-free");
    auto vid = [m, n](int i, int j) {
        return ((i % m + m) % m) * n + ((j % n + n) % n);
    };
    Graph g(m * n);
    std::vector<std::vector<int>> rot(m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            int v = vid(i, j);
            // clockwise: north, east, south, west
            rot[v] = {vid(i - 1, j), vid(i, j + 1), vid(i + 1, j), vid(i, j - 1)};
            for (int u : rot[v])
                if (u > v) g.add_edge(v, u);
        }
    return RotationSystem(std::move(g), std::move(rot));
}

RotationSystem gen_subdivided(const RotationSystem& rs, std::int64_t num,
                              std::int64_t den, std::uint64_t seed) {
    if (den <= 0 || num < 0 || num > den)
        throw std::invalid_argument("fraction must be in [0, 1]");
    const Graph& g = rs.graph();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    std::size_t count =
        static_cast<std::size_t>((num * static_cast<std::int64_t>(edges.size())) / den);

    // Partial Fisher-Yates with raw mt19937 draws; std::shuffle and the
    // distributions are not byte-stable across standard libraries.
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    std::vector<std::size_t> idx(edges.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = 0; i < count && i < idx.size(); ++i) {
        std::size_t j = i + rng() % (idx.size() - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(count);
    std::sort(idx.begin(), idx.end());

    RotationSystem out = rs;
    for (std::size_t i : idx) out = subdivide_edge(out, edges[i].first, edges[i].second);
    return out;
}

}  // namespace oddc
