#include "oddc/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace oddc {

Graph Graph::from_edges(int vertex_count,
                        const std::vector<std::pair<int, int>>& edges) {
    Graph g(vertex_count);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    if (adjacent(u, v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) +
                                    "-" + std::to_string(v));
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

void Graph::validate() const {
    for (int v = 0; v < vertex_count(); ++v) {
        const auto& row = adj_[v];
        for (std::size_t i = 0; i < row.size(); ++i) {
            int u = row[i];
            if (u == v) throw std::logic_error("self-loop at " + std::to_string(v));
            if (i > 0 && row[i - 1] >= u)
                throw std::logic_error("unsorted or repeated neighbor at " +
                                       std::to_string(v));
            if (u < 0 || u >= vertex_count())
                throw std::logic_error("neighbor id out of range");
            if (!adjacent(u, v))
                throw std::logic_error("asymmetric adjacency " +
                                       std::to_string(v) + "-" + std::to_string(u));
        }
    }
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degrees.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        p.degrees[v] = g.degree(v);
        ++p.counts[g.degree(v)];
    }
    return p;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge between vertices at depths
    // d(u), d(w) closes a cycle of length d(u)+d(w)+1. The minimum over
    // all roots is exact because a root on a shortest cycle sees it.
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        parent[s] = -1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u] && dist[w] >= dist[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == n;
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

class BitReader {
public:
    BitReader(std::string_view data, std::size_t byte_offset)
        : data_(data), pos_(byte_offset) {}

    int next_bit() {
        if (pos_ >= data_.size())
            throw ParseError("graph6 data truncated", pos_);
        unsigned char c = static_cast<unsigned char>(data_[pos_]);
        if (c < 63 || c > 126)
            throw ParseError("non-printable graph6 byte", pos_);
        int bit = ((c - 63) >> (5 - bit_index_)) & 1;
        if (++bit_index_ == 6) {
            bit_index_ = 0;
            ++pos_;
        }
        return bit;
    }

    // Remaining padding bits in the current byte must be zero and no
    // further bytes may follow.
    void finish() {
        while (bit_index_ != 0) {
            std::size_t at = pos_;
            if (next_bit() != 0) throw ParseError("nonzero padding bit", at);
        }
        if (pos_ != data_.size())
            throw ParseError("trailing garbage after graph6 data", pos_);
    }

private:
    std::string_view data_;
    std::size_t pos_;
    int bit_index_ = 0;
};

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header)
        base = kGraph6Header.size();
    if (base >= text.size()) throw ParseError("empty graph6 input", base);

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw ParseError("truncated length prefix", i);
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("non-printable graph6 byte", i);
        return c - 63;
    };

    std::size_t pos = base;
    long long n = 0;
    int b0 = byte_at(pos);
    if (b0 < 63) {
        n = b0;
        pos += 1;
    } else {
        int b1 = byte_at(pos + 1);
        if (b1 < 63) {
            n = (static_cast<long long>(b1) << 12) |
                (static_cast<long long>(byte_at(pos + 2)) << 6) |
                byte_at(pos + 3);
            if (n < 63) throw ParseError("non-canonical length prefix", pos);
            pos += 4;
        } else {
            n = 0;
            for (int i = 0; i < 6; ++i)
                n = (n << 6) | byte_at(pos + 2 + i);
            if (n < 258048) throw ParseError("non-canonical length prefix", pos);
            pos += 8;
        }
    }
    if (n > 100000) throw ParseError("vertex count too large", base);

    Graph g(static_cast<int>(n));
    BitReader bits(text, pos);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits.next_bit()) g.add_edge(i, j);
    bits.finish();
    return g;
}

std::string encode_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

}  // namespace oddc
