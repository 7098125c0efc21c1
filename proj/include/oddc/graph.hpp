#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddc {

// Thrown by the text-format readers; offset is the byte position of the
// offending character within the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Simple undirected graph with dense vertex ids 0..n-1.
// Neighbor lists are kept sorted ascending; no loops, no parallel edges.
// Instances are treated as immutable once built, so sharing across
// threads is safe.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count) : adj_(vertex_count) {}

    static Graph from_edges(int vertex_count,
                            const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::span<const int> neighbors(int v) const { return adj_[v]; }

    bool adjacent(int u, int v) const;

    // Inserts the edge keeping lists sorted; rejects loops and duplicates.
    void add_edge(int u, int v);

    // Checks the simple/symmetric invariants by full scan; throws
    // std::logic_error on violation.
    void validate() const;

    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

struct DegreeProfile {
    std::vector<int> degrees;
    std::map<int, int> counts;  // degree -> frequency
};

DegreeProfile degree_profile(const Graph& g);

// Length of a shortest cycle; nullopt for acyclic graphs.
std::optional<int> girth(const Graph& g);

bool is_connected(const Graph& g);

// graph6 text format (the de-facto standard: offset-63 bytes, upper
// triangle column by column, big-endian within each 6-bit group).
// The optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

}  // namespace oddc
