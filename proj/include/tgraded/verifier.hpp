#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tgraded/scalar.hpp"

namespace tgraded::graph {

using Vertex = std::size_t;
using Path = std::vector<Vertex>;

struct Edge {
    Vertex a = 0;
    Vertex b = 0;
    Scalar weight;
};

// Connected undirected graph with positive rational weights and its exact
// shortest-path metric.
class MetricGraph {
public:
    MetricGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t size() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Scalar& d(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
    // Lightest edge weight between u and v, if adjacent.
    const std::optional<Scalar>& weight(Vertex u, Vertex v) const { return adj_[u * n_ + v]; }
    const std::vector<Vertex>& neighbours(Vertex u) const { return nbrs_[u]; }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::optional<Scalar>> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
    std::vector<Scalar> dist_;
};

// Candidate pieces: nonempty vertex sets whose union is every vertex.
class PieceCover {
public:
    PieceCover(const MetricGraph& g, std::vector<std::vector<Vertex>> pieces);

    const std::vector<std::vector<Vertex>>& pieces() const { return pieces_; }
    bool contains(std::size_t piece, Vertex v) const { return in_[piece][v]; }

private:
    std::vector<std::vector<Vertex>> pieces_;
    std::vector<std::vector<bool>> in_;
};

struct GraphViolation {
    std::string axiom;
    std::vector<std::size_t> pieces;
    std::vector<Vertex> vertices;
    std::vector<Path> paths;
};

struct Verdict {
    bool accepted = true;
    std::vector<GraphViolation> violations;

    void merge(Verdict other);
};

inline constexpr std::size_t kDefaultCap = 10000;

// Every shortest path from u to v, in lexicographic order. Throws CapExceeded
// when there are more than `cap`.
std::vector<Path> all_geodesics(const MetricGraph& g, Vertex u, Vertex v, std::size_t cap = kDefaultCap);

// A path meets every piece in at most one vertex.
bool is_transverse(const PieceCover& cover, const Path& path);

// Two paths from a common triangle: sides a->b, b->c, a->c, as vertex lists.
bool is_tripod(const Path& ab, const Path& bc, const Path& ac);

Verdict check_T1(const MetricGraph& g, const PieceCover& cover);
Verdict check_convexity(const MetricGraph& g, const PieceCover& cover, std::size_t cap = kDefaultCap);
Verdict check_projection_system(const MetricGraph& g, const PieceCover& cover);
Verdict check_transverse_free(const MetricGraph& g, const PieceCover& cover, std::size_t cap = kDefaultCap);
Verdict check_unique_transverse_geodesic(const MetricGraph& g, const PieceCover& cover, std::size_t cap = kDefaultCap);

// T1, convexity of pieces, projection system and transverse-freeness.
Verdict verify(const MetricGraph& g, const PieceCover& cover, std::size_t cap = kDefaultCap);

}  // namespace tgraded::graph
