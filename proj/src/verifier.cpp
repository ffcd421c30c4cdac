#include "tgraded/verifier.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "tgraded/errors.hpp"

namespace tgraded::graph {

MetricGraph::MetricGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adj_(n * n), nbrs_(n), dist_(n * n) {
    if (n_ == 0) throw std::invalid_argument("graph needs at least one vertex");
    for (const Edge& e : edges_) {
        if (e.a >= n_ || e.b >= n_) throw std::invalid_argument("edge endpoint out of range");
        if (e.a == e.b) throw std::invalid_argument("self loops are not allowed");
        if (e.weight.sign() <= 0) throw std::invalid_argument("edge weights must be positive");
        for (auto [x, y] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
            auto& w = adj_[x * n_ + y];
            if (!w) nbrs_[x].push_back(y);
            if (!w || e.weight < *w) w = e.weight;
        }
    }
    for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());

    // Floyd-Warshall over exact rationals.
    std::vector<bool> reach(n_ * n_, false);
    for (Vertex u = 0; u < n_; ++u) {
        reach[u * n_ + u] = true;
        dist_[u * n_ + u] = Scalar(0);
        for (Vertex v : nbrs_[u]) {
            reach[u * n_ + v] = true;
            dist_[u * n_ + v] = *adj_[u * n_ + v];
        }
    }
    for (Vertex k = 0; k < n_; ++k) {
        for (Vertex i = 0; i < n_; ++i) {
            if (!reach[i * n_ + k]) continue;
            for (Vertex j = 0; j < n_; ++j) {
                if (!reach[k * n_ + j]) continue;
                Scalar via = dist_[i * n_ + k] + dist_[k * n_ + j];
                if (!reach[i * n_ + j] || via < dist_[i * n_ + j]) {
                    reach[i * n_ + j] = true;
                    dist_[i * n_ + j] = std::move(via);
                }
            }
        }
    }
    if (!std::all_of(reach.begin(), reach.end(), [](bool r) { return r; })) {
        throw std::invalid_argument("graph is not connected");
    }
}

PieceCover::PieceCover(const MetricGraph& g, std::vector<std::vector<Vertex>> pieces) : pieces_(std::move(pieces)) {
    std::vector<bool> covered(g.size(), false);
    for (auto& piece : pieces_) {
        if (piece.empty()) throw std::invalid_argument("pieces must be nonempty");
        std::sort(piece.begin(), piece.end());
        piece.erase(std::unique(piece.begin(), piece.end()), piece.end());
        std::vector<bool> in(g.size(), false);
        for (Vertex v : piece) {
            if (v >= g.size()) throw std::invalid_argument("piece vertex out of range");
            in[v] = true;
            covered[v] = true;
        }
        in_.push_back(std::move(in));
    }
    for (Vertex v = 0; v < g.size(); ++v) {
        if (!covered[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " lies in no piece");
    }
}

void Verdict::merge(Verdict other) {
    accepted = accepted && other.accepted;
    for (auto& v : other.violations) violations.push_back(std::move(v));
}

namespace {

void enumerate(const MetricGraph& g, Vertex u, Vertex v, Vertex at, Path& stack, std::vector<Path>& out,
               std::size_t cap) {
    if (at == v) {
        if (out.size() == cap) {
            throw CapExceeded("more than " + std::to_string(cap) + " geodesics between " + std::to_string(u) +
                              " and " + std::to_string(v));
        }
        out.push_back(stack);
        return;
    }
    for (Vertex next : g.neighbours(at)) {
        // Edge lies on some shortest u-v path.
        if (g.d(u, at) + *g.weight(at, next) + g.d(next, v) != g.d(u, v)) continue;
        stack.push_back(next);
        enumerate(g, u, v, next, stack, out, cap);
        stack.pop_back();
    }
}

Verdict fail(GraphViolation v) { return Verdict{false, {std::move(v)}}; }

// Geodesics for every unordered pair a <= b.
std::map<std::pair<Vertex, Vertex>, std::vector<Path>> geodesic_table(const MetricGraph& g, std::size_t cap) {
    std::map<std::pair<Vertex, Vertex>, std::vector<Path>> table;
    for (Vertex a = 0; a < g.size(); ++a) {
        for (Vertex b = a; b < g.size(); ++b) table.emplace(std::pair{a, b}, all_geodesics(g, a, b, cap));
    }
    return table;
}

Vertex branch_point(const Path& p, const Path& q) {
    std::size_t k = 0;
    while (k + 1 < p.size() && k + 1 < q.size() && p[k + 1] == q[k + 1]) ++k;
    return p[k];
}

Path reversed(Path p) {
    std::reverse(p.begin(), p.end());
    return p;
}

}  // namespace

std::vector<Path> all_geodesics(const MetricGraph& g, Vertex u, Vertex v, std::size_t cap) {
    if (cap == 0) throw std::invalid_argument("geodesic cap must be positive");
    if (u >= g.size() || v >= g.size()) throw std::invalid_argument("vertex out of range");
    std::vector<Path> out;
    Path stack{u};
    enumerate(g, u, v, u, stack, out, cap);
    return out;
}

bool is_transverse(const PieceCover& cover, const Path& path) {
    for (std::size_t p = 0; p < cover.pieces().size(); ++p) {
        std::size_t hits = 0;
        for (Vertex v : path) hits += cover.contains(p, v) ? 1 : 0;
        if (hits > 1) return false;
    }
    return true;
}

bool is_tripod(const Path& ab, const Path& bc, const Path& ac) {
    const Vertex at_a = branch_point(ab, ac);
    const Vertex at_b = branch_point(reversed(ab), bc);
    const Vertex at_c = branch_point(reversed(bc), reversed(ac));
    return at_a == at_b && at_b == at_c;
}

Verdict check_T1(const MetricGraph& /*g*/, const PieceCover& cover) {
    Verdict out;
    const auto& pieces = cover.pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            std::vector<Vertex> shared;
            std::set_intersection(pieces[i].begin(), pieces[i].end(), pieces[j].begin(), pieces[j].end(),
                                  std::back_inserter(shared));
            if (shared.size() >= 2) out.merge(fail({"T1", {i, j}, shared, {}}));
        }
    }
    return out;
}

Verdict check_convexity(const MetricGraph& g, const PieceCover& cover, std::size_t cap) {
    Verdict out;
    const auto& pieces = cover.pieces();
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        for (std::size_t i = 0; i < pieces[p].size(); ++i) {
            for (std::size_t j = i + 1; j < pieces[p].size(); ++j) {
                for (const Path& path : all_geodesics(g, pieces[p][i], pieces[p][j], cap)) {
                    const bool inside =
                        std::all_of(path.begin(), path.end(), [&](Vertex v) { return cover.contains(p, v); });
                    if (!inside) {
                        out.merge(fail({"convex", {p}, {pieces[p][i], pieces[p][j]}, {path}}));
                        break;
                    }
                }
            }
        }
    }
    return out;
}

Verdict check_projection_system(const MetricGraph& g, const PieceCover& cover) {
    Verdict out;
    const auto& pieces = cover.pieces();
    const std::size_t n = g.size();
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        std::vector<Vertex> proj(n);
        bool unique = true;
        for (Vertex x = 0; x < n; ++x) {
            std::vector<Vertex> nearest;
            for (Vertex y : pieces[p]) {
                if (nearest.empty() || g.d(x, y) < g.d(x, nearest.front())) {
                    nearest = {y};
                } else if (g.d(x, y) == g.d(x, nearest.front())) {
                    nearest.push_back(y);
                }
            }
            if (nearest.size() > 1) {
                unique = false;
                out.merge(fail({"projection-unique", {p}, {x, nearest[0], nearest[1]}, {}}));
                continue;
            }
            proj[x] = nearest.front();
            if (cover.contains(p, x) && proj[x] != x) out.merge(fail({"P'1", {p}, {x, proj[x]}, {}}));
        }
        if (!unique) continue;
        for (Vertex z1 = 0; z1 < n; ++z1) {
            for (Vertex z2 = z1 + 1; z2 < n; ++z2) {
                if (proj[z1] == proj[z2]) continue;
                const Scalar legs = g.d(z1, proj[z1]) + g.d(proj[z1], proj[z2]) + g.d(proj[z2], z2);
                if (g.d(z1, z2) != legs) out.merge(fail({"P'2", {p}, {z1, z2, proj[z1], proj[z2]}, {}}));
            }
        }
        for (std::size_t q = 0; q < pieces.size(); ++q) {
            if (q == p) continue;
            std::vector<Vertex> image;
            for (Vertex y : pieces[q]) image.push_back(proj[y]);
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (image.size() > 1) out.merge(fail({"P3", {p, q}, image, {}}));
        }
    }
    return out;
}

Verdict check_transverse_free(const MetricGraph& g, const PieceCover& cover, std::size_t cap) {
    Verdict out;
    const auto table = geodesic_table(g, cap);
    std::map<std::pair<Vertex, Vertex>, std::vector<const Path*>> transverse;
    for (const auto& [key, paths] : table) {
        for (const Path& path : paths) {
            if (is_transverse(cover, path)) transverse[key].push_back(&path);
        }
    }
    const std::size_t n = g.size();
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            auto ab = transverse.find({a, b});
            if (ab == transverse.end()) continue;
            for (Vertex c = b + 1; c < n; ++c) {
                auto bc = transverse.find({b, c});
                auto ac = transverse.find({a, c});
                if (bc == transverse.end() || ac == transverse.end()) continue;
                for (const Path* x : ab->second) {
                    for (const Path* y : bc->second) {
                        for (const Path* z : ac->second) {
                            if (!is_tripod(*x, *y, *z)) out.merge(fail({"transverse-tripod", {}, {a, b, c}, {*x, *y, *z}}));
                        }
                    }
                }
            }
        }
    }
    return out;
}

Verdict check_unique_transverse_geodesic(const MetricGraph& g, const PieceCover& cover, std::size_t cap) {
    Verdict out;
    for (Vertex a = 0; a < g.size(); ++a) {
        for (Vertex b = a + 1; b < g.size(); ++b) {
            const auto paths = all_geodesics(g, a, b, cap);
            const bool has_transverse =
                std::any_of(paths.begin(), paths.end(), [&](const Path& p) { return is_transverse(cover, p); });
            if (has_transverse && paths.size() > 1) {
                out.merge(fail({"unique-transverse", {}, {a, b}, {paths[0], paths[1]}}));
            }
        }
    }
    return out;
}

Verdict verify(const MetricGraph& g, const PieceCover& cover, std::size_t cap) {
    Verdict out = check_T1(g, cover);
    out.merge(check_convexity(g, cover, cap));
    out.merge(check_projection_system(g, cover));
    out.merge(check_transverse_free(g, cover, cap));
    return out;
}

}  // namespace tgraded::graph
