#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace depnet {

/// Undirected simple graph; immutable once built. Neighbor lists are kept
/// sorted ascending so that anything iterating them is order-reproducible.
class Graph {
public:
    /// Parses "u v" pairs, one per line; '#'-prefixed comment lines and blank
    /// lines are ignored. Duplicate edges collapse; self-loops are rejected.
    static Graph from_edge_list(std::string_view text);

    /// Hub-and-leaves star; the hub is node 0.
    static Graph star(int n);

    /// G(n, p): each unordered pair is an edge independently with probability p.
    static Graph erdos_renyi(int n, double p, std::uint64_t seed);

    /// Static-model power-law sampler: endpoint weights w_v proportional to
    /// (v+1)^(-1/(exponent-1)), m pair draws, self-loops and duplicate edges
    /// dropped. The achieved edge count is at most m.
    static Graph power_law(int n, long m, double exponent, std::uint64_t seed);

    /// d-regular graph via stub pairing with restart on collisions.
    static Graph random_regular(int n, int d, std::uint64_t seed);

    int node_count() const { return n_; }
    long edge_count() const { return edges_; }
    int degree(int v) const { return static_cast<int>(nbr_[static_cast<std::size_t>(v)].size()); }
    std::span<const int> neighbors(int v) const { return nbr_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& degrees() const { return deg_; }
    int max_degree() const;
    double mean_degree() const;
    bool is_star() const;
    /// Common degree if every node has the same degree, otherwise -1.
    int regular_degree() const;

    /// Sorted unique "u v" pairs with u < v, one per line.
    std::string to_edge_list() const;

private:
    explicit Graph(int n);
    void add_edge(int u, int v);
    void finalize();

    int n_ = 0;
    long edges_ = 0;
    std::vector<std::vector<int>> nbr_;
    std::vector<int> deg_;
};

struct SpectralOptions {
    double tol = 1e-10;      // on successive Rayleigh quotients
    long max_iter = 100000;
};

struct SpectralResult {
    double value = 0.0;
    bool converged = true;
    long iterations = 0;
};

/// Largest adjacency eigenvalue by shifted power iteration (A + I with an
/// all-ones start; the shift prevents oscillation on bipartite spectra).
/// Returns 0 for edgeless graphs. On non-convergence the last estimate is
/// returned with converged = false.
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opt = {});

/// Spectral radius of D + scale*A for a nonnegative diagonal D; D may be
/// empty, meaning zero. Same shifted power iteration as spectral_radius.
SpectralResult spectral_radius_shifted_matrix(const Graph& g, std::span<const double> diag,
                                              double edge_scale, const SpectralOptions& opt = {});

}  // namespace depnet
