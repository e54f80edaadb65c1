#include "depnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "depnet/rng.hpp"

namespace depnet {

Graph::Graph(int n) : n_(n), nbr_(static_cast<std::size_t>(n)), deg_(static_cast<std::size_t>(n), 0) {}

void Graph::add_edge(int u, int v) {
    nbr_[static_cast<std::size_t>(u)].push_back(v);
    nbr_[static_cast<std::size_t>(v)].push_back(u);
}

void Graph::finalize() {
    edges_ = 0;
    for (int v = 0; v < n_; ++v) {
        auto& list = nbr_[static_cast<std::size_t>(v)];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        deg_[static_cast<std::size_t>(v)] = static_cast<int>(list.size());
        edges_ += static_cast<long>(list.size());
    }
    edges_ /= 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v : deg_) d = std::max(d, v);
    return d;
}

double Graph::mean_degree() const {
    if (n_ == 0) return 0.0;
    return 2.0 * static_cast<double>(edges_) / static_cast<double>(n_);
}

bool Graph::is_star() const {
    if (n_ < 2) return false;
    int hubs = 0;
    for (int v = 0; v < n_; ++v) {
        if (degree(v) == n_ - 1)
            ++hubs;
        else if (degree(v) != 1)
            return false;
    }
    return hubs == 1 || (n_ == 2 && edges_ == 1);
}

int Graph::regular_degree() const {
    if (n_ == 0) return -1;
    const int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return -1;
    return d;
}

Graph Graph::from_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        if (line[first] == '#') continue;

        std::istringstream iss{std::string(line)};
        long u, v;
        std::string extra;
        if (!(iss >> u >> v) || (iss >> extra))
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": expected \"u v\"");
        if (u < 0 || v < 0)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": negative node id");
        if (u == v)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    if (edges.empty()) throw std::invalid_argument("edge list: empty document");

    Graph g(max_id + 1);
    for (auto [u, v] : edges) g.add_edge(u, v);
    g.finalize();
    return g;
}

Graph Graph::star(int n) {
    if (n < 2) throw std::invalid_argument("star: need n >= 2");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    g.finalize();
    return g;
}

Graph Graph::erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("erdos_renyi: need n >= 1");
    if (std::isnan(p) || p < 0.0 || p > 1.0)
        throw std::invalid_argument("erdos_renyi: p outside [0, 1]");
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) g.add_edge(u, v);
    g.finalize();
    return g;
}

Graph Graph::power_law(int n, long m, double exponent, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("power_law: need n >= 2");
    if (m < 1) throw std::invalid_argument("power_law: need m >= 1");
    if (!(exponent > 2.0)) throw std::invalid_argument("power_law: exponent must exceed 2");
    const long max_edges = static_cast<long>(n) * (n - 1) / 2;
    if (m > max_edges) throw std::invalid_argument("power_law: m exceeds n(n-1)/2");

    std::vector<double> cum(static_cast<std::size_t>(n));
    double total = 0.0;
    const double w_exp = -1.0 / (exponent - 1.0);
    for (int v = 0; v < n; ++v) {
        total += std::pow(static_cast<double>(v + 1), w_exp);
        cum[static_cast<std::size_t>(v)] = total;
    }

    Rng rng(seed);
    auto draw = [&]() {
        const double r = rng.uniform() * total;
        const auto it = std::lower_bound(cum.begin(), cum.end(), r);
        return static_cast<int>(it - cum.begin());
    };

    std::unordered_set<std::uint64_t> seen;
    Graph g(n);
    for (long e = 0; e < m; ++e) {
        const int a = draw();
        const int b = draw();
        if (a == b) continue;
        const std::uint64_t key = static_cast<std::uint64_t>(std::min(a, b)) *
                                      static_cast<std::uint64_t>(n) +
                                  static_cast<std::uint64_t>(std::max(a, b));
        if (!seen.insert(key).second) continue;
        g.add_edge(a, b);
    }
    g.finalize();
    return g;
}

Graph Graph::random_regular(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0 || d >= n)
        throw std::invalid_argument("random_regular: need 0 <= d < n");
    if ((static_cast<long>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular: n*d must be even");
    if (d == 0) {
        Graph g(n);
        g.finalize();
        return g;
    }

    Rng rng(seed);
    const int total_stubs = n * d;
    std::vector<int> stubs(static_cast<std::size_t>(total_stubs));
    // Steger-Wormald style pairing: draw stub pairs, reject self-loops and
    // duplicates, restart from scratch when stuck.
    for (int attempt = 0; attempt < 200; ++attempt) {
        int idx = 0;
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < d; ++j) stubs[static_cast<std::size_t>(idx++)] = v;
        int remaining = total_stubs;
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::pair<int, int>> edges;
        edges.reserve(static_cast<std::size_t>(total_stubs / 2));
        bool stuck = false;
        while (remaining > 0 && !stuck) {
            bool placed = false;
            for (long tries = 0; tries < 100L * remaining; ++tries) {
                const auto i = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(remaining)));
                auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(remaining)));
                if (i == j) continue;
                const int u = stubs[i], v = stubs[j];
                if (u == v) continue;
                const std::uint64_t key = static_cast<std::uint64_t>(std::min(u, v)) *
                                              static_cast<std::uint64_t>(n) +
                                          static_cast<std::uint64_t>(std::max(u, v));
                if (seen.contains(key)) continue;
                seen.insert(key);
                edges.emplace_back(u, v);
                const auto hi = std::max(i, j), lo = std::min(i, j);
                stubs[hi] = stubs[static_cast<std::size_t>(remaining - 1)];
                stubs[lo] = stubs[static_cast<std::size_t>(remaining - 2)];
                remaining -= 2;
                placed = true;
                break;
            }
            if (!placed) stuck = true;
        }
        if (!stuck) {
            Graph g(n);
            for (auto [u, v] : edges) g.add_edge(u, v);
            g.finalize();
            return g;
        }
    }
    throw std::runtime_error("random_regular: failed to realize a simple d-regular graph");
}

std::string Graph::to_edge_list() const {
    std::string out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) {
                out += std::to_string(u);
                out += ' ';
                out += std::to_string(v);
                out += '\n';
            }
    return out;
}

namespace {

SpectralResult power_iterate(int n, std::span<const double> diag, const Graph& g,
                             double edge_scale, const SpectralOptions& opt) {
    SpectralResult res;
    if (n == 0) return res;
    if (g.edge_count() == 0 && diag.empty()) return res;  // exact zero, no rounding
    std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(static_cast<std::size_t>(n));
    double lambda_prev = 0.0;
    for (long it = 1; it <= opt.max_iter; ++it) {
        // y = (M + I) x with M = diag + edge_scale * A
        for (int v = 0; v < n; ++v) {
            double acc = x[static_cast<std::size_t>(v)];
            if (!diag.empty()) acc += diag[static_cast<std::size_t>(v)] * x[static_cast<std::size_t>(v)];
            double nb = 0.0;
            for (int u : g.neighbors(v)) nb += x[static_cast<std::size_t>(u)];
            acc += edge_scale * nb;
            y[static_cast<std::size_t>(v)] = acc;
        }
        double lambda = 0.0, norm2 = 0.0;
        for (int v = 0; v < n; ++v) {
            lambda += x[static_cast<std::size_t>(v)] * y[static_cast<std::size_t>(v)];
            norm2 += y[static_cast<std::size_t>(v)] * y[static_cast<std::size_t>(v)];
        }
        res.iterations = it;
        res.value = std::max(lambda - 1.0, 0.0);
        if (it > 1 && std::fabs(lambda - lambda_prev) < opt.tol) {
            res.converged = true;
            return res;
        }
        lambda_prev = lambda;
        const double inv = 1.0 / std::sqrt(norm2);
        for (int v = 0; v < n; ++v) x[static_cast<std::size_t>(v)] = y[static_cast<std::size_t>(v)] * inv;
    }
    res.converged = false;
    return res;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opt) {
    return power_iterate(g.node_count(), {}, g, 1.0, opt);
}

SpectralResult spectral_radius_shifted_matrix(const Graph& g, std::span<const double> diag,
                                              double edge_scale, const SpectralOptions& opt) {
    if (!diag.empty() && static_cast<int>(diag.size()) != g.node_count())
        throw std::invalid_argument("spectral_radius_shifted_matrix: diagonal length mismatch");
    return power_iterate(g.node_count(), diag, g, edge_scale, opt);
}

}  // namespace depnet
