#include "depnet/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <set>
#include <span>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "depnet/bounds.hpp"
#include "depnet/quasirandom.hpp"
#include "depnet/thresholds.hpp"

namespace depnet {

int experiment_threads() {
    if (const char* env = std::getenv("DEPNET_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(std::min(v, 256L));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Runs fn(0..count-1) on up to experiment_threads() workers. Results must be
// written to preallocated slots so ordering is scheduling-independent.
void parallel_for(int count, const std::function<void(int)>& fn) {
    const int workers = std::min(experiment_threads(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

double spec_param_or_nan(const CopulaSpec& s) {
    return s.param ? *s.param : std::numeric_limits<double>::quiet_NaN();
}

void append_number(std::string& out, double v, int digits) {
    char buf[48];
    if (std::isnan(v)) return;  // parameterless: empty field
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    out += buf;
}

}  // namespace

SweepResult dependence_sweep(int n, const EpidemicParams& p,
                             const std::vector<CopulaSpec>& outers,
                             const std::vector<CopulaSpec>& nodes, double tol, long max_iter) {
    if (n < 2) throw std::invalid_argument("dependence_sweep: need n >= 2");
    if (outers.empty() || nodes.empty())
        throw std::invalid_argument("dependence_sweep: empty copula grid");
    validate(p);

    SweepResult result;
    result.params = p;
    result.n = n;
    result.rows.resize(nodes.size() * outers.size());
    const Graph star = Graph::star(n);

    const int cells = static_cast<int>(result.rows.size());
    parallel_for(cells, [&](int cell) {
        const std::size_t ni = static_cast<std::size_t>(cell) / outers.size();
        const std::size_t oi = static_cast<std::size_t>(cell) % outers.size();
        const DependenceModel m{outers[oi], nodes[ni]};
        SweepRow row;
        row.node_param = spec_param_or_nan(nodes[ni]);
        row.outer_param = spec_param_or_nan(outers[oi]);
        const auto eq = solve_star(n, p, m, tol, max_iter);
        row.i_h = eq.i_hub;
        row.i_l = eq.i_leaf;
        row.converged = eq.converged;
        if (p.gamma > 0.0) {
            std::vector<double> i_star(static_cast<std::size_t>(n), eq.i_leaf);
            i_star[0] = eq.i_hub;
            row.tau = tau(star, p, i_star).tau;
        } else {
            row.tau = std::numeric_limits<double>::infinity();
        }
        result.rows[static_cast<std::size_t>(cell)] = row;
    });
    return result;
}

std::string sweep_csv(const SweepResult& r, int digits) {
    std::string out = "node_param,outer_param,i_h,i_l,tau\n";
    for (const auto& row : r.rows) {
        append_number(out, row.node_param, digits);
        out += ',';
        append_number(out, row.outer_param, digits);
        out += ',';
        append_number(out, row.i_h, digits);
        out += ',';
        append_number(out, row.i_l, digits);
        out += ',';
        append_number(out, row.tau, digits);
        out += '\n';
    }
    return out;
}

Condition18 condition18(const Graph& g, const EpidemicParams& p, const DependenceModel& m) {
    validate(p);
    validate_for_graph(m, g);
    Condition18 c;
    c.mu = std::max(1.0 - p.beta, std::min(p.alpha + p.gamma * g.max_degree(), 1.0));
    double min_value = std::numeric_limits<double>::infinity();
    const std::set<int> degrees(g.degrees().begin(), g.degrees().end());
    for (int d : degrees)
        min_value = std::min(min_value,
                             attack_survival_diag(m, 1.0 - p.gamma * c.mu, d, p.alpha));
    if (g.node_count() == 0) min_value = 1.0;
    c.min_value = min_value;
    c.holds = min_value >= p.beta;
    return c;
}

namespace {

double composed_value(const DependenceModel& m, std::span<const double> args, double u0) {
    double inner;
    if (args.empty())
        inner = 1.0;
    else if (args.size() == 1)
        inner = args[0];
    else
        inner = eval(m.node, args);
    const double outer_args[2] = {inner, u0};
    return eval(m.outer, outer_args);
}

}  // namespace

bool condition16_sampled(const Graph& g, const DependenceModel& m, const DependenceModel& m2,
                         int grid_points, int budget) {
    if (grid_points < 2) throw std::invalid_argument("condition16_sampled: need >= 2 grid points");
    if (budget < 1) throw std::invalid_argument("condition16_sampled: need budget >= 1");
    validate_for_graph(m, g);
    validate_for_graph(m2, g);

    const std::set<int> degrees(g.degrees().begin(), g.degrees().end());
    std::vector<double> point;
    for (int d : degrees) {
        if (d == 0) continue;  // both sides reduce to u0
        const int dim = d + 1;
        double tol = 1e-9;
        if (d > 2 && (m.node.family == CopulaFamily::gaussian ||
                      m2.node.family == CopulaFamily::gaussian))
            tol = 1e-6;
        point.assign(static_cast<std::size_t>(dim), 0.0);

        double grid_total = 1.0;
        for (int j = 0; j < dim && grid_total <= budget; ++j) grid_total *= grid_points;
        if (grid_total <= budget) {
            std::vector<int> idx(static_cast<std::size_t>(dim), 0);
            for (;;) {
                for (int j = 0; j < dim; ++j)
                    point[static_cast<std::size_t>(j)] =
                        static_cast<double>(idx[static_cast<std::size_t>(j)]) / (grid_points - 1);
                const std::span<const double> args(point.data(), static_cast<std::size_t>(d));
                if (composed_value(m, args, point[static_cast<std::size_t>(d)]) >
                    composed_value(m2, args, point[static_cast<std::size_t>(d)]) + tol)
                    return false;
                int j = 0;
                while (j < dim && ++idx[static_cast<std::size_t>(j)] == grid_points) {
                    idx[static_cast<std::size_t>(j)] = 0;
                    ++j;
                }
                if (j == dim) break;
            }
        } else {
            for (int s = 1; s <= budget; ++s) {
                halton_point(static_cast<std::uint64_t>(s), point);
                const std::span<const double> args(point.data(), static_cast<std::size_t>(d));
                if (composed_value(m, args, point[static_cast<std::size_t>(d)]) >
                    composed_value(m2, args, point[static_cast<std::size_t>(d)]) + tol)
                    return false;
            }
        }
    }
    return true;
}

DominanceReport dominance_check(const Graph& g, const EpidemicParams& p,
                                const DependenceModel& m, const DependenceModel& m2,
                                const StateVector& i0, long horizon, int grid_points) {
    DominanceReport report;
    report.cond16_sampled = condition16_sampled(g, m, m2, grid_points);
    report.cond18 = condition18(g, p, m).holds;

    StateVector a = i0, b = i0;
    report.dominated = true;
    for (long t = 1; t <= horizon; ++t) {
        a = step(a, g, p, m);
        b = step(b, g, p, m2);
        for (int v = 0; v < g.node_count(); ++v) {
            if (a.i[static_cast<std::size_t>(v)] < b.i[static_cast<std::size_t>(v)] - 1e-12) {
                report.dominated = false;
                report.first_violation = {t, v};
                return report;
            }
        }
    }
    return report;
}

LinearFit4 least_squares4(const std::array<std::vector<double>, 4>& cols,
                          const std::vector<double>& y) {
    const std::size_t rows = y.size();
    if (rows == 0 || cols[0].size() != rows || cols[1].size() != rows ||
        cols[2].size() != rows || cols[3].size() != rows)
        throw std::invalid_argument("least_squares4: column/response length mismatch");
    LinearFit4 fit;
    std::array<std::vector<double>, 4> q;
    std::array<std::array<double, 4>, 4> r{};
    std::array<double, 4> scale{};
    for (int j = 0; j < 4; ++j) {
        q[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j)];
        double norm0 = 0.0;
        for (double v : q[static_cast<std::size_t>(j)]) norm0 += v * v;
        scale[static_cast<std::size_t>(j)] = std::sqrt(norm0);
    }
    for (int j = 0; j < 4; ++j) {
        auto& cj = q[static_cast<std::size_t>(j)];
        for (int i = 0; i < j; ++i) {
            if (fit.dropped[static_cast<std::size_t>(i)]) continue;
            const auto& qi = q[static_cast<std::size_t>(i)];
            double dot = 0.0;
            for (std::size_t k = 0; k < rows; ++k) dot += qi[k] * cj[k];
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = dot;
            for (std::size_t k = 0; k < rows; ++k) cj[k] -= dot * qi[k];
        }
        double norm2 = 0.0;
        for (double v : cj) norm2 += v * v;
        const double norm = std::sqrt(norm2);
        if (norm <= 1e-10 * std::max(scale[static_cast<std::size_t>(j)], 1.0)) {
            fit.dropped[static_cast<std::size_t>(j)] = true;
            continue;
        }
        r[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = norm;
        for (std::size_t k = 0; k < rows; ++k) cj[k] /= norm;
    }
    std::array<double, 4> qty{};
    for (int j = 0; j < 4; ++j) {
        if (fit.dropped[static_cast<std::size_t>(j)]) continue;
        double dot = 0.0;
        for (std::size_t k = 0; k < rows; ++k) dot += q[static_cast<std::size_t>(j)][k] * y[k];
        qty[static_cast<std::size_t>(j)] = dot;
    }
    for (int j = 3; j >= 0; --j) {
        if (fit.dropped[static_cast<std::size_t>(j)]) {
            fit.coef[static_cast<std::size_t>(j)] = 0.0;
            continue;
        }
        double acc = qty[static_cast<std::size_t>(j)];
        for (int i = j + 1; i < 4; ++i)
            acc -= r[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                   fit.coef[static_cast<std::size_t>(i)];
        fit.coef[static_cast<std::size_t>(j)] =
            acc / r[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
    }
    return fit;
}

ApproxModel fit_approximation(const Graph& g, const std::vector<EpidemicParams>& grid,
                              const DependenceModel& m, double tol, long max_iter) {
    if (grid.empty()) throw std::invalid_argument("fit_approximation: empty parameter grid");
    validate_for_graph(m, g);
    const int n = g.node_count();

    struct TripleData {
        bool kept = false;
        std::vector<double> i_star;
        double lower = 0.0;
        std::vector<double> upper;
    };
    std::vector<TripleData> data(grid.size());

    parallel_for(static_cast<int>(grid.size()), [&](int t) {
        const auto& p = grid[static_cast<std::size_t>(t)];
        auto& slot = data[static_cast<std::size_t>(t)];
        SolveOptions opt;
        opt.tol = tol;
        opt.max_iter = max_iter;
        const auto eq = solve_equilibrium(g, p, m, opt);
        if (!eq.converged) return;
        // Post-solve spectral condition: keep the triple only when rho(A)
        // clears the tau budget computed from the solved equilibrium.
        if (p.gamma > 0.0) {
            const auto t8 = tau(g, p, eq.i_star);
            if (!t8.cond8_holds) return;
        }
        const auto b = general_bounds(g, p);
        slot.kept = true;
        slot.i_star = eq.i_star;
        slot.lower = b.lower;
        slot.upper = b.upper;
    });

    ApproxModel model;
    model.triples_total = static_cast<int>(grid.size());
    std::array<std::vector<double>, 4> cols;
    std::vector<double> y;
    for (const auto& slot : data) {
        if (!slot.kept) continue;
        ++model.triples_used;
        for (int v = 0; v < n; ++v) {
            cols[0].push_back(1.0);
            cols[1].push_back(slot.lower);
            cols[2].push_back(slot.upper[static_cast<std::size_t>(v)]);
            cols[3].push_back(static_cast<double>(g.degree(v)));
            y.push_back(slot.i_star[static_cast<std::size_t>(v)]);
        }
    }
    if (y.size() < 4)
        throw std::runtime_error(
            "fit_approximation: fewer than 4 samples survive the spectral-condition filter");

    const auto fit = least_squares4(cols, y);
    model.k0 = fit.coef[0];
    model.k1 = fit.coef[1];
    model.k2 = fit.coef[2];
    model.k3 = fit.coef[3];
    model.dropped = fit.dropped;
    model.degenerate = fit.dropped[0] || fit.dropped[1] || fit.dropped[2] || fit.dropped[3];

    model.mean_i_star.assign(static_cast<std::size_t>(n), 0.0);
    model.mean_lower.assign(static_cast<std::size_t>(n), 0.0);
    model.mean_upper.assign(static_cast<std::size_t>(n), 0.0);
    model.mean_i_tilde.assign(static_cast<std::size_t>(n), 0.0);
    model.mean_i_hat.assign(static_cast<std::size_t>(n), 0.0);

    double err_sum = 0.0, upper_sum = 0.0, lower_sum = 0.0;
    for (const auto& slot : data) {
        if (!slot.kept) continue;
        for (int v = 0; v < n; ++v) {
            const std::size_t vi = static_cast<std::size_t>(v);
            const double upper_v = slot.upper[vi];
            const double i_tilde = model.k0 + model.k1 * slot.lower + model.k2 * upper_v +
                                   model.k3 * g.degree(v);
            const double i_hat = 0.5 * (i_tilde + upper_v);
            err_sum += i_hat - slot.i_star[vi];
            upper_sum += upper_v - slot.i_star[vi];
            lower_sum += slot.lower - slot.i_star[vi];
            model.mean_i_star[vi] += slot.i_star[vi];
            model.mean_lower[vi] += slot.lower;
            model.mean_upper[vi] += upper_v;
            model.mean_i_tilde[vi] += i_tilde;
            model.mean_i_hat[vi] += i_hat;
        }
    }
    const double inv = 1.0 / model.triples_used;
    model.err_g = err_sum * inv;
    model.upper_error = upper_sum * inv;
    model.lower_error = lower_sum * inv;
    for (int v = 0; v < n; ++v) {
        const std::size_t vi = static_cast<std::size_t>(v);
        model.mean_i_star[vi] *= inv;
        model.mean_lower[vi] *= inv;
        model.mean_upper[vi] *= inv;
        model.mean_i_tilde[vi] *= inv;
        model.mean_i_hat[vi] *= inv;
    }
    return model;
}

std::string approx_csv(const Graph& g, const ApproxModel& model, int digits) {
    std::string out = "node,degree,i_star,lower,upper,i_tilde,i_hat\n";
    char buf[224];
    for (int v = 0; v < g.node_count(); ++v) {
        const std::size_t vi = static_cast<std::size_t>(v);
        std::snprintf(buf, sizeof buf, "%d,%d,%.*g,%.*g,%.*g,%.*g,%.*g\n", v, g.degree(v), digits,
                      model.mean_i_star[vi], digits, model.mean_lower[vi], digits,
                      model.mean_upper[vi], digits, model.mean_i_tilde[vi], digits,
                      model.mean_i_hat[vi]);
        out += buf;
    }
    return out;
}

std::string approx_model_json(const ApproxModel& model) {
    nlohmann::json j;
    j["k0"] = model.k0;
    j["k1"] = model.k1;
    j["k2"] = model.k2;
    j["k3"] = model.k3;
    j["err_G"] = model.err_g;
    return j.dump(2) + "\n";
}

}  // namespace depnet
