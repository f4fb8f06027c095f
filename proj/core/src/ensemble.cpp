#include "resnet/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "resnet/errors.hpp"

namespace resnet {

Ensemble::Ensemble(std::vector<std::string> node_ids, std::vector<double> xi,
                   std::vector<double> omega, std::int64_t m)
    : node_ids_(std::move(node_ids)),
      xi_(std::move(xi)),
      omega_(std::move(omega)),
      m_(m) {
    const std::size_t nn = node_ids_.size();
    if (xi_.size() != nn * nn || omega_.size() != nn * nn) {
        throw InputError("ensemble matrix sizes do not match node count");
    }
    for (std::size_t k = 0; k < xi_.size(); ++k) {
        if (xi_[k] < 0) {
            throw InputError("combinatorial matrix entries must be >= 0");
        }
        if (xi_[k] > 0 && !(omega_[k] > 0)) {
            throw InputError("propensities must be positive on supported dyads");
        }
    }
    if (m_ < 0) {
        throw InputError("edge budget must be >= 0");
    }
    refresh_totals();
}

void Ensemble::refresh_totals() {
    total_xi_ = 0.0;
    total_xi_omega_ = 0.0;
    uniform_ = true;
    double ref = -1.0;
    for (std::size_t k = 0; k < xi_.size(); ++k) {
        if (xi_[k] <= 0) {
            continue;
        }
        total_xi_ += xi_[k];
        total_xi_omega_ += xi_[k] * omega_[k];
        if (ref < 0) {
            ref = omega_[k];
        } else if (std::abs(omega_[k] - ref) > 1e-12 * std::max(1.0, ref)) {
            uniform_ = false;
        }
    }
}

Ensemble Ensemble::from_network(const MultiEdgeNetwork& net,
                                bool allow_self_loops) {
    if (net.m() < 1) {
        throw InputError("cannot build an ensemble from an edgeless network");
    }
    const std::size_t n = net.n();
    std::vector<double> xi(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j && !allow_self_loops) {
                continue;
            }
            xi[i * n + j] = static_cast<double>(net.out_degree(i)) *
                            static_cast<double>(net.in_degree(j));
        }
    }
    std::vector<double> omega(n * n, 1.0);
    return Ensemble(net.node_ids(), std::move(xi), std::move(omega), net.m());
}

bool Ensemble::omega_uniform() const { return uniform_; }

void Ensemble::set_omega(std::vector<double> omega) {
    if (omega.size() != xi_.size()) {
        throw InputError("propensity matrix size mismatch");
    }
    for (std::size_t k = 0; k < xi_.size(); ++k) {
        if (xi_[k] > 0 && !(omega[k] > 0)) {
            throw InputError("propensities must be positive on supported dyads");
        }
    }
    omega_ = std::move(omega);
    refresh_totals();
}

DyadMarginal Ensemble::dyad_marginal(std::size_t i, std::size_t j) const {
    const std::size_t nn = n();
    const double k_here = xi_[i * nn + j];
    if (!(k_here > 0)) {
        throw InputError("unsupported dyad: Xi_ij = 0");
    }
    const double rest_xi = total_xi_ - k_here;
    const double rest_xi_omega =
        total_xi_omega_ - k_here * omega_[i * nn + j];
    double odds = 1.0;
    if (!uniform_ && rest_xi > 0) {
        // odds of this dyad relative to the Xi-weighted mean propensity of
        // everything else
        odds = omega_[i * nn + j] / (rest_xi_omega / rest_xi);
    }
    const auto M = static_cast<std::int64_t>(std::llround(total_xi_));
    const auto K = static_cast<std::int64_t>(std::llround(k_here));
    return DyadMarginal(M, K, std::min(m_, M), odds);
}

double Ensemble::dyad_cdf(std::size_t i, std::size_t j, std::int64_t x) const {
    return dyad_marginal(i, j).cdf(x);
}

std::vector<double> Ensemble::dyad_probabilities() const {
    std::vector<double> p(xi_.size(), 0.0);
    double total = 0.0;
    for (std::size_t k = 0; k < xi_.size(); ++k) {
        if (xi_[k] > 0) {
            p[k] = xi_[k] * omega_[k];
            total += p[k];
        }
    }
    if (total <= 0) {
        throw ComputeError("ensemble has no supported dyads");
    }
    for (auto& v : p) {
        v /= total;
    }
    return p;
}

MultiEdgeNetwork Ensemble::sample(std::uint64_t seed) const {
    const std::size_t nn = n();
    std::vector<std::int64_t> counts(nn * nn, 0);
    if (m_ > 0) {
        const auto p = dyad_probabilities();
        std::vector<double> cum(p.size());
        std::partial_sum(p.begin(), p.end(), cum.begin());
        cum.back() = 1.0;
        Rng rng(seed);
        for (std::int64_t draw = 0; draw < m_; ++draw) {
            const double u = rng.uniform01();
            const auto it = std::upper_bound(cum.begin(), cum.end(), u);
            counts[static_cast<std::size_t>(it - cum.begin())] += 1;
        }
    }
    return MultiEdgeNetwork(node_ids_, std::move(counts), true);
}

std::vector<double> BlockPropensities::expand(std::size_t n) const {
    if (assignment.size() != n) {
        throw InputError("block assignment does not cover every node");
    }
    std::vector<double> omega_out(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            omega_out[i * n + j] = at(assignment[i], assignment[j]);
        }
    }
    return omega_out;
}

BlockPropensities fit_blocks(const MultiEdgeNetwork& net,
                             const std::vector<int>& assignment) {
    const std::size_t n = net.n();
    if (assignment.size() != n) {
        throw InputError("block assignment does not cover every node");
    }
    int max_block = -1;
    for (int b : assignment) {
        if (b < 0) {
            throw InputError("block indices must be >= 0");
        }
        max_block = std::max(max_block, b);
    }
    const auto K = static_cast<std::size_t>(max_block + 1);
    const Ensemble base = Ensemble::from_network(net);

    constexpr double kEps = 1e-9;
    std::vector<double> sum_a(K * K, 0.0);
    std::vector<double> sum_xi(K * K, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double xi = base.xi(i, j);
            if (xi <= 0) {
                continue;
            }
            const std::size_t cell = static_cast<std::size_t>(assignment[i]) * K +
                                     static_cast<std::size_t>(assignment[j]);
            sum_a[cell] += static_cast<double>(net.count(i, j));
            sum_xi[cell] += xi;
        }
    }

    BlockPropensities out;
    out.assignment = assignment;
    out.num_blocks = K;
    out.omega.assign(K * K, 1.0);
    double mean = 0.0;
    std::size_t supported = 0;
    for (std::size_t c = 0; c < K * K; ++c) {
        if (sum_xi[c] <= 0) {
            continue;  // no dyads in this block pair; stays neutral
        }
        out.omega[c] = std::max(sum_a[c], kEps) / sum_xi[c];
        mean += out.omega[c];
        ++supported;
    }
    if (supported == 0) {
        throw ComputeError("no supported block pairs");
    }
    mean /= static_cast<double>(supported);
    for (std::size_t c = 0; c < K * K; ++c) {
        if (sum_xi[c] > 0) {
            out.omega[c] /= mean;
        }
    }
    return out;
}

std::vector<double> LayerStack::omega() const {
    std::vector<double> out(n * n, 1.0);
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const double b = l < beta.size() ? beta[l] : 0.0;
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] *= std::pow(layers[l][k], b);
        }
    }
    return out;
}

namespace {

struct RegressionData {
    std::vector<double> log_xi;   // per supported dyad
    std::vector<double> a;        // observed counts
    std::vector<std::vector<double>> x;  // log-layer values per layer
    double m = 0.0;
};

// log-likelihood and gradient of the multinomial model
double loglik_grad(const RegressionData& d, const std::vector<double>& beta,
                   const std::vector<bool>& active, std::vector<double>& grad) {
    const std::size_t D = d.a.size();
    const std::size_t L = d.x.size();
    std::vector<double> eta(D, 0.0);
    double peak = -1e300;
    for (std::size_t k = 0; k < D; ++k) {
        double e = d.log_xi[k];
        for (std::size_t l = 0; l < L; ++l) {
            e += beta[l] * d.x[l][k];
        }
        eta[k] = e;
        peak = std::max(peak, e);
    }
    double z = 0.0;
    for (std::size_t k = 0; k < D; ++k) {
        z += std::exp(eta[k] - peak);
    }
    const double log_z = peak + std::log(z);

    double ll = 0.0;
    for (std::size_t k = 0; k < D; ++k) {
        if (d.a[k] > 0) {
            ll += d.a[k] * (eta[k] - log_z);
        }
    }
    grad.assign(L, 0.0);
    for (std::size_t k = 0; k < D; ++k) {
        const double p = std::exp(eta[k] - log_z);
        for (std::size_t l = 0; l < L; ++l) {
            grad[l] += (d.a[k] - d.m * p) * d.x[l][k];
        }
    }
    for (std::size_t l = 0; l < L; ++l) {
        if (!active[l]) {
            grad[l] = 0.0;
        }
    }
    return ll;
}

// BFGS ascent with backtracking; frozen coefficients stay at zero
std::pair<std::vector<double>, double> maximize(
    const RegressionData& d, const std::vector<bool>& active, bool& converged,
    int& iterations) {
    const std::size_t L = d.x.size();
    std::vector<double> beta(L, 0.0);
    std::vector<double> grad;
    double ll = loglik_grad(d, beta, active, grad);

    std::vector<double> hinv(L * L, 0.0);
    for (std::size_t l = 0; l < L; ++l) {
        hinv[l * L + l] = 1.0 / std::max(1.0, d.m);
    }

    converged = false;
    iterations = 0;
    for (int iter = 0; iter < 500; ++iter) {
        iterations = iter + 1;
        double gnorm = 0.0;
        for (double g : grad) {
            gnorm = std::max(gnorm, std::abs(g));
        }
        if (gnorm < 1e-6) {
            converged = true;
            break;
        }
        std::vector<double> dir(L, 0.0);
        for (std::size_t r = 0; r < L; ++r) {
            for (std::size_t c = 0; c < L; ++c) {
                dir[r] += hinv[r * L + c] * grad[c];
            }
        }
        double ascent = 0.0;
        for (std::size_t l = 0; l < L; ++l) {
            ascent += dir[l] * grad[l];
        }
        if (ascent <= 0) {
            // reset to a scaled gradient step
            std::fill(hinv.begin(), hinv.end(), 0.0);
            for (std::size_t l = 0; l < L; ++l) {
                hinv[l * L + l] = 1.0 / std::max(1.0, d.m);
                dir[l] = hinv[l * L + l] * grad[l];
            }
        }

        double step = 1.0;
        std::vector<double> beta_new(L);
        std::vector<double> grad_new;
        double ll_new = ll;
        bool improved = false;
        for (int bt = 0; bt < 60; ++bt) {
            for (std::size_t l = 0; l < L; ++l) {
                beta_new[l] = active[l] ? beta[l] + step * dir[l] : 0.0;
            }
            ll_new = loglik_grad(d, beta_new, active, grad_new);
            if (std::isfinite(ll_new) && ll_new > ll) {
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved) {
            break;  // flat or numerically stuck; keep the best iterate
        }

        // BFGS update on the inverse Hessian approximation
        std::vector<double> s(L), y(L);
        for (std::size_t l = 0; l < L; ++l) {
            s[l] = beta_new[l] - beta[l];
            y[l] = grad[l] - grad_new[l];  // ascent convention
        }
        double sy = 0.0;
        for (std::size_t l = 0; l < L; ++l) {
            sy += s[l] * y[l];
        }
        if (sy > 1e-12) {
            std::vector<double> hy(L, 0.0);
            for (std::size_t r = 0; r < L; ++r) {
                for (std::size_t c = 0; c < L; ++c) {
                    hy[r] += hinv[r * L + c] * y[c];
                }
            }
            double yhy = 0.0;
            for (std::size_t l = 0; l < L; ++l) {
                yhy += y[l] * hy[l];
            }
            for (std::size_t r = 0; r < L; ++r) {
                for (std::size_t c = 0; c < L; ++c) {
                    hinv[r * L + c] +=
                        ((sy + yhy) * s[r] * s[c]) / (sy * sy) -
                        (hy[r] * s[c] + s[r] * hy[c]) / sy;
                }
            }
        }
        beta = beta_new;
        grad = grad_new;
        ll = ll_new;
    }
    return {beta, ll};
}

}  // namespace

RegressionReport fit_regression(const MultiEdgeNetwork& net,
                                LayerStack& layers) {
    const std::size_t n = net.n();
    if (layers.n != n) {
        throw InputError("layer stack size does not match the network");
    }
    if (layers.layers.empty()) {
        throw InputError("at least one predictor layer required");
    }
    const Ensemble base = Ensemble::from_network(net);
    const std::size_t L = layers.layers.size();

    RegressionData data;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double xi = base.xi(i, j);
            if (xi <= 0) {
                continue;
            }
            data.log_xi.push_back(std::log(xi));
            data.a.push_back(static_cast<double>(net.count(i, j)));
            data.m += static_cast<double>(net.count(i, j));
        }
    }
    if (L >= data.a.size()) {
        throw InputError("more layers than supported dyads");
    }
    data.x.resize(L);
    for (std::size_t l = 0; l < L; ++l) {
        if (layers.layers[l].size() != n * n) {
            throw InputError("layer matrix size mismatch");
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (base.xi(i, j) <= 0) {
                    continue;
                }
                const double s = layers.layers[l][i * n + j];
                if (!(s > 0)) {
                    throw InputError("predictor entries must be positive");
                }
                data.x[l].push_back(std::log(s));
            }
        }
    }

    RegressionReport report;
    // a layer that is constant over the support carries no signal
    std::vector<bool> active(L, true);
    for (std::size_t l = 0; l < L; ++l) {
        const double first = data.x[l].front();
        bool varies = false;
        for (double v : data.x[l]) {
            if (std::abs(v - first) > 1e-12) {
                varies = true;
                break;
            }
        }
        if (!varies) {
            active[l] = false;
            report.degenerate = true;
        }
    }

    auto [beta, ll] = maximize(data, active, report.converged,
                               report.iterations);
    report.beta = beta;
    report.loglik = ll;

    report.lr_statistic.assign(L, 0.0);
    report.p_value.assign(L, 1.0);
    for (std::size_t l = 0; l < L; ++l) {
        if (!active[l]) {
            continue;
        }
        std::vector<bool> restricted = active;
        restricted[l] = false;
        bool conv = false;
        int iters = 0;
        auto [beta0, ll0] = maximize(data, restricted, conv, iters);
        const double stat = std::max(0.0, 2.0 * (ll - ll0));
        report.lr_statistic[l] = stat;
        // chi-square survival with 1 dof
        report.p_value[l] = std::erfc(std::sqrt(stat / 2.0));
    }
    layers.beta = beta;
    return report;
}

namespace {

// E[ln X!] for X ~ Binomial(m, p), via the pmf recurrence in log space
double expected_log_factorial(std::int64_t m, double p) {
    if (p <= 0.0) {
        return 0.0;
    }
    if (p >= 1.0) {
        return std::lgamma(static_cast<double>(m) + 1.0);
    }
    const double log_ratio = std::log(p) - std::log1p(-p);
    double lb = static_cast<double>(m) * std::log1p(-p);  // ln pmf(0)
    double acc = 0.0;  // k = 0 contributes ln 0! = 0
    for (std::int64_t k = 1; k <= m; ++k) {
        lb += std::log(static_cast<double>(m - k + 1) /
                       static_cast<double>(k)) +
              log_ratio;
        acc += std::exp(lb) * std::lgamma(static_cast<double>(k) + 1.0);
    }
    return acc;
}

// exact multinomial entropy in nats via the binomial marginal decomposition
double multinomial_entropy(std::int64_t m, const std::vector<double>& p) {
    double h = -std::lgamma(static_cast<double>(m) + 1.0);
    for (double pi : p) {
        if (pi > 0.0) {
            h += expected_log_factorial(m, pi);
            h -= static_cast<double>(m) * pi * std::log(pi);
        }
    }
    return std::max(0.0, h);
}

// strictly positive dyad probabilities; throws on empty support
std::vector<double> positive_probs(const Ensemble& e) {
    if (e.m() < 1) {
        throw InputError("potentiality needs at least one edge");
    }
    std::vector<double> p;
    for (double v : e.dyad_probabilities()) {
        if (v > 0.0) {
            p.push_back(v);
        }
    }
    if (p.empty()) {
        throw InputError("potentiality needs at least one supported dyad");
    }
    return p;
}

Potentiality monte_carlo_entropy(const std::vector<double>& p, std::int64_t m,
                                 double h_max, int draws, std::uint64_t seed) {
    const std::size_t D = p.size();
    std::vector<double> cum(D);
    std::partial_sum(p.begin(), p.end(), cum.begin());
    cum.back() = 1.0;
    std::vector<double> log_p(D);
    for (std::size_t k = 0; k < D; ++k) {
        log_p[k] = std::log(p[k]);
    }
    Rng rng(seed);
    std::vector<std::int64_t> counts(D, 0);
    const double log_m_fact = std::lgamma(static_cast<double>(m) + 1.0);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int s = 0; s < draws; ++s) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::int64_t t = 0; t < m; ++t) {
            const double u = rng.uniform01();
            const auto it = std::upper_bound(cum.begin(), cum.end(), u);
            counts[static_cast<std::size_t>(it - cum.begin())] += 1;
        }
        double log_prob = log_m_fact;
        for (std::size_t k = 0; k < D; ++k) {
            if (counts[k] > 0) {
                log_prob -= std::lgamma(static_cast<double>(counts[k]) + 1.0);
                log_prob += static_cast<double>(counts[k]) * log_p[k];
            }
        }
        sum += -log_prob;
        sum_sq += log_prob * log_prob;
    }
    const double mean = sum / draws;
    const double var = std::max(0.0, sum_sq / draws - mean * mean);

    Potentiality out;
    out.entropy = mean;
    out.entropy_max = h_max;
    out.std_error = h_max > 0 ? std::sqrt(var / draws) / h_max : 0.0;
    out.exact = false;
    out.value = h_max > 0 ? std::clamp(mean / h_max, 0.0, 1.0) : 0.0;
    return out;
}

}  // namespace

Potentiality potentiality_monte_carlo(const Ensemble& e, int draws,
                                      std::uint64_t seed) {
    const auto p = positive_probs(e);
    if (p.size() == 1) {
        Potentiality out;
        out.degenerate = true;
        out.exact = false;
        return out;
    }
    const double h_max = multinomial_entropy(
        e.m(), std::vector<double>(p.size(), 1.0 / static_cast<double>(p.size())));
    return monte_carlo_entropy(p, e.m(), h_max, draws, seed);
}

Potentiality potentiality(const Ensemble& e, std::uint64_t seed) {
    const auto p = positive_probs(e);

    Potentiality out;
    const std::size_t D = p.size();
    if (D == 1) {
        out.degenerate = true;
        return out;  // H = H_max = 0; P = 0 by convention
    }
    const std::int64_t m = e.m();
    const double h_max =
        multinomial_entropy(m, std::vector<double>(D, 1.0 / static_cast<double>(D)));

    constexpr std::int64_t kExactLimit = 2000;
    if (m > kExactLimit) {
        return monte_carlo_entropy(p, m, h_max, 100000, seed);
    }
    out.entropy_max = h_max;
    // identical probabilities short-circuit to the baseline so the uniform
    // case yields exactly 1
    bool uniform = true;
    for (double v : p) {
        if (std::abs(v - p.front()) > 1e-15) {
            uniform = false;
            break;
        }
    }
    out.entropy = uniform ? h_max : multinomial_entropy(m, p);
    out.exact = true;
    out.value = h_max > 0 ? std::clamp(out.entropy / h_max, 0.0, 1.0) : 0.0;
    return out;
}

}  // namespace resnet
