#include "hougaard/levy_paths.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hougaard/common.hpp"
#include "hougaard/covariance.hpp"

namespace hougaard {

TimeGrid TimeGrid::one_sided(std::vector<double> times) {
    if (times.empty() || times.front() != 0.0)
        throw std::invalid_argument("TimeGrid: one-sided grid must start at 0");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]) || !std::isfinite(times[i]))
            throw std::invalid_argument("TimeGrid: times must be finite and strictly increasing");
    return TimeGrid{std::move(times), false};
}

TimeGrid TimeGrid::symmetric(double window, double step) {
    if (!(window > 0.0) || !(step > 0.0) || step > window)
        throw std::invalid_argument("TimeGrid: need 0 < step <= window");
    const auto half = static_cast<std::size_t>(std::llround(window / step));
    if (std::fabs(half * step - window) > 1e-9 * window)
        throw std::invalid_argument("TimeGrid: step must divide the window");
    std::vector<double> times;
    times.reserve(2 * half + 1);
    for (std::size_t j = 0; j <= 2 * half; ++j)
        times.push_back((static_cast<double>(j) - static_cast<double>(half)) * step);
    times[half] = 0.0;
    return TimeGrid{std::move(times), true};
}

std::size_t TimeGrid::index_of(double t) const {
    for (std::size_t i = 0; i < times.size(); ++i)
        if (std::fabs(times[i] - t) <= 1e-12 * std::max(1.0, std::fabs(t))) return i;
    throw std::invalid_argument("TimeGrid: time not grid-aligned");
}

std::vector<double> PathEnsemble::column(std::size_t time_idx) const {
    std::vector<double> out(n_paths);
    const std::size_t nt = grid.times.size();
    for (std::size_t i = 0; i < n_paths; ++i) out[i] = values[i * nt + time_idx];
    return out;
}

namespace paths {

namespace {

PathEnsemble make_ensemble(const PowerFamilySpec& spec, TimeGrid grid, std::size_t n_paths,
                           const RandomStream& stream) {
    PathEnsemble ens{std::move(grid), n_paths, {}, spec, stream.master_seed(),
                     stream.stream_index(), kRngName, {}};
    ens.values.assign(n_paths * ens.grid.times.size(), 0.0);
    return ens;
}

}  // namespace

PathEnsemble simulate_hougaard(const PowerFamilySpec& spec, const TimeGrid& grid,
                               std::size_t n_paths, RandomStream stream, unsigned threads,
                               samplers::GuardPolicy guard) {
    if (grid.two_sided)
        throw std::invalid_argument("simulate_hougaard: use extend_two_sided for [-T,T] grids");
    auto ens = make_ensemble(spec, grid, n_paths, stream);
    const auto& times = ens.grid.times;
    const std::size_t nt = times.size();
    parallel_for(n_paths, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            RandomStream path_stream = stream.substream(i);
            double level = 0.0;
            for (std::size_t k = 1; k < nt; ++k) {
                RandomStream inc = path_stream.substream(k - 1);
                level += samplers::hougaard_marginal_draw(spec, times[k] - times[k - 1], inc, guard);
                ens.values[i * nt + k] = level;
            }
        }
    });
    return ens;
}

PathEnsemble extend_two_sided(const PowerFamilySpec& spec, double window, double step,
                              std::size_t n_paths, RandomStream stream, unsigned threads,
                              samplers::GuardPolicy guard) {
    auto grid = TimeGrid::symmetric(window, step);
    auto ens = make_ensemble(spec, grid, n_paths, stream);
    const auto& times = ens.grid.times;
    const std::size_t nt = times.size();
    const std::size_t zero = ens.grid.index_of(0.0);
    parallel_for(n_paths, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            RandomStream path_stream = stream.substream(i);
            // One i.i.d. increment per grid step, indexed by step position.
            std::vector<double> inc(nt - 1);
            for (std::size_t k = 0; k + 1 < nt; ++k) {
                RandomStream s = path_stream.substream(k);
                inc[k] = samplers::hougaard_marginal_draw(spec, times[k + 1] - times[k], s, guard);
            }
            double level = 0.0;
            for (std::size_t k = zero + 1; k < nt; ++k) {
                level += inc[k - 1];
                ens.values[i * nt + k] = level;
            }
            level = 0.0;
            for (std::size_t k = zero; k-- > 0;) {
                level -= inc[k];
                ens.values[i * nt + k] = level;
            }
        }
    });
    return ens;
}

PathEnsemble simulate_fbm_drift(double hurst, double sigma2, double mu,
                                const std::vector<double>& times, std::size_t n_paths,
                                RandomStream stream) {
    if (!(sigma2 > 0.0)) throw std::invalid_argument("simulate_fbm_drift: sigma2 must be positive");
    if (!(hurst > 0.0) || !(hurst > 0.0 && hurst <= 1.0))
        throw std::invalid_argument("simulate_fbm_drift: H must lie in (0, 1]");
    const std::size_t nt = times.size();
    if (nt == 0) throw std::invalid_argument("simulate_fbm_drift: empty grid");
    for (std::size_t i = 0; i < nt; ++i) {
        if (!(times[i] > 0.0)) throw std::invalid_argument("simulate_fbm_drift: times must be > 0");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw std::invalid_argument("simulate_fbm_drift: times must increase");
    }
    const double d = 2.0 * (1.0 - hurst);
    Eigen::MatrixXd gram(nt, nt);
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < nt; ++j)
            gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                sigma2 * covariance::r_d(times[i], times[j], d);
    // Tiny diagonal bump keeps LLT stable on near-degenerate grids.
    gram.diagonal().array() += 1e-12 * gram.diagonal().maxCoeff();
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("simulate_fbm_drift: covariance not positive definite");
    const Eigen::MatrixXd chol = llt.matrixL();

    PowerFamilySpec spec(0.0, sigma2, mu);
    auto ens = make_ensemble(spec, TimeGrid{times, false}, n_paths, stream);
    ens.metadata["generator"] = "fbm_cholesky";
    ens.metadata["hurst"] = std::to_string(hurst);
    std::vector<double> g(nt);
    for (std::size_t i = 0; i < n_paths; ++i) {
        RandomStream ps = stream.substream(i);
        for (auto& x : g) x = ps.normal();
        for (std::size_t r = 0; r < nt; ++r) {
            double acc = mu * times[r];
            for (std::size_t c = 0; c <= r; ++c)
                acc += chol(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * g[c];
            ens.values[i * nt + r] = acc;
        }
    }
    return ens;
}

StatReport marginal_ss_check(const PowerFamilySpec& spec, double hurst, double c, double t,
                             std::size_t n, RandomStream stream) {
    if (!(c > 0.0) || !(t > 0.0))
        throw std::invalid_argument("marginal_ss_check: c and t must be positive");
    const double expected_h = params::hurst_of_p(spec.p);
    if (std::fabs(hurst - expected_h) > 1e-12)
        throw std::invalid_argument("marginal_ss_check: H must equal 1/alpha for this family");
    PowerFamilySpec scaled(spec.p, spec.sigma2, spec.mu * std::pow(c, hurst - 1.0));
    auto lhs = samplers::sample_hougaard_marginal(scaled, c * t, n, stream.substream(0));
    const double shrink = std::pow(c, -hurst);
    for (auto& x : lhs) x *= shrink;
    auto rhs = samplers::sample_hougaard_marginal(spec, t, n, stream.substream(1));

    auto rep = stats::ks_two_sample(lhs, rhs);
    rep.label = "marginal_ss_check";
    const auto ml = stats::empirical_moments(lhs);
    const auto mr = stats::empirical_moments(rhs);
    rep.estimates = {ml.mean, mr.mean, ml.variance, mr.variance};
    rep.standard_errors = {ml.se_mean, mr.se_mean, ml.se_variance, mr.se_variance};
    std::ostringstream params_str;
    params_str << "p=" << spec.p << " mu=" << spec.mu << " c=" << c << " t=" << t;
    rep.metadata["parameters"] = params_str.str();
    rep.metadata["master_seed"] = std::to_string(stream.master_seed());
    return rep;
}

}  // namespace paths
}  // namespace hougaard
