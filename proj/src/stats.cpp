#include "hougaard/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace hougaard {

std::string StatReport::to_json(int indent) const {
    nlohmann::json j;
    j["label"] = label;
    j["estimates"] = estimates;
    j["standard_errors"] = standard_errors;
    j["statistic"] = statistic;
    j["critical_value"] = critical_value;
    j["passed"] = passed;
    j["metadata"] = metadata;
    return j.dump(indent);
}

namespace stats {

const Tolerances& tolerances() {
    static const Tolerances tol{};
    return tol;
}

Moments empirical_moments(std::span<const double> sample) {
    const std::size_t n = sample.size();
    if (n < 2) throw std::invalid_argument("empirical_moments: need n >= 2");
    double mean = 0.0;
    for (double x : sample) mean += x;
    mean /= static_cast<double>(n);
    double m2 = 0.0, m4 = 0.0;
    for (double x : sample) {
        const double d = x - mean;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    const auto dn = static_cast<double>(n);
    const double var = m2 / (dn - 1.0);
    m2 /= dn;
    m4 /= dn;
    const double se_mean = std::sqrt(var / dn);
    // Var[s^2] = (m4 - (n-3)/(n-1) s^4) / n.
    const double var_of_var = std::max(0.0, (m4 - (dn - 3.0) / (dn - 1.0) * var * var) / dn);
    return Moments{mean, var, se_mean, std::sqrt(var_of_var), n};
}

std::vector<EcfPoint> ecf(std::span<const double> sample, std::span<const double> z_grid) {
    if (sample.empty()) throw std::invalid_argument("ecf: empty sample");
    const auto n = static_cast<double>(sample.size());
    std::vector<EcfPoint> out;
    out.reserve(z_grid.size());
    for (double z : z_grid) {
        double re = 0.0, im = 0.0, re2 = 0.0, im2 = 0.0;
        for (double x : sample) {
            const double c = std::cos(z * x);
            const double s = std::sin(z * x);
            re += c;
            im += s;
            re2 += c * c;
            im2 += s * s;
        }
        re /= n;
        im /= n;
        const double var_re = std::max(0.0, re2 / n - re * re);
        const double var_im = std::max(0.0, im2 / n - im * im);
        out.push_back(EcfPoint{z, {re, im}, std::sqrt((var_re + var_im) / n)});
    }
    return out;
}

double ks_critical_value(std::size_t n, std::size_t m, double level) {
    const double c = std::sqrt(-0.5 * std::log(0.5 * level));
    const auto dn = static_cast<double>(n);
    const auto dm = static_cast<double>(m);
    return c * std::sqrt((dn + dm) / (dn * dm));
}

StatReport ks_two_sample(std::span<const double> a, std::span<const double> b, double level) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const auto na = static_cast<double>(sa.size());
    const auto nb = static_cast<double>(sb.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < sa.size() && j < sb.size()) {
        const double x = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] <= x) ++i;
        while (j < sb.size() && sb[j] <= x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    StatReport rep;
    rep.label = "ks_two_sample";
    rep.statistic = d;
    rep.critical_value = ks_critical_value(sa.size(), sb.size(), level);
    rep.passed = d < rep.critical_value;
    rep.metadata["n_a"] = std::to_string(sa.size());
    rep.metadata["n_b"] = std::to_string(sb.size());
    rep.metadata["level"] = std::to_string(level);
    return rep;
}

namespace {

SlopeFit wls(std::span<const double> x, std::span<const double> y, std::span<const double> w) {
    double sw = 0.0, swx = 0.0, swy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sw += w[i];
        swx += w[i] * x[i];
        swy += w[i] * y[i];
    }
    const double xbar = swx / sw;
    const double ybar = swy / sw;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += w[i] * (x[i] - xbar) * (x[i] - xbar);
        sxy += w[i] * (x[i] - xbar) * (y[i] - ybar);
    }
    if (!(sxx > 0.0)) throw std::invalid_argument("slope fit: degenerate abscissae");
    const double slope = sxy / sxx;
    return SlopeFit{slope, std::sqrt(1.0 / sxx), ybar - slope * xbar};
}

}  // namespace

SlopeFit loglog_slope(std::span<const double> t_grid, std::span<const double> variances,
                      std::span<const double> ses) {
    if (t_grid.size() < 3) throw std::invalid_argument("loglog_slope: need >= 3 grid points");
    if (t_grid.size() != variances.size() || t_grid.size() != ses.size())
        throw std::invalid_argument("loglog_slope: size mismatch");
    std::vector<double> lx(t_grid.size()), ly(t_grid.size()), w(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(variances[i] > 0.0) || !(t_grid[i] > 0.0))
            throw std::invalid_argument("loglog_slope: nonpositive estimate or time");
        lx[i] = std::log(t_grid[i]);
        ly[i] = std::log(variances[i]);
        const double se_log = (ses[i] > 0.0) ? ses[i] / variances[i] : 1e-12;
        w[i] = 1.0 / (se_log * se_log);
    }
    return wls(lx, ly, w);
}

SlopeFit linear_fit(std::span<const double> x, std::span<const double> y,
                    std::span<const double> ses) {
    if (x.size() < 3 || x.size() != y.size() || x.size() != ses.size())
        throw std::invalid_argument("linear_fit: bad sizes");
    std::vector<double> w(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double se = (ses[i] > 0.0) ? ses[i] : 1e-12;
        w[i] = 1.0 / (se * se);
    }
    return wls(x, y, w);
}

StatReport increment_corr_estimate(std::span<const double> xs, std::span<const double> xst,
                                   double rho0) {
    const std::size_t n = xs.size();
    if (n != xst.size() || n < 4)
        throw std::invalid_argument("increment_corr_estimate: need matched samples, n >= 4");
    double mx = 0.0, mi = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        mx += xs[k];
        mi += xst[k] - xs[k];
    }
    mx /= static_cast<double>(n);
    mi /= static_cast<double>(n);
    double sxx = 0.0, sii = 0.0, sxi = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double dx = xs[k] - mx;
        const double di = (xst[k] - xs[k]) - mi;
        sxx += dx * dx;
        sii += di * di;
        sxi += dx * di;
    }
    if (!(sxx > 0.0) || !(sii > 0.0))
        throw std::invalid_argument("increment_corr_estimate: degenerate ensemble");
    const double rho = sxi / std::sqrt(sxx * sii);
    const double se_z = 1.0 / std::sqrt(static_cast<double>(n) - 3.0);
    StatReport rep;
    rep.label = "increment_correlation";
    rep.estimates = {rho};
    rep.standard_errors = {(1.0 - rho * rho) * se_z};  // delta method on the rho scale
    rep.statistic = std::fabs(std::atanh(std::clamp(rho, -0.999999, 0.999999)) - std::atanh(rho0));
    rep.critical_value = tolerances().corr_se_band * se_z;
    rep.passed = rep.statistic < rep.critical_value;
    rep.metadata["n_paths"] = std::to_string(n);
    rep.metadata["rho0"] = std::to_string(rho0);
    return rep;
}

}  // namespace stats
}  // namespace hougaard
