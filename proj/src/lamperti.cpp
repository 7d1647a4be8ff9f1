#include "hougaard/lamperti.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hougaard/samplers.hpp"

namespace hougaard::lamperti {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class HougaardFamily final : public FamilyGenerator {
  public:
    HougaardFamily(double p, double sigma2) : p_(p), sigma2_(sigma2) {
        hurst_ = params::hurst_of_p(p);
    }
    std::vector<double> sample_marginal(double mu, double t, std::size_t n,
                                        RandomStream stream) const override {
        return samplers::sample_hougaard_marginal(PowerFamilySpec(p_, sigma2_, mu), t, n, stream);
    }
    double hurst() const override { return hurst_; }
    Interval rate_domain() const override { return params::mu_domain(p_); }
    std::string name() const override {
        std::ostringstream os;
        os << "hougaard(p=" << p_ << ")";
        return os.str();
    }

  private:
    double p_, sigma2_, hurst_;
};

class BrownianDriftFamily final : public FamilyGenerator {
  public:
    explicit BrownianDriftFamily(double sigma2) : sigma2_(sigma2) {
        if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be positive");
    }
    std::vector<double> sample_marginal(double mu, double t, std::size_t n,
                                        RandomStream stream) const override {
        if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
        std::vector<double> out(n);
        const double sd = std::sqrt(sigma2_ * t);
        for (auto& x : out) x = mu * t + sd * stream.normal();
        return out;
    }
    double hurst() const override { return 0.5; }
    Interval rate_domain() const override { return Interval{-kInf, kInf, false, false}; }
    std::string name() const override { return "brownian_drift"; }

  private:
    double sigma2_;
};

class RandomWalkDriftFamily final : public FamilyGenerator {
  public:
    std::vector<double> sample_marginal(double mu, double t, std::size_t n,
                                        RandomStream stream) const override {
        if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
        const auto steps = static_cast<std::size_t>(std::floor(t));
        std::vector<double> out(n);
        for (auto& x : out) {
            double sum = 0.0;
            for (std::size_t k = 0; k < steps; ++k) sum += stream.exponential() - 1.0;
            x = sum + mu * t;
        }
        return out;
    }
    double hurst() const override { return 0.5; }
    Interval rate_domain() const override { return Interval{-kInf, kInf, false, false}; }
    std::string name() const override { return "random_walk_drift"; }
};

class FhmFamily final : public FamilyGenerator {
  public:
    explicit FhmFamily(FHMConfig cfg) : cfg_(std::move(cfg)) {
        const double alpha = cfg_.alpha();
        gamma_ = (1.0 / alpha - 1.0) / (cfg_.hurst - 1.0);
        if (cfg_.spec.p == 0.0) gamma_ = 1.0;  // rate-free family, map immaterial
    }
    std::vector<double> sample_marginal(double m, double t, std::size_t n,
                                        RandomStream stream) const override {
        FHMConfig run = cfg_;
        run.spec = PowerFamilySpec(cfg_.spec.p, cfg_.spec.sigma2,
                                   cfg_.spec.p == 0.0 ? m : std::pow(m, gamma_));
        run.n_paths = n;
        run.stream = stream;
        // Rescale the window and step with t so the declared budgets carry over.
        const double factor = std::max(t, cfg_.step / cfg_.truncation);
        run.truncation = cfg_.truncation * factor;
        run.step = cfg_.step * factor;
        return fhm::simulate_fhm(run, {t}).column(0);
    }
    double hurst() const override { return cfg_.hurst; }
    Interval rate_domain() const override { return params::mu_domain(cfg_.spec.p); }
    std::string name() const override {
        std::ostringstream os;
        os << "fhm(p=" << cfg_.spec.p << ",H=" << cfg_.hurst << ")";
        return os.str();
    }

  private:
    FHMConfig cfg_;
    double gamma_;
};

class GaussianShiftFamily final : public FamilyGenerator {
  public:
    std::vector<double> sample_marginal(double mu, double /*t*/, std::size_t n,
                                        RandomStream stream) const override {
        std::vector<double> out(n);
        for (auto& x : out) x = mu + stream.normal();
        return out;
    }
    double hurst() const override { return 0.0; }
    Interval rate_domain() const override { return Interval{-kInf, kInf, false, false}; }
    std::string name() const override { return "gaussian_shift"; }
};

class RgFamily final : public FamilyGenerator {
  public:
    RgFamily(FamilyPtr base, double c, double hurst) : base_(std::move(base)), c_(c), h_(hurst) {}

    std::vector<double> sample_marginal(double mu, double t, std::size_t n,
                                        RandomStream stream) const override {
        auto p = map(mu, t);
        auto draws = base_->sample_marginal(p.mu_scaled, p.time_scaled, n, stream);
        for (auto& x : draws) x *= p.scale;
        return draws;
    }
    double hurst() const override { return base_->hurst(); }
    Interval rate_domain() const override { return base_->rate_domain(); }
    std::string name() const override { return "rg(" + base_->name() + ")"; }

    LampertiParams map(double mu, double t) const {
        return LampertiParams{mu * std::pow(c_, h_ - 1.0), c_ * t, std::pow(c_, -h_)};
    }
    const FamilyPtr& base() const { return base_; }
    double c() const { return c_; }
    double rg_hurst() const { return h_; }

  private:
    FamilyPtr base_;
    double c_;
    double h_;
};

}  // namespace

FamilyPtr hougaard_family(double p, double sigma2) {
    return std::make_shared<HougaardFamily>(p, sigma2);
}
FamilyPtr brownian_drift_family(double sigma2) {
    return std::make_shared<BrownianDriftFamily>(sigma2);
}
FamilyPtr random_walk_drift_family() { return std::make_shared<RandomWalkDriftFamily>(); }
FamilyPtr fhm_family(const FHMConfig& cfg) { return std::make_shared<FhmFamily>(cfg); }
FamilyPtr gaussian_shift_family() { return std::make_shared<GaussianShiftFamily>(); }

LampertiParams lamperti_marginal_params(double mu, double hurst, double t) {
    return LampertiParams{mu * std::exp(t * (hurst - 1.0)), std::exp(t), std::exp(-t * hurst)};
}

std::vector<double> lamperti_marginal_sample(const FamilyGenerator& gen, double mu, double hurst,
                                             double t, std::size_t n, RandomStream stream) {
    auto p = lamperti_marginal_params(mu, hurst, t);
    if (!gen.rate_domain().contains(p.mu_scaled))
        throw std::invalid_argument("lamperti_marginal_sample: transformed rate leaves the domain");
    auto draws = gen.sample_marginal(p.mu_scaled, p.time_scaled, n, std::move(stream));
    for (auto& x : draws) x *= p.scale;
    return draws;
}

std::vector<double> lamperti_marginal_sample(const FamilyGenerator& gen, double mu, double t,
                                             std::size_t n, RandomStream stream) {
    return lamperti_marginal_sample(gen, mu, gen.hurst(), t, n, std::move(stream));
}

std::vector<double> inverse_lamperti_marginal(const FamilyGenerator& stationary_gen, double hurst,
                                              double mu, double t, std::size_t n,
                                              RandomStream stream) {
    if (!(t > 0.0)) throw std::invalid_argument("inverse_lamperti_marginal: t must be positive");
    const double mu_scaled = mu * std::pow(t, 1.0 - hurst);
    auto draws = stationary_gen.sample_marginal(mu_scaled, std::log(t), n, std::move(stream));
    const double scale = std::pow(t, hurst);
    for (auto& x : draws) x *= scale;
    return draws;
}

FamilyPtr rg_apply(FamilyPtr gen, double c, double hurst) {
    if (!(c > 0.0)) throw std::invalid_argument("rg_apply: c must be positive");
    if (auto wrapped = std::dynamic_pointer_cast<const RgFamily>(gen)) {
        if (wrapped->rg_hurst() == hurst)
            return std::make_shared<RgFamily>(wrapped->base(), c * wrapped->c(), hurst);
    }
    return std::make_shared<RgFamily>(std::move(gen), c, hurst);
}

LampertiParams rg_param_map(const FamilyGenerator& gen, double mu, double t) {
    if (auto* wrapped = dynamic_cast<const RgFamily*>(&gen)) return wrapped->map(mu, t);
    return LampertiParams{mu, t, 1.0};
}

std::vector<StatReport> convergence_diagnostic(const FamilyGenerator& prelimit,
                                               const FamilyGenerator& target, double hurst,
                                               const std::vector<double>& c_schedule, double mu,
                                               const std::vector<double>& t_grid, std::size_t n,
                                               RandomStream stream) {
    std::vector<StatReport> reports;
    std::uint64_t cell = 0;
    for (double c : c_schedule) {
        for (double t : t_grid) {
            auto scaled = prelimit.sample_marginal(mu * std::pow(c, hurst - 1.0), c * t, n,
                                                   stream.substream(2 * cell));
            const double shrink = std::pow(c, -hurst);
            for (auto& x : scaled) x *= shrink;
            auto ref = target.sample_marginal(mu, t, n, stream.substream(2 * cell + 1));
            auto rep = stats::ks_two_sample(scaled, ref);
            rep.label = "rg_convergence";
            rep.metadata["c"] = std::to_string(c);
            rep.metadata["t"] = std::to_string(t);
            rep.metadata["mu"] = std::to_string(mu);
            rep.metadata["prelimit"] = prelimit.name();
            rep.metadata["target"] = target.name();
            rep.metadata["master_seed"] = std::to_string(stream.master_seed());
            reports.push_back(std::move(rep));
            ++cell;
        }
    }
    return reports;
}

}  // namespace hougaard::lamperti
