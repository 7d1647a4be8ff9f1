// Command-line front end: wires the library modules into runnable
// experiments and emits CSV/JSON artifacts with full provenance metadata.
//
// Exit codes: 0 success / all checks passed, 1 statistical failure,
// 2 usage or domain error.

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hougaard/covariance.hpp"
#include "hougaard/family_params.hpp"
#include "hougaard/fhm.hpp"
#include "hougaard/io.hpp"
#include "hougaard/lamperti.hpp"
#include "hougaard/levy_paths.hpp"
#include "hougaard/samplers.hpp"
#include "hougaard/stats.hpp"
#include "hougaard/tweedie.hpp"
#include "hougaard/verify.hpp"

namespace {

using namespace hougaard;

struct Global {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    unsigned threads = 1;
    std::string out = "-";
};

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) values.push_back(std::stod(item));
    }
    if (values.empty()) throw std::invalid_argument("empty list: " + text);
    return values;
}

// "a:b" -> integers a..b inclusive.
std::vector<double> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return parse_list(text);
    const long a = std::stol(text.substr(0, colon));
    const long b = std::stol(text.substr(colon + 1));
    if (b < a) throw std::invalid_argument("bad range: " + text);
    std::vector<double> values;
    for (long v = a; v <= b; ++v) values.push_back(static_cast<double>(v));
    return values;
}

class Output {
  public:
    explicit Output(const std::string& path) {
        if (path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

io::MetaLines base_meta(const Global& g, const std::string& command) {
    return io::MetaLines{{"version", kVersion},
                         {"command", command},
                         {"rng", kRngName},
                         {"master_seed", std::to_string(g.seed)},
                         {"stream_index", std::to_string(g.stream)},
                         {"threads", std::to_string(g.threads)}};
}

void emit_draws(const Global& g, const std::string& command, io::MetaLines meta,
                const std::vector<double>& draws) {
    Output out(g.out);
    auto lines = base_meta(g, command);
    lines.insert(lines.end(), meta.begin(), meta.end());
    std::vector<std::vector<double>> rows;
    rows.reserve(draws.size());
    for (double x : draws) rows.push_back({x});
    io::write_csv(out.stream(), lines, {"value"}, rows);
}

// Merges --config JSON keys into argv as trailing long options; explicit
// flags win because config-derived options are only appended when the flag
// is absent from the original command line.
std::vector<std::string> merge_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
    }
    if (config_path.empty()) return args;
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open config file: " + config_path);
    nlohmann::json j;
    in >> j;
    for (const auto& [key, value] : j.items()) {
        const std::string flag = "--" + key;
        bool present = false;
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
        if (present) continue;
        if (value.is_string()) args.push_back(flag + "=" + value.get<std::string>());
        else args.push_back(flag + "=" + value.dump());
    }
    return args;
}

int run(std::vector<std::string> args) {
    Global g;
    if (const char* env = std::getenv("HOUGAARD_SEED")) g.seed = std::strtoull(env, nullptr, 10);

    CLI::App app{"hougaard: simulation and verification of self-similar families "
                 "of stochastic processes"};
    app.require_subcommand(1);
    app.add_option("--seed", g.seed, "master seed (default $HOUGAARD_SEED or 0)");
    app.add_option("--stream", g.stream, "base stream index");
    app.add_option("--threads", g.threads, "worker count (outputs are independent of it)");
    app.add_option("--out", g.out, "output path, '-' for stdout");
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file; explicit flags win");

    // params ------------------------------------------------------------
    double p = 1.5, sigma2 = 1.0, mu = 1.0, t = 1.0, hurst = 0.5, b = 1.0;
    bool as_json = false;
    auto* cmd_params = app.add_subcommand("params", "parameter algebra table for one p");
    cmd_params->add_option("--p", p, "power parameter")->required();
    cmd_params->add_flag("--json", as_json, "emit JSON instead of CSV");
    cmd_params->callback([&] {
        params::require_valid_p(p);
        const double alpha = params::alpha_of_p(p);
        nlohmann::json j;
        j["p"] = p;
        j["alpha"] = std::isinf(alpha) ? "-inf" : io::format_double(alpha);
        j["mu_domain"] = params::mu_domain(p).str();
        if (p != 2.0) {
            const double h = params::hurst_of_p(p);
            j["hurst"] = h;
            j["hurst_domain"] = params::hurst_domain(p).str();
            j["levy_fractal_dimension"] = params::fractal_dimension(h, p);
            j["uncorrelated_increments_at"] = "H = " + io::format_double(h);
        }
        Output out(g.out);
        if (as_json) {
            out.stream() << j.dump(2) << "\n";
        } else {
            for (const auto& [k, v] : base_meta(g, "params")) out.stream() << "# " << k << "=" << v << "\n";
            out.stream() << "key,value\n";
            for (const auto& [k, v] : j.items())
                out.stream() << k << "," << (v.is_string() ? v.get<std::string>() : v.dump())
                             << "\n";
        }
    });

    // sample --------------------------------------------------------------
    std::size_t n = 1000;
    bool process_level = false;
    auto* cmd_sample = app.add_subcommand("sample", "i.i.d. Tweedie draws");
    cmd_sample->add_option("--p", p)->required();
    cmd_sample->add_option("--sigma2", sigma2);
    cmd_sample->add_option("--mu", mu)->required();
    cmd_sample->add_option("--t", t);
    cmd_sample->add_option("--n", n);
    cmd_sample->add_flag("--process", process_level,
                         "draw the process marginal S_p(mu;t) = t Tw_p(mu,t)");
    cmd_sample->callback([&] {
        PowerFamilySpec spec(p, sigma2, mu);
        RandomStream stream(g.seed, g.stream);
        auto draws = process_level ? samplers::sample_hougaard_marginal(spec, t, n, stream)
                                   : samplers::sample_tweedie(spec, t, n, stream);
        emit_draws(g, "sample", {{"p", io::format_double(p)},
                                 {"sigma2", io::format_double(sigma2)},
                                 {"mu", io::format_double(mu)},
                                 {"t", io::format_double(t)},
                                 {"n", std::to_string(n)},
                                 {"level", process_level ? "process" : "tweedie"}},
                   draws);
    });

    // cgf eval --------------------------------------------------------------
    double zmin = -2.0, zmax = 2.0;
    std::size_t zn = 41;
    bool tweedie_level = false, h1_family = false;
    auto* cmd_cgf = app.add_subcommand("cgf", "cumulant transforms");
    auto* cgf_eval = cmd_cgf->add_subcommand("eval", "emit (z, Re C, Im C) CSV");
    cgf_eval->add_option("--p", p);
    cgf_eval->add_flag("--pinf", h1_family, "use the H = 1 family Tw_inf(mu, b, t)");
    cgf_eval->add_option("--b", b, "exponential-variance slope for --pinf");
    cgf_eval->add_option("--sigma2", sigma2);
    cgf_eval->add_option("--mu", mu);
    cgf_eval->add_option("--t", t);
    cgf_eval->add_option("--zmin", zmin);
    cgf_eval->add_option("--zmax", zmax);
    cgf_eval->add_option("--zn", zn);
    cgf_eval->add_flag("--tweedie-level", tweedie_level,
                       "evaluate Tw_p(mu,t) instead of S_p(mu;t)");
    cgf_eval->callback([&] {
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < zn; ++i) {
            const double z =
                zmin + (zmax - zmin) * static_cast<double>(i) / static_cast<double>(zn - 1);
            std::complex<double> c;
            if (h1_family) {
                ExpVarianceFamily fam(b, sigma2, mu, t);
                c = tweedie_level ? tweedie::expvar_tweedie_cumulant(z, fam)
                                  : tweedie::expvar_cumulant(z, fam);
            } else {
                PowerFamilySpec spec(p, sigma2, mu);
                c = tweedie_level ? tweedie::tweedie_cumulant(z, spec, t)
                                  : tweedie::cumulant_transform(z, spec, t);
            }
            rows.push_back({z, c.real(), c.imag()});
        }
        Output out(g.out);
        auto meta = base_meta(g, "cgf eval");
        meta.emplace_back(h1_family ? "b" : "p", io::format_double(h1_family ? b : p));
        meta.emplace_back("sigma2", io::format_double(sigma2));
        meta.emplace_back("mu", io::format_double(mu));
        meta.emplace_back("t", io::format_double(t));
        io::write_csv(out.stream(), meta, {"z", "re_c", "im_c"}, rows);
    });

    // process simulate --------------------------------------------------------
    std::string times_text = "0,0.25,0.5,0.75,1";
    std::size_t n_paths = 100;
    std::string format = "csv";
    bool two_sided = false;
    double window = 1.0, step = 0.25;
    auto* cmd_process = app.add_subcommand("process", "Hougaard Levy process paths");
    auto* proc_sim = cmd_process->add_subcommand("simulate", "simulate a path ensemble");
    proc_sim->add_option("--p", p)->required();
    proc_sim->add_option("--sigma2", sigma2);
    proc_sim->add_option("--mu", mu)->required();
    proc_sim->add_option("--times", times_text, "comma-separated grid starting at 0");
    proc_sim->add_flag("--two-sided", two_sided, "simulate on [-window, window]");
    proc_sim->add_option("--window", window, "half-width for --two-sided");
    proc_sim->add_option("--step", step, "grid step for --two-sided");
    proc_sim->add_option("--paths", n_paths);
    proc_sim->add_option("--format", format)->check(CLI::IsMember({"csv", "binary"}));
    proc_sim->callback([&] {
        PowerFamilySpec spec(p, sigma2, mu);
        RandomStream stream(g.seed, g.stream);
        PathEnsemble ens =
            two_sided
                ? paths::extend_two_sided(spec, window, step, n_paths, stream, g.threads)
                : paths::simulate_hougaard(spec, TimeGrid::one_sided(parse_list(times_text)),
                                           n_paths, stream, g.threads);
        Output out(g.out);
        if (format == "binary") io::write_ensemble_binary(out.stream(), ens);
        else io::write_ensemble_csv(out.stream(), ens, base_meta(g, "process simulate"));
    });

    // fhm ----------------------------------------------------------------------
    double trunc = 0.0, eps = 1e-3, deficit = 1e-2;
    std::string eval_text = "1";
    auto* cmd_fhm = app.add_subcommand("fhm", "fractional Hougaard motion");
    auto add_fhm_opts = [&](CLI::App* sub, bool with_sim) {
        sub->add_option("--p", p)->required();
        sub->add_option("--sigma2", sigma2);
        sub->add_option("--mu", mu)->required();
        sub->add_option("--H", hurst)->required();
        if (with_sim) {
            sub->add_option("--window", trunc, "truncation window T (0 = auto from --eps)");
            sub->add_option("--step", step, "discretization step");
            sub->add_option("--eps", eps, "kernel tail-variance budget");
            sub->add_option("--deficit", deficit, "discretization variance budget");
            sub->add_option("--paths", n_paths);
        }
    };
    auto make_cfg = [&](double t_max, std::size_t paths_n) {
        PowerFamilySpec spec(p, sigma2, mu);
        const double h = hurst - 1.0 / params::alpha_of_p(p);
        const double T = trunc > 0.0 ? trunc : fhm::choose_truncation(h, t_max, eps);
        FHMConfig cfg(spec, hurst, T, step, paths_n, RandomStream(g.seed, g.stream));
        cfg.tail_epsilon = eps;
        cfg.variance_deficit = deficit;
        return cfg;
    };
    auto* fhm_sim = cmd_fhm->add_subcommand("simulate", "moving-average ensemble");
    add_fhm_opts(fhm_sim, true);
    fhm_sim->add_option("--times", eval_text, "comma-separated eval times");
    fhm_sim->callback([&] {
        auto times = parse_list(eval_text);
        double t_max = 0.0;
        for (double tv : times) t_max = std::max(t_max, tv);
        step = std::min(step, t_max / 16.0);
        auto cfg = make_cfg(t_max, n_paths);
        auto ens = fhm::simulate_fhm(cfg, times, g.threads);
        Output out(g.out);
        io::write_ensemble_csv(out.stream(), ens, base_meta(g, "fhm simulate"));
    });
    auto* fhm_var = cmd_fhm->add_subcommand("variance", "closed-form variance");
    add_fhm_opts(fhm_var, false);
    fhm_var->add_option("--t", t);
    fhm_var->callback([&] {
        trunc = 1.0;  // unused by the closed form; keep the config valid
        step = 0.125;
        auto cfg = make_cfg(t, 1);
        Output out(g.out);
        auto meta = base_meta(g, "fhm variance");
        meta.emplace_back("p", io::format_double(p));
        meta.emplace_back("H", io::format_double(hurst));
        io::write_csv(out.stream(), meta, {"t", "variance"},
                      {{t, fhm::fhm_variance(t, cfg)}});
    });
    auto* fhm_cgf_cmd = cmd_fhm->add_subcommand("cgf", "cumulant transform by quadrature");
    add_fhm_opts(fhm_cgf_cmd, false);
    fhm_cgf_cmd->add_option("--t", t);
    fhm_cgf_cmd->add_option("--zmin", zmin);
    fhm_cgf_cmd->add_option("--zmax", zmax);
    fhm_cgf_cmd->add_option("--zn", zn);
    fhm_cgf_cmd->callback([&] {
        trunc = 1.0;
        step = 0.125;
        auto cfg = make_cfg(t, 1);
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < zn; ++i) {
            const double z =
                zmin + (zmax - zmin) * static_cast<double>(i) / static_cast<double>(zn - 1);
            const auto c = fhm::fhm_cumulant_transform(z, t, cfg);
            rows.push_back({z, c.real(), c.imag()});
        }
        Output out(g.out);
        io::write_csv(out.stream(), base_meta(g, "fhm cgf"), {"z", "re_c", "im_c"}, rows);
    });

    // lamperti --------------------------------------------------------------
    std::string family = "hougaard";
    double rg_c = 2.0;
    std::string c_schedule_text = "4,16,64,256", t_grid_text = "1";
    bool h_override_given = false;
    double h_override = 0.0;
    auto* cmd_lamperti = app.add_subcommand("lamperti", "Lamperti transformations");
    auto family_of = [&]() -> FamilyPtr {
        if (family == "hougaard") return lamperti::hougaard_family(p, sigma2);
        if (family == "brownian") return lamperti::brownian_drift_family(sigma2);
        if (family == "random-walk") return lamperti::random_walk_drift_family();
        throw std::invalid_argument("unknown family: " + family);
    };
    auto add_family_opts = [&](CLI::App* sub) {
        sub->add_option("--family", family)->check(CLI::IsMember({"hougaard", "brownian",
                                                                  "random-walk"}));
        sub->add_option("--p", p);
        sub->add_option("--sigma2", sigma2);
        sub->add_option("--mu", mu)->required();
        sub->add_option("--t", t);
        sub->add_option("--n", n);
    };
    auto* lam_fwd = cmd_lamperti->add_subcommand("forward", "draws of Y(mu;t)");
    add_family_opts(lam_fwd);
    lam_fwd->add_option("--H", h_override)->each([&](const std::string&) { h_override_given = true; });
    lam_fwd->callback([&] {
        auto gen = family_of();
        const double h = h_override_given ? h_override : gen->hurst();
        auto draws = lamperti::lamperti_marginal_sample(*gen, mu, h, t, n,
                                                        RandomStream(g.seed, g.stream));
        emit_draws(g, "lamperti forward",
                   {{"family", gen->name()}, {"H", io::format_double(h)},
                    {"mu", io::format_double(mu)}, {"t", io::format_double(t)}},
                   draws);
    });
    auto* lam_inv = cmd_lamperti->add_subcommand(
        "inverse", "draws of X(mu;t) = t^H Y(mu t^{1-H}; log t), gaussian-shift base");
    lam_inv->add_option("--H", hurst)->required();
    lam_inv->add_option("--mu", mu)->required();
    lam_inv->add_option("--t", t);
    lam_inv->add_option("--n", n);
    lam_inv->callback([&] {
        auto gen = lamperti::gaussian_shift_family();
        auto draws = lamperti::inverse_lamperti_marginal(*gen, hurst, mu, t, n,
                                                         RandomStream(g.seed, g.stream));
        emit_draws(g, "lamperti inverse",
                   {{"H", io::format_double(hurst)}, {"mu", io::format_double(mu)},
                    {"t", io::format_double(t)}},
                   draws);
    });
    auto* lam_rg = cmd_lamperti->add_subcommand("rg", "draws of R_c^H X(mu;t)");
    add_family_opts(lam_rg);
    lam_rg->add_option("--c", rg_c)->required();
    lam_rg->callback([&] {
        auto gen = family_of();
        auto wrapped = lamperti::rg_apply(gen, rg_c, gen->hurst());
        auto map = lamperti::rg_param_map(*wrapped, mu, t);
        auto draws = wrapped->sample_marginal(mu, t, n, RandomStream(g.seed, g.stream));
        emit_draws(g, "lamperti rg",
                   {{"family", gen->name()}, {"c", io::format_double(rg_c)},
                    {"mu_scaled", io::format_double(map.mu_scaled)},
                    {"time_scaled", io::format_double(map.time_scaled)},
                    {"scale", io::format_double(map.scale)}},
                   draws);
    });
    auto* lam_conv = cmd_lamperti->add_subcommand(
        "converge", "random-walk-to-Brownian renormalization-group diagnostic");
    lam_conv->add_option("--mu", mu);
    lam_conv->add_option("--c-schedule", c_schedule_text);
    lam_conv->add_option("--t-grid", t_grid_text);
    lam_conv->add_option("--n", n);
    lam_conv->callback([&] {
        auto prelimit = lamperti::random_walk_drift_family();
        auto target = lamperti::brownian_drift_family(1.0);
        auto reports = lamperti::convergence_diagnostic(
            *prelimit, *target, 0.5, parse_list(c_schedule_text), mu, parse_list(t_grid_text), n,
            RandomStream(g.seed, g.stream));
        nlohmann::json j = nlohmann::json::array();
        for (const auto& rep : reports) j.push_back(nlohmann::json::parse(rep.to_json()));
        Output out(g.out);
        out.stream() << j.dump(2) << "\n";
    });

    // cov -----------------------------------------------------------------
    std::string grid_text = "1:8", d_text = "0,0.5,1,1.5,2", r_text = "0.5,1,2";
    auto* cmd_cov = app.add_subcommand("cov", "second-order analytics");
    auto* cov_table = cmd_cov->add_subcommand("table", "(s, t, cov) grid");
    cov_table->add_option("--p", p)->required();
    cov_table->add_option("--H", hurst)->required();
    cov_table->add_option("--mu", mu)->required();
    cov_table->add_option("--sigma2", sigma2);
    cov_table->add_option("--grid", grid_text, "a:b integer range or comma list");
    cov_table->callback([&] {
        auto v = VarianceFunction::power(sigma2, p);
        auto grid_vals = parse_range(grid_text);
        std::vector<std::vector<double>> rows;
        for (double s : grid_vals)
            for (double tt : grid_vals)
                rows.push_back({s, tt, covariance::cov(v, hurst, mu, s, tt)});
        Output out(g.out);
        auto meta = base_meta(g, "cov table");
        meta.emplace_back("p", io::format_double(p));
        meta.emplace_back("H", io::format_double(hurst));
        meta.emplace_back("mu", io::format_double(mu));
        meta.emplace_back("sigma2", io::format_double(sigma2));
        io::write_csv(out.stream(), meta, {"s", "t", "cov"}, rows);
    });
    auto* cov_corr = cmd_cov->add_subcommand("corr", "(r, D, rho) increment correlations");
    cov_corr->add_option("--D", d_text, "comma list of fractal dimensions");
    cov_corr->add_option("--r", r_text, "comma list of r = sqrt(s/t)");
    cov_corr->callback([&] {
        std::vector<std::vector<double>> rows;
        for (double r : parse_list(r_text))
            for (double d : parse_list(d_text))
                rows.push_back({r, d, covariance::increment_correlation(r, d)});
        Output out(g.out);
        io::write_csv(out.stream(), base_meta(g, "cov corr"), {"r", "D", "rho"}, rows);
    });

    // verify -----------------------------------------------------------------
    std::vector<std::string> suites;
    bool run_all = false, quick = false;
    std::string report_path;
    auto* cmd_verify = app.add_subcommand("verify", "run acceptance suites");
    cmd_verify->add_option("suites", suites, "suite names (a1..a11 or aliases)");
    cmd_verify->add_flag("--all", run_all, "run every suite");
    cmd_verify->add_flag("--quick", quick, "reduced Monte Carlo sizes, same thresholds");
    cmd_verify->add_option("--report", report_path, "write the JSON report here");
    int exit_code = 0;
    cmd_verify->callback([&] {
        std::vector<std::string> to_run;
        if (run_all) to_run = verify::suite_names();
        else
            for (const auto& s : suites) to_run.push_back(verify::resolve_suite(s));
        if (to_run.empty()) throw std::invalid_argument("verify: no suite given (try --all)");
        bool all_passed = true;
        nlohmann::json j = nlohmann::json::array();
        for (const auto& name : to_run) {
            auto result = verify::run_suite(name, quick, g.threads);
            all_passed = all_passed && result.passed;
            std::cout << (result.passed ? "[PASS] " : "[FAIL] ") << result.name << ": "
                      << result.title << "\n";
            for (const auto& rep : result.reports) {
                std::cout << "  " << (rep.passed ? "[pass] " : "[FAIL] ") << rep.label
                          << " (statistic " << io::format_double(rep.statistic) << " vs "
                          << io::format_double(rep.critical_value) << ")\n";
                j.push_back(nlohmann::json::parse(rep.to_json()));
            }
        }
        if (!report_path.empty()) {
            std::ofstream rep_out(report_path);
            rep_out << j.dump(2) << "\n";
        }
        exit_code = all_passed ? 0 : 1;
    });

    try {
        std::vector<const char*> argv_c;
        argv_c.push_back("hougaard");
        for (const auto& a : args) argv_c.push_back(a.c_str());
        app.parse(static_cast<int>(argv_c.size()), argv_c.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(merge_config(argc, argv));
    } catch (const hougaard::GuardError& e) {
        std::cerr << "guard error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
