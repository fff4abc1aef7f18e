// Command-line front end: every computation of the library with
// machine-readable CSV/JSON output. Output is byte-identical across runs for
// identical flags and seed.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gnbd/decomposition.hpp"
#include "gnbd/distribution.hpp"
#include "gnbd/idd.hpp"
#include "gnbd/levy.hpp"
#include "gnbd/specialfn.hpp"
#include "gnbd/verify.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Output {
    std::string format = "csv";
    std::string path;

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        f << text;
    }
};

json params_json(const gnbd::GnbdParams& p) {
    return json{{"nu", p.nu}, {"tau", p.tau}, {"m", p.m}, {"r", p.R}};
}

json meta_json(const gnbd::GnbdParams& p, json tolerances = json::object()) {
    return json{{"params", params_json(p)},
                {"tolerances", std::move(tolerances)},
                {"library_version", kVersion}};
}

std::string regime_name(gnbd::Regime r) {
    switch (r) {
        case gnbd::Regime::SubPoissonian: return "sub_poissonian";
        case gnbd::Regime::Poissonian: return "poissonian";
        case gnbd::Regime::SuperPoissonian: return "super_poissonian";
    }
    return "?";
}

std::string csv_atoms(const gnbd::SignedAtomicMeasure& m, const char* value_col) {
    std::ostringstream os;
    os << "x," << value_col << "\n";
    for (const auto& [k, w] : m.atoms()) os << k << "," << fmt(w) << "\n";
    return os.str();
}

json json_atoms(const gnbd::SignedAtomicMeasure& m) {
    json arr = json::array();
    for (const auto& [k, w] : m.atoms()) arr.push_back(json{{"x", k}, {"weight", w}});
    return arr;
}

int run(int argc, char** argv) {
    CLI::App app{"generalized negative binomial distribution toolkit"};
    app.require_subcommand(1);

    double nu = 2.0, tau = 0.3, R = 1.0;
    int m = 0;
    Output out;
    std::optional<std::uint64_t> seed;
    std::optional<int> j_max;
    double tol_truncation = gnbd::kTol.levy_truncation;
    gnbd::Tolerances tols_used{};

    auto add_common = [&](CLI::App* cmd, bool tau_required = true) {
        cmd->add_option("--nu", nu, "field parameter nu > 0")->required();
        auto* topt = cmd->add_option("--tau", tau, "light intensity in (0,1)");
        if (tau_required) topt->required();
        cmd->add_option("--m", m, "level index m >= 0");
        cmd->add_option("--R", R, "disc radius (default 1)");
        cmd->add_option("--format", out.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", out.path, "output file (default stdout)");
        cmd->add_option("--seed", seed, "RNG seed (sample/path only)");
    };

    auto* c_pmf = app.add_subcommand("pmf", "probability mass function");
    add_common(c_pmf);
    c_pmf->add_option("--j-max", j_max, "truncation index (default: auto)");

    auto* c_mgf = app.add_subcommand("mgf", "moment generating function at xi");
    add_common(c_mgf);
    double xi_re = 0.5, xi_im = 0.0;
    c_mgf->add_option("--xi-re", xi_re, "Re(xi)");
    c_mgf->add_option("--xi-im", xi_im, "Im(xi)");

    auto* c_moments = app.add_subcommand("moments", "closed-form mean and variance");
    add_common(c_moments);

    auto* c_mandel = app.add_subcommand("mandel", "Mandel parameter and regime");
    add_common(c_mandel, /*tau_required=*/false);
    std::string m_range;
    c_mandel->add_option("--m-range", m_range, "a:b -> CSV of tau_crit over m = a..b");

    auto* c_dec = app.add_subcommand("decompose", "atomic decomposition measure");
    add_common(c_dec);

    auto* c_levy = app.add_subcommand("levy", "Levy-Khintchine representation");
    add_common(c_levy);
    c_levy->add_option("--tol-truncation", tol_truncation, "measure truncation tolerance");

    auto* c_idd = app.add_subcommand("idd", "infinitely-divisible law (total variation)");
    add_common(c_idd);
    c_idd->add_option("--tol-truncation", tol_truncation, "measure truncation tolerance");

    auto* c_sample = app.add_subcommand("sample", "compound-Poisson draws");
    add_common(c_sample);
    double t_horizon = 1.0;
    int n_draws = 1;
    c_sample->add_option("--t", t_horizon, "time horizon (default 1)");
    c_sample->add_option("--n", n_draws, "number of draws");

    auto* c_path = app.add_subcommand("path", "compound-Poisson path");
    add_common(c_path);
    double horizon = 1.0;
    int n_steps = 16;
    c_path->add_option("--horizon", horizon, "path horizon");
    c_path->add_option("--steps", n_steps, "uniform grid steps merged into the path");

    auto* c_verify = app.add_subcommand("verify", "run the full identity suite");
    add_common(c_verify);
    c_verify->add_option("--tol-lk-reproduction", tols_used.lk_reproduction_abs, "LK reproduction tolerance");
    c_verify->add_option("--tol-decomposition", tols_used.decomposition_abs, "decomposition tolerance");
    c_verify->add_option("--tol-a-identities", tols_used.a_identities_abs, "A1/A2 identity tolerance");
    c_verify->add_option("--tol-idcf-ratio", tols_used.idcf_ratio_abs, "id-CF ratio tolerance");
    c_verify->add_option("--tol-moments", tols_used.moments_rel, "moment cross-check tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    CLI::App* cmd = app.get_subcommands().front();

    const bool wants_seed = cmd == c_sample || cmd == c_path;
    if (wants_seed && !seed) throw UsageError("--seed is required for sample/path");
    if (!wants_seed && seed) throw UsageError("--seed is only accepted for sample/path");
    if (cmd == c_sample && n_draws < 1) throw UsageError("--n must be >= 1");
    if (cmd == c_mandel && m_range.empty() && !c_mandel->count("--tau"))
        throw UsageError("mandel needs --tau (or --m-range for the critical-intensity table)");

    if (cmd == c_verify && out.format == "csv" && !c_verify->count("--format")) out.format = "json";

    gnbd::GnbdParams params{nu, tau, m, R};

    if (cmd == c_pmf) {
        gnbd::TruncatedPmf t = j_max ? gnbd::pmf(params, *j_max) : gnbd::pmf(params);
        if (out.format == "csv") {
            std::ostringstream os;
            os << "j,p_j\n";
            for (std::size_t j = 0; j < t.weights.size(); ++j)
                os << j << "," << fmt(t.weights[j]) << "\n";
            out.emit(os.str());
        } else {
            json doc{{"meta", meta_json(params, {{"truncation_weight",
                                                   gnbd::kTol.pmf_truncation_weight}})},
                     {"weights", t.weights},
                     {"tail_bound", t.tail_bound}};
            out.emit(doc.dump(2) + "\n");
        }
    } else if (cmd == c_mgf) {
        std::complex<double> v = gnbd::mgf(params, {xi_re, xi_im});
        if (out.format == "csv") {
            out.emit("re,im\n" + fmt(v.real()) + "," + fmt(v.imag()) + "\n");
        } else {
            json doc{{"meta", meta_json(params)},
                     {"xi", {{"re", xi_re}, {"im", xi_im}}},
                     {"value", {{"re", v.real()}, {"im", v.imag()}}}};
            out.emit(doc.dump(2) + "\n");
        }
    } else if (cmd == c_moments) {
        gnbd::Moments mo = gnbd::moments(params);
        if (out.format == "csv") {
            out.emit("mean,variance\n" + fmt(mo.mean) + "," + fmt(mo.variance) + "\n");
        } else {
            json doc{{"meta", meta_json(params)}, {"mean", mo.mean}, {"variance", mo.variance}};
            out.emit(doc.dump(2) + "\n");
        }
    } else if (cmd == c_mandel) {
        if (!m_range.empty()) {
            auto colon = m_range.find(':');
            if (colon == std::string::npos)
                throw UsageError("--m-range expects a:b");
            int lo = std::stoi(m_range.substr(0, colon));
            int hi = std::stoi(m_range.substr(colon + 1));
            if (lo < 0 || hi < lo) throw UsageError("--m-range expects 0 <= a <= b");
            if (out.format == "csv") {
                std::ostringstream os;
                os << "m,tau_crit,rho\n";
                for (int mm = lo; mm <= hi; ++mm) {
                    double tc = gnbd::tau_critical(nu, mm);
                    os << mm << "," << fmt(tc) << "," << fmt(std::sqrt(tc)) << "\n";
                }
                out.emit(os.str());
            } else {
                json arr = json::array();
                for (int mm = lo; mm <= hi; ++mm) {
                    double tc = gnbd::tau_critical(nu, mm);
                    arr.push_back(json{{"m", mm}, {"tau_crit", tc}, {"rho", std::sqrt(tc)}});
                }
                json doc{{"meta", json{{"nu", nu}, {"library_version", kVersion}}}, {"rows", arr}};
                out.emit(doc.dump(2) + "\n");
            }
        } else {
            gnbd::MandelReport r = gnbd::mandel(params);
            if (out.format == "csv") {
                out.emit("mean,variance,q,tau_crit,rho,regime\n" + fmt(r.mean) + "," +
                         fmt(r.variance) + "," + fmt(r.q) + "," + fmt(r.tau_crit) + "," +
                         fmt(r.rho) + "," + regime_name(r.regime) + "\n");
            } else {
                json doc{{"meta", meta_json(params)}, {"mean", r.mean},
                         {"variance", r.variance},  {"q", r.q},
                         {"tau_crit", r.tau_crit},  {"rho", r.rho},
                         {"regime", regime_name(r.regime)}};
                out.emit(doc.dump(2) + "\n");
            }
        }
    } else if (cmd == c_dec) {
        gnbd::SignedAtomicMeasure meas = gnbd::decomposition_measure(nu, m, tau);
        if (out.format == "csv") {
            out.emit(csv_atoms(meas, "weight"));
        } else {
            json doc{{"meta", meta_json(params)}, {"atoms", json_atoms(meas)},
                     {"total_mass", meas.total_mass()}};
            out.emit(doc.dump(2) + "\n");
        }
    } else if (cmd == c_levy) {
        gnbd::LevyRepresentation rep = gnbd::lk_representation(params, tol_truncation);
        if (out.format == "csv") {
            out.emit(csv_atoms(rep.measure, "weight"));
        } else {
            json doc{{"meta", meta_json(params, {{"truncation", tol_truncation}})},
                     {"drift", rep.drift},
                     {"truncation_error", rep.truncation_error},
                     {"nb_constant", gnbd::nb_measure_constant(params)},
                     {"atoms", json_atoms(rep.measure)}};
            out.emit(doc.dump(2) + "\n");
        }
    } else if (cmd == c_idd) {
        gnbd::CompoundPoissonSpec spec = gnbd::compound_poisson_spec(nu, tau, m, tol_truncation);
        gnbd::IntensityReport ir = gnbd::intensity_report(nu, tau, m);
        if (out.format == "csv") {
            out.emit(csv_atoms(spec.jump_pmf, "probability"));
        } else {
            json doc{{"meta", meta_json(params, {{"truncation", tol_truncation}})},
                     {"lambda", ir.lambda},
                     {"lambda_printed", ir.lambda_printed},
                     {"drift", spec.drift},
                     {"jump_pmf", json_atoms(spec.jump_pmf)}};
            out.emit(doc.dump(2) + "\n");
        }
    } else if (cmd == c_sample) {
        gnbd::CompoundPoissonSpec spec = gnbd::compound_poisson_spec(nu, tau, m, tol_truncation);
        if (out.format == "csv") {
            std::ostringstream os;
            os << "i,value\n";
            for (int i = 0; i < n_draws; ++i)
                os << i << "," << gnbd::sample_compound_poisson(spec, t_horizon, *seed, i) << "\n";
            out.emit(os.str());
        } else {
            json arr = json::array();
            for (int i = 0; i < n_draws; ++i)
                arr.push_back(gnbd::sample_compound_poisson(spec, t_horizon, *seed, i));
            json doc{{"meta", meta_json(params)}, {"t", t_horizon}, {"seed", *seed},
                     {"values", arr}};
            out.emit(doc.dump(2) + "\n");
        }
    } else if (cmd == c_path) {
        gnbd::CompoundPoissonSpec spec = gnbd::compound_poisson_spec(nu, tau, m, tol_truncation);
        auto path = gnbd::simulate_path(spec, horizon, n_steps, *seed);
        if (out.format == "csv") {
            std::ostringstream os;
            os << "time,jumps_sum,drift_accrual,value\n";
            for (const auto& pt : path)
                os << fmt(pt.time) << "," << pt.jumps << "," << fmt(pt.drift_accrual) << ","
                   << fmt(pt.value) << "\n";
            out.emit(os.str());
        } else {
            json arr = json::array();
            for (const auto& pt : path)
                arr.push_back(json{{"time", pt.time},
                                   {"jumps_sum", pt.jumps},
                                   {"drift_accrual", pt.drift_accrual},
                                   {"value", pt.value}});
            json doc{{"meta", meta_json(params)}, {"horizon", horizon}, {"seed", *seed},
                     {"points", arr}};
            out.emit(doc.dump(2) + "\n");
        }
    } else if (cmd == c_verify) {
        gnbd::VerificationReport rep = gnbd::run_verification(params, tols_used);
        if (out.format == "csv") {
            std::ostringstream os;
            os << "check,pass,max_err,tol,note\n";
            for (const auto& c : rep.checks)
                os << c.name << "," << (c.pass ? "true" : "false") << "," << fmt(c.max_err) << ","
                   << fmt(c.tol) << ",\"" << c.note << "\"\n";
            out.emit(os.str());
        } else {
            json tols{{"lk_reproduction", tols_used.lk_reproduction_abs},
                      {"decomposition", tols_used.decomposition_abs},
                      {"a_identities", tols_used.a_identities_abs},
                      {"idcf_ratio", tols_used.idcf_ratio_abs},
                      {"moments", tols_used.moments_rel}};
            json checks = json::array();
            for (const auto& c : rep.checks)
                checks.push_back(json{{"name", c.name},
                                      {"pass", c.pass},
                                      {"max_err", c.max_err},
                                      {"tol", c.tol},
                                      {"note", c.note}});
            const auto& k = rep.constants;
            json doc{{"meta", meta_json(params, tols)},
                     {"all_pass", rep.all_pass()},
                     {"checks", checks},
                     {"resolved_constants",
                      json{{"nb_constant_printed", k.nb_constant_printed},
                           {"nb_constant_resolved", k.nb_constant_resolved},
                           {"a2_sign_printed", k.a2_sign_printed},
                           {"a2_sign_resolved", k.a2_sign_resolved},
                           {"lambda_printed", k.lambda_printed},
                           {"lambda_corrected", k.lambda_corrected},
                           {"idcf_ratio_measured", k.idcf_ratio_measured},
                           {"idcf_ratio_expected", k.idcf_ratio_expected},
                           {"q0_center_atom", k.q0_center_atom}}}};
            out.emit(doc.dump(2) + "\n");
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const gnbd::ConvergenceError& e) {
        std::cout << "{\"error\":\"convergence\",\"message\":\"" << e.what() << "\"}\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cout << "{\"error\":\"domain\",\"message\":\"" << e.what() << "\"}\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
