#include "accelflow/experiments.hpp"

#include "accelflow/error.hpp"
#include "accelflow/nag.hpp"
#include "accelflow/reparam.hpp"
#include "accelflow/restart.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cmath>
#include <filesystem>
#include <functional>

namespace accelflow {

namespace {

namespace fs = std::filesystem;

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::string h_label(double h) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", h);
    return buf;
}

class Writer {
public:
    Writer(const ExperimentSpec& spec, ExperimentResult& result) : dir_(spec.out_dir), result_(result) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec || !fs::is_directory(dir_)) {
            throw IoError("cannot create output directory '" + dir_.string() + "'");
        }
    }

    void file(const std::string& name, const std::string& content, std::initializer_list<std::string> panels) {
        write_text_file((dir_ / name).string(), content);
        for (const std::string& p : panels) {
            result_.manifest.push_back({p, result_.experiment, name});
        }
    }

    void file(const std::string& name, const std::string& content, const std::vector<std::string>& panels) {
        write_text_file((dir_ / name).string(), content);
        for (const std::string& p : panels) {
            result_.manifest.push_back({p, result_.experiment, name});
        }
    }

    void manifest() { write_text_file((dir_ / "manifest.txt").string(), manifest_text(result_.manifest)); }

private:
    fs::path dir_;
    ExperimentResult& result_;
};

bool generalized_kind(ModelKind k) {
    switch (k) {
    case ModelKind::GOdeC:
    case ModelKind::GOdeUC:
    case ModelKind::OdeC:
    case ModelKind::OdeSC:
    case ModelKind::BlfC:
    case ModelKind::BlfSC:
        return true;
    default:
        return false;
    }
}

FlowOptions options_for(const ExperimentSpec& spec, double mu, double h) {
    FlowOptions o;
    o.eps = spec.eps;
    o.h = h;
    o.s = spec.s;
    o.mu = mu;
    return o;
}

std::string errors_csv(const std::vector<std::string>& names, const std::vector<std::vector<double>>& series,
                       const std::vector<double>& times) {
    std::vector<std::string> header{"k", "t"};
    header.insert(header.end(), names.begin(), names.end());
    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < times.size(); ++k) {
        std::vector<double> row{static_cast<double>(k), times[k]};
        for (const auto& s : series) {
            row.push_back(s[k]);
        }
        rows.push_back(std::move(row));
    }
    return table_csv(header, rows);
}

// ---- EXP1 / EXP2 ---------------------------------------------------------

ExperimentResult run_fidelity(const ExperimentSpec& spec, bool sc) {
    ExperimentResult res;
    res.experiment = sc ? "EXP2" : "EXP1";
    Writer w(spec, res);
    const FidelityResult fr = model_fidelity(spec, sc);
    res.requested = static_cast<int>(fr.model_order.size());
    res.diverged = fr.diverged;
    res.metrics = fr.metrics;

    const std::string tag = sc ? "exp2" : "exp1";
    const int fig_base = sc ? 4 : 2;
    for (std::size_t m = 0; m < fr.method_order.size(); ++m) {
        const std::string& method = fr.method_order[m];
        const std::string fig = "fig" + std::to_string(fig_base + static_cast<int>(m));
        const std::string name = tag + "_" + lower(method) + ".csv";
        w.file(name, trajectory_csv(fr.methods.at(method)), {fig + "a", fig + "b", fig + "c"});
    }
    for (const std::string& model : fr.model_order) {
        if (!fr.models.count(model)) {
            continue;
        }
        std::vector<std::string> panels;
        for (std::size_t m = 0; m < fr.method_order.size(); ++m) {
            const std::string fig = "fig" + std::to_string(fig_base + static_cast<int>(m));
            panels.insert(panels.end(), {fig + "a", fig + "b", fig + "c"});
        }
        w.file(tag + "_" + lower(model) + ".csv", trajectory_csv(fr.models.at(model)), panels);
    }
    for (std::size_t m = 0; m < fr.method_order.size(); ++m) {
        const std::string& method = fr.method_order[m];
        const Trajectory& ref = fr.methods.at(method);
        std::vector<std::string> names;
        std::vector<std::vector<double>> series;
        for (const std::string& model : fr.model_order) {
            if (!fr.models.count(model)) {
                continue;
            }
            names.push_back(model);
            series.push_back(deviation_metrics(fr.models.at(model), ref, 0, static_cast<int>(ref.size()) - 1).errors);
        }
        const std::string fig = "fig" + std::to_string(fig_base + static_cast<int>(m));
        w.file(tag + "_errors_" + lower(method) + ".csv", errors_csv(names, series, ref.times), {fig + "d"});
    }
    w.file(tag + "_metrics.csv", metrics_csv(res.metrics), {"summary"});
    for (const MetricRow& r : res.metrics) {
        res.summary.push_back(r.pair + " reduction " + format_double(r.reduction_pct) + "%");
    }
    for (const std::string& d : res.diverged) {
        res.summary.push_back(d + " diverged");
    }
    w.manifest();
    return res;
}

// ---- EXP3 ----------------------------------------------------------------

ExperimentResult run_sweep(const ExperimentSpec& spec) {
    ExperimentResult res;
    res.experiment = "EXP3";
    Writer w(spec, res);
    std::vector<bool> modes;
    if (spec.mu) {
        modes.push_back(*spec.mu > 0.0);
    } else {
        modes = {false, true};
    }
    const std::string prob(problem_name(spec.problem));
    const double horizon = spec.k_max;
    std::string maxdev = "mode,h,max_dev_ode,max_dev_blf,window_mean_ode,window_mean_blf\n";
    for (bool sc : modes) {
        ExperimentSpec s = spec;
        s.mu = sc ? spec.mu.value_or(0.001) : 0.0;
        if (sc && !(*s.mu > 0.0)) {
            throw ConfigSchemaError("EXP3 strongly convex mode requires mu > 0");
        }
        const Objective f = make_problem(s);
        const Vector x0 = initial_point(s);
        const std::vector<SweepRow> rows =
            h_sweep(f, x0, sc, spec.h_values, horizon, horizon / 3.0, 10.0, spec.eps, spec.substeps);
        int fig = 0;
        if (spec.problem == ProblemKind::Paper2d) {
            fig = sc ? 7 : 6;
        } else if (spec.problem == ProblemKind::RandQuad) {
            fig = sc ? 9 : 8;
        }
        const std::string mode = sc ? "sc" : "c";
        const std::string ode = sc ? "ODE-SC" : "ODE-C";
        const std::string blf = sc ? "BLF-SC" : "BLF-C";
        const std::string nag = sc ? "NAG-SC" : "NAG-C";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const SweepRow& r = rows[i];
            std::vector<double> times(r.ode.errors.size());
            for (std::size_t k = 0; k < times.size(); ++k) {
                times[k] = r.h * static_cast<double>(k);
            }
            const std::string name = "exp3_" + prob + "_" + mode + "_h" + h_label(r.h) + ".csv";
            std::vector<std::string> panels;
            if (fig != 0 && i < 3) {
                panels.push_back("fig" + std::to_string(fig) + static_cast<char>('a' + i));
            } else {
                panels.push_back("exp3-" + prob + "-" + mode + "-h" + h_label(r.h));
            }
            w.file(name, errors_csv({ode, blf}, {r.ode.errors, r.blf.errors}, times), panels);
            res.metrics.push_back({ode + "/" + blf + "@" + nag + ":h=" + h_label(r.h), r.ode.k_lo, r.ode.k_hi,
                                   r.blf.window_mean, r.ode.window_mean,
                                   reduction_pct(r.blf.window_mean, r.ode.window_mean)});
            maxdev += mode + "," + format_double(r.h) + "," + format_double(r.max_early_ode) + "," +
                      format_double(r.max_early_blf) + "," + format_double(r.ode.window_mean) + "," +
                      format_double(r.blf.window_mean) + "\n";
            res.summary.push_back(prob + " " + mode + " h=" + h_label(r.h) + ": ODE mean " +
                                  format_double(r.ode.window_mean) + ", BLF mean " +
                                  format_double(r.blf.window_mean) + ", max dev t<=10 " +
                                  format_double(r.max_early_ode));
        }
    }
    w.file("exp3_" + prob + "_metrics.csv", metrics_csv(res.metrics), {"summary"});
    w.file("exp3_" + prob + "_maxdev.csv", maxdev, {"summary"});
    w.manifest();
    return res;
}

// ---- EXP4 ----------------------------------------------------------------

ExperimentResult run_restart_experiment(const ExperimentSpec& spec) {
    ExperimentResult res;
    res.experiment = "EXP4";
    Writer w(spec, res);
    const std::string prob(problem_name(spec.problem));

    if (spec.problem != ProblemKind::Restart2d) {
        ExperimentSpec s = spec;
        s.mu = 0.0;
        const Objective f = make_problem(s);
        const Vector x0 = initial_point(s);
        const Schedule sched = su_growth(spec.eps, f.L(), 1.0).schedule(spec.k_max);
        RestartSettings rs;
        rs.step = [&sched](int k) { return sched.at(k).s; };
        rs.momentum = [&sched](int k) { return sched.at(k).b; };
        rs.k_min = spec.k_min;
        rs.k_max = spec.k_max;
        rs.scheme = RestartScheme::None;
        const RestartRun plain = run_restart(f, x0, rs);
        rs.scheme = RestartScheme::Ours;
        const RestartRun ours = run_restart(f, x0, rs);
        const std::string panel = spec.problem == ProblemKind::Paper2d ? "fig10a" : "fig10b";
        w.file("exp4_" + prob + "_nag-c.csv", trajectory_csv(plain.trajectory), {panel});
        w.file("exp4_" + prob + "_nag-c-r.csv", trajectory_csv(ours.trajectory), {panel});
        res.summary.push_back(prob + " NAG-C-R: " + std::to_string(ours.events.size()) + " restarts, final f " +
                              format_double(ours.trajectory.f_values.back()) + " vs NAG-C " +
                              format_double(plain.trajectory.f_values.back()));
    }

    if (spec.problem != ProblemKind::RandQuad) {
        ExperimentSpec s = spec;
        s.problem = ProblemKind::Restart2d;
        s.mu = 0.0;
        s.x0.reset();
        const Objective f = make_problem(s);
        const Vector x0 = initial_point(s);
        std::string summary = "scheme,monotone,first_violation,ratio_f9_f8,restarts\n";
        for (RestartScheme scheme : {RestartScheme::Ours, RestartScheme::Su}) {
            const RestartRun run = run_restart(f, x0, constant_step_restart(scheme, f.L(), 1, spec.k_max));
            const MonotoneReport mono = verify_monotone(run, f.f_star());
            const auto& fv = run.trajectory.f_values;
            const double ratio = fv.size() > 9 ? fv[9] / fv[8] : std::nan("");
            const std::string name(scheme_name(scheme));
            w.file("exp4_counter_" + name + ".csv", trajectory_csv(run.trajectory), {"counter"});
            summary += name + "," + (mono.ok ? "1" : "0") + "," +
                       (mono.first_violation ? std::to_string(*mono.first_violation) : std::string("-1")) + "," +
                       format_double(ratio) + "," + std::to_string(run.events.size()) + "\n";
            res.summary.push_back("counter " + name + ": monotone=" + (mono.ok ? "yes" : "no") +
                                  ", f9/f8=" + format_double(ratio));
        }
        w.file("exp4_counter_summary.csv", summary, {"counter"});
    }
    w.manifest();
    return res;
}

// ---- EXP5 ----------------------------------------------------------------

ExperimentResult run_reparam_experiment(const ExperimentSpec& spec) {
    ExperimentResult res;
    res.experiment = "EXP5";
    Writer w(spec, res);
    const double mu = spec.mu_or_default();
    if (!(mu > 0.0)) {
        throw ConfigSchemaError("EXP5 requires mu > 0");
    }
    ExperimentSpec s = spec;
    s.mu = mu;
    const Objective f = make_problem(s);
    const Vector x0 = initial_point(s);
    const double t_end = std::max<double>(spec.k_max, spec.k_max * std::sqrt(mu * f.L()));
    const TimeXZReport rep = verify_time_xz(f, mu, x0, t_end, 10);
    w.file("exp5_time_xz.csv", trajectory_csv(rep.time_xz), {"fig11a"});
    w.file("exp5_ode_sc_time.csv", trajectory_csv(rep.ode_sc_time), {"fig11a"});

    Trajectory r;
    const std::size_t kk = std::min<std::size_t>(rep.qr.r.size(), static_cast<std::size_t>(spec.k_max) + 1);
    std::vector<std::vector<double>> gap_rows;
    for (std::size_t k = 0; k < kk; ++k) {
        const double t = rep.sample_interval * static_cast<double>(k);
        r.push(t, rep.qr.r[k], f.value(rep.qr.r[k]));
        gap_rows.push_back({static_cast<double>(k), t, rep.gap[k]});
    }
    w.file("exp5_qr.csv", trajectory_csv(r), {"fig11b"});
    w.file("exp5_gap.csv", table_csv({"k", "t", "gap"}, gap_rows), {"fig11b"});
    double max_gap = 0.0;
    for (std::size_t k = 0; k < kk; ++k) {
        max_gap = std::max(max_gap, rep.gap[k]);
    }
    res.summary.push_back("TIME-XZ f(X) monotone: " + std::string(rep.f_monotone ? "yes" : "no"));
    res.summary.push_back("max |X(tau^-1(k)) - r_k| for k<=" + std::to_string(kk - 1) + ": " + format_double(max_gap));
    w.manifest();
    return res;
}

// ---- EXP6 ----------------------------------------------------------------

ExperimentResult run_certification(const ExperimentSpec& spec) {
    ExperimentResult res;
    res.experiment = "EXP6";
    Writer w(spec, res);
    std::string table = "problem,model,scaling,a,samples,monotonicity_violations,rate_violations,objective_increases,ok\n";
    for (ProblemKind p : {ProblemKind::Paper2d, ProblemKind::RandQuad}) {
        const std::vector<CertificationRow> rows = certify_catalog(p, spec, spec.k_max * spec.h, 1e-6);
        for (const CertificationRow& r : rows) {
            table += r.problem + "," + r.model + "," + r.scaling + "," + format_double(r.a) + "," +
                     std::to_string(r.samples) + "," + std::to_string(r.monotonicity_violations) + "," +
                     std::to_string(r.rate_violations) + "," + std::to_string(r.objective_increases) + "," +
                     (r.ok() ? "1" : "0") + "\n";
            res.summary.push_back(r.problem + " " + r.model + "/" + r.scaling + ": " + (r.ok() ? "certified" : "VIOLATIONS"));
        }
    }
    w.file("exp6_certification.csv", table, {"certification"});
    w.manifest();
    return res;
}

// ---- simulate / nag ------------------------------------------------------

ExperimentResult run_simulate(const ExperimentSpec& spec) {
    ExperimentResult res;
    res.experiment = "simulate";
    Writer w(spec, res);
    const double mu = spec.mu_or_default();
    const Objective f = make_problem(spec);
    const Vector x0 = initial_point(spec);
    const std::vector<std::string> models =
        spec.models.value_or(std::vector<std::string>{mu > 0.0 ? "ODE-SC" : "ODE-C"});
    for (const std::string& name : models) {
        const auto kind = model_from_name(name);
        if (!kind) {
            throw ConfigSchemaError("simulate: '" + name + "' is not a flow model");
        }
        ++res.requested;
        try {
            const Trajectory traj = simulate_model(f, *kind, x0, spec, mu);
            w.file("sim_" + lower(name) + ".csv", trajectory_csv(traj), {"simulate"});
            res.summary.push_back(name + ": f(t_end) = " + format_double(traj.f_values.back()));
        } catch (const DivergenceError& e) {
            res.diverged.push_back(name);
            res.summary.push_back(name + " diverged: " + e.what());
        }
    }
    w.manifest();
    return res;
}

ExperimentResult run_nag_experiment(const ExperimentSpec& spec) {
    ExperimentResult res;
    res.experiment = "nag";
    Writer w(spec, res);
    const double mu = spec.mu_or_default();
    const Objective f = make_problem(spec);
    const Vector x0 = initial_point(spec);
    std::vector<std::string> names{"NAG-C", "NAG-C-C"};
    if (mu > 0.0) {
        names.insert(names.end(), {"NAG-SC", "NAG-SC-C"});
    }
    names = spec.models.value_or(names);
    NagSettings settings;
    settings.h = spec.h;
    settings.k_max = spec.k_max;
    settings.eps = spec.eps;
    for (const std::string& name : names) {
        const auto v = variant_from_name(name);
        if (!v) {
            throw ConfigSchemaError("nag: '" + name + "' is not a Nesterov variant");
        }
        ++res.requested;
        const Trajectory traj = run_nag(f, x0, *v, settings);
        const bool finite = std::all_of(traj.points.begin(), traj.points.end(),
                                        [](const Vector& x) { return x.allFinite() && x.norm() <= kDivergenceNorm; });
        if (!finite) {
            res.diverged.push_back(name);
        }
        w.file("nag_" + lower(name) + ".csv", trajectory_csv(traj), {"nag"});
        res.summary.push_back(name + ": f(x_K) = " + format_double(traj.f_values.back()));
    }
    w.manifest();
    return res;
}

ExperimentResult run_suite(const ExperimentSpec& spec) {
    ExperimentResult all;
    all.experiment = "suite";
    auto base = [&](const char* id, ProblemKind p) {
        ExperimentSpec s = spec;
        s.experiment = id;
        s.problem = p;
        s.mu.reset();
        s.models.reset();
        s.x0.reset();
        return s;
    };
    const std::vector<ExperimentSpec> runs{
        base("EXP1", ProblemKind::Paper2d), base("EXP2", ProblemKind::Paper2d), base("EXP3", ProblemKind::Paper2d),
        base("EXP3", ProblemKind::RandQuad), base("EXP4", ProblemKind::Paper2d), base("EXP4", ProblemKind::RandQuad),
        base("EXP5", ProblemKind::Paper2d), base("EXP6", ProblemKind::Paper2d),
    };
    for (const ExperimentSpec& s : runs) {
        ExperimentResult r = run_experiment(s);
        all.manifest.insert(all.manifest.end(), r.manifest.begin(), r.manifest.end());
        all.metrics.insert(all.metrics.end(), r.metrics.begin(), r.metrics.end());
        for (const std::string& line : r.summary) {
            all.summary.push_back(r.experiment + ": " + line);
        }
        for (const std::string& d : r.diverged) {
            all.diverged.push_back(r.experiment + ":" + d);
        }
        all.requested += r.requested;
    }
    write_text_file((fs::path(spec.out_dir) / "manifest.txt").string(), manifest_text(all.manifest));
    return all;
}

} // namespace

std::string manifest_text(const std::vector<ManifestEntry>& entries) {
    std::string out;
    for (const ManifestEntry& e : entries) {
        out += e.panel + "=" + e.experiment + ":" + e.file + "\n";
    }
    return out;
}

Trajectory simulate_model(const Objective& f, ModelKind kind, const Vector& x0, const ExperimentSpec& spec,
                          double mu) {
    const FlowModel model = FlowModel::catalog(kind, f, options_for(spec, mu, spec.h));
    Trajectory traj = integrate_from(model, x0, spec.k_max * spec.h, spec.h, spec.substeps);
    if (generalized_kind(kind) && traj.aux.count("Z")) {
        const auto& Z = traj.aux.at("Z");
        std::vector<double>& e = traj.channels["energy"];
        for (std::size_t i = 0; i < traj.size(); ++i) {
            e.push_back(energy_general(traj.points[i], Z[i], traj.times[i], f, model.mirror(), model.scaling()->beta,
                                       model.mu()));
        }
    }
    return traj;
}

FidelityResult model_fidelity(const ExperimentSpec& spec, bool sc) {
    ExperimentSpec s = spec;
    const double mu = sc ? spec.mu.value_or(0.001) : 0.0;
    if (sc && !(mu > 0.0)) {
        throw ConfigSchemaError("EXP2 requires mu > 0");
    }
    s.mu = mu;
    const Objective f = make_problem(s);
    const Vector x0 = initial_point(s);

    FidelityResult out;
    NagSettings ns;
    ns.h = spec.h;
    ns.k_max = spec.k_max;
    ns.eps = spec.eps;
    const NagVariant constant = sc ? NagVariant::ConstantSC : NagVariant::ConstantC;
    const NagVariant scheduled = sc ? NagVariant::SC : NagVariant::C;
    for (NagVariant v : {constant, scheduled}) {
        const std::string name(variant_name(v));
        out.method_order.push_back(name);
        out.methods.emplace(name, run_nag(f, x0, v, ns));
    }

    out.model_order = spec.models.value_or(sc ? std::vector<std::string>{"ODE-SC", "WILSON", "SHI-SC"}
                                              : std::vector<std::string>{"ODE-C", "SU", "SHI-C"});
    for (const std::string& name : out.model_order) {
        const auto kind = model_from_name(name);
        if (!kind) {
            throw ConfigSchemaError("'" + name + "' is not a flow model");
        }
        try {
            out.models.emplace(name, simulate_model(f, *kind, x0, s, mu));
        } catch (const DivergenceError&) {
            out.diverged.push_back(name);
        }
    }

    const int K = spec.k_max;
    out.window_lo = static_cast<int>(std::lround(K / 3.0));
    out.window_hi = K;
    auto mean_err = [&](const std::string& model, const std::string& method) {
        return deviation_metrics(out.models.at(model), out.methods.at(method), out.window_lo, out.window_hi)
            .window_mean;
    };
    const std::string primary = sc ? "ODE-SC" : "ODE-C";
    if (out.models.count(primary)) {
        for (const std::string& model : out.model_order) {
            if (model == primary || !out.models.count(model)) {
                continue;
            }
            for (const std::string& method : out.method_order) {
                const double ref = mean_err(model, method);
                const double cand = mean_err(primary, method);
                out.metrics.push_back(
                    {primary + "/" + model + "@" + method, out.window_lo, out.window_hi, ref, cand, reduction_pct(ref, cand)});
            }
        }
        const double ref = mean_err(primary, out.method_order[0]);
        const double cand = mean_err(primary, out.method_order[1]);
        out.metrics.push_back({primary + "@" + out.method_order[1] + "/" + out.method_order[0], out.window_lo,
                               out.window_hi, ref, cand, reduction_pct(ref, cand)});
    }
    return out;
}

std::vector<SweepRow> h_sweep(const Objective& f, const Vector& x0, bool sc, const std::vector<double>& hs,
                              double horizon, double window_lo_time, double early_time, double eps,
                              int steps_per_unit_time) {
    if (!(horizon > 0.0) || steps_per_unit_time < 1) {
        throw ArgumentError("h_sweep: horizon and steps_per_unit_time must be positive");
    }
    std::vector<SweepRow> rows;
    for (double h : hs) {
        const int K = static_cast<int>(std::lround(horizon / h));
        if (K < 1) {
            throw ArgumentError("h_sweep: h exceeds the horizon");
        }
        const int substeps = std::max(1, static_cast<int>(std::lround(h * steps_per_unit_time)));
        NagSettings ns;
        ns.h = h;
        ns.k_max = K;
        ns.eps = eps;
        const Trajectory nag = run_nag(f, x0, sc ? NagVariant::SC : NagVariant::C, ns);
        FlowOptions o;
        o.eps = eps;
        o.h = h;
        o.mu = sc ? f.mu() : 0.0;
        const FlowModel ode = FlowModel::catalog(sc ? ModelKind::OdeSC : ModelKind::OdeC, f, o);
        const FlowModel blf = FlowModel::catalog(sc ? ModelKind::BlfSC : ModelKind::BlfC, f, o);
        const Trajectory to = integrate_from(ode, x0, K * h, h, substeps);
        const Trajectory tb = integrate_from(blf, x0, K * h, h, substeps);
        SweepRow row;
        row.h = h;
        row.strongly_convex = sc;
        const int lo = std::min(K, static_cast<int>(std::lround(window_lo_time / h)));
        row.ode = deviation_metrics(to, nag, lo, K);
        row.blf = deviation_metrics(tb, nag, lo, K);
        const int early = std::min(K, static_cast<int>(std::lround(early_time / h)));
        for (int k = 0; k <= early; ++k) {
            row.max_early_ode = std::max(row.max_early_ode, row.ode.errors[static_cast<std::size_t>(k)]);
            row.max_early_blf = std::max(row.max_early_blf, row.blf.errors[static_cast<std::size_t>(k)]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CertificationRow> certify_catalog(ProblemKind problem, const ExperimentSpec& spec, double horizon,
                                              double tol_rel) {
    struct Case {
        bool sc;
        std::string scaling;
        std::optional<double> a;
    };
    const std::vector<Case> cases{
        {false, "su", std::nullopt},          {false, "muehlebach-c", std::nullopt},
        {true, "wilson", std::nullopt},       {true, "muehlebach-sc", std::nullopt},
        {true, "chen", std::nullopt},         {false, "su", 1.0},
        {true, "wilson", 1.0},
    };
    const double mu_sc = spec.mu.value_or(0.001) > 0.0 ? spec.mu.value_or(0.001) : 0.001;
    std::vector<CertificationRow> out;
    for (const Case& c : cases) {
        ExperimentSpec s = spec;
        s.problem = problem;
        s.mu = c.sc ? mu_sc : 0.0;
        s.x0.reset();
        const Objective f = make_problem(s);
        const Vector x0 = initial_point(s);
        FlowOptions o = options_for(s, *s.mu, spec.h);
        o.scaling = c.scaling;
        o.a = c.a;
        const FlowModel model = FlowModel::catalog(c.sc ? ModelKind::GOdeUC : ModelKind::GOdeC, f, o);
        const Trajectory traj = integrate_from(model, x0, horizon, spec.h, spec.substeps);
        const EnergyForm form = c.a && *c.a == 1.0 ? EnergyForm::Single : EnergyForm::General;
        const EnergyTrace tr = certify(traj, f, model.mirror(), *model.scaling(), model.mu(), form, tol_rel);
        CertificationRow row;
        row.problem = std::string(problem_name(problem));
        row.model = std::string(model.name());
        row.scaling = c.scaling;
        row.a = c.a.value_or(-1.0);
        row.samples = traj.size();
        row.monotonicity_violations = tr.monotonicity.size();
        row.rate_violations = tr.rate.size();
        if (form == EnergyForm::Single) {
            for (std::size_t i = 1; i < tr.objective_gap.size(); ++i) {
                const double rise = tr.objective_gap[i] - tr.objective_gap[i - 1];
                if (rise > tol_rel * (1.0 + std::abs(tr.objective_gap[i - 1]))) {
                    ++row.objective_increases;
                }
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    validate_spec(spec);
    const std::string& id = spec.experiment;
    if (id == "EXP1") {
        return run_fidelity(spec, false);
    }
    if (id == "EXP2") {
        return run_fidelity(spec, true);
    }
    if (id == "EXP3") {
        return run_sweep(spec);
    }
    if (id == "EXP4") {
        return run_restart_experiment(spec);
    }
    if (id == "EXP5") {
        return run_reparam_experiment(spec);
    }
    if (id == "EXP6") {
        return run_certification(spec);
    }
    if (id == "simulate") {
        return run_simulate(spec);
    }
    if (id == "nag") {
        return run_nag_experiment(spec);
    }
    if (id == "suite") {
        return run_suite(spec);
    }
    throw ConfigSchemaError("unknown experiment '" + id + "'");
}

} // namespace accelflow
