#include "cvm/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "cvm/errors.hpp"
#include "cvm/patterns.hpp"
#include "cvm/thermo.hpp"

namespace cvm {

namespace {

std::string f6(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// Worker count: CVM2D_THREADS caps the pool; otherwise hardware concurrency.
unsigned pool_size(std::size_t tasks) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("CVM2D_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v <= 1024) n = static_cast<unsigned>(v);
    }
    if (tasks < n) n = static_cast<unsigned>(tasks);
    return n == 0 ? 1 : n;
}

// Runs fn(0..n-1) on a pull-based pool. Task outputs must go to disjoint
// slots so the schedule cannot affect results.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const unsigned workers = pool_size(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

struct TrialOutcome {
    double y2 = 0, z1 = 0, z3 = 0, delta = 0;
    double enthalpy = 0, entropy = 0, free_energy = 0;
};

std::vector<double> checked_h_values(const SweepSpec& spec) {
    std::vector<double> hs = spec.h_values.empty() ? default_h_values() : spec.h_values;
    for (double h : hs)
        if (!(h > 0.0))
            throw domain_error("sweep: h values must be positive, got " + std::to_string(h));
    return hs;
}

MinimizeConfig trial_config(const SweepSpec& spec, double h, double eps0, std::uint64_t seed) {
    MinimizeConfig cfg = spec.base;
    cfg.params.eps0 = eps0;
    cfg.params.eps1 = eps1_from_h(h);
    cfg.target_x1 = spec.x1;
    cfg.seed = seed;
    return cfg;
}

double sweep_eps0(const SweepSpec& spec) {
    return spec.eps0_from_composition ? eps0_from_x1(spec.x1) : spec.base.params.eps0;
}

int checked_n_active(const SweepSpec& spec) {
    new_uniform(spec.rows, spec.cols, UnitState::B);  // dimension validation
    if (spec.num_trials < 1) throw domain_error("sweep: num_trials must be >= 1");
    if (!(spec.x1 >= 0.0) || !(spec.x1 <= 1.0))
        throw domain_error("sweep: x1 must be in [0,1], got " + std::to_string(spec.x1));
    return static_cast<int>(std::llround(spec.x1 * spec.rows * spec.cols));
}

Stats column(const std::vector<TrialOutcome>& out, std::size_t lo, std::size_t n,
             double TrialOutcome::* field) {
    std::vector<double> v(n);
    for (std::size_t t = 0; t < n; ++t) v[t] = out[lo + t].*field;
    return stats_of(v);
}

void append_stats(std::string& row, const Stats& s) {
    row += ',';
    row += f6(s.mean);
    row += ',';
    row += f6(s.stddev);
}

// Seed offset decorrelating the perturbation stream from the descent
// stream while staying a pure function of the trial seed. The second
// descent reuses the trial seed: from a converged state it accepts
// nothing, so fraction 0 reproduces the first minimum exactly.
constexpr std::uint64_t kPerturbStream = 0x9e3779b97f4a7c15ULL;

double bisect_h(const std::function<double(double)>& curve, double target) {
    double lo = 1.0 / 3.0 + 1e-9;
    double hi = 3.0 - 1e-9;
    double flo = curve(lo) - target;
    double fhi = curve(hi) - target;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0)) return std::nan("");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = curve(mid) - target;
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

Stats stats_of(const std::vector<double>& values) {
    Stats s;
    const std::size_t n = values.size();
    if (n == 0) return s;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(n);
    if (n > 1) {
        double sq = 0.0;
        for (double v : values) sq += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(sq / static_cast<double>(n - 1));
    }
    return s;
}

std::vector<double> default_h_values() {
    std::vector<double> hs;
    for (int i = 0; i <= 10; ++i) hs.push_back(0.8 + 0.1 * i);
    return hs;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    const std::vector<double> hs = checked_h_values(spec);
    const int n_active = checked_n_active(spec);
    const double eps0 = sweep_eps0(spec);
    const std::size_t nt = static_cast<std::size_t>(spec.num_trials);

    std::vector<TrialOutcome> out(hs.size() * nt);
    parallel_for(out.size(), [&](std::size_t idx) {
        const std::size_t hi = idx / nt;
        const std::size_t t = idx % nt;
        const std::uint64_t seed = spec.base.seed + t;
        const Grid g = new_random(spec.rows, spec.cols, n_active, seed);
        const MinimizeResult r = minimize(g, trial_config(spec, hs[hi], eps0, seed));
        out[idx] = {r.final_fractions.y2, r.final_fractions.z1, r.final_fractions.z3,
                    r.final_report.delta_term, r.final_report.enthalpy,
                    r.final_report.entropy, r.final_report.free_energy};
    });

    std::vector<SweepRow> rows(hs.size());
    for (std::size_t hi = 0; hi < hs.size(); ++hi) {
        SweepRow& row = rows[hi];
        row.h = hs[hi];
        const std::size_t lo = hi * nt;
        row.y2 = column(out, lo, nt, &TrialOutcome::y2);
        row.z1 = column(out, lo, nt, &TrialOutcome::z1);
        row.z3 = column(out, lo, nt, &TrialOutcome::z3);
        row.delta_term = column(out, lo, nt, &TrialOutcome::delta);
        row.enthalpy = column(out, lo, nt, &TrialOutcome::enthalpy);
        row.entropy = column(out, lo, nt, &TrialOutcome::entropy);
        row.free_energy = column(out, lo, nt, &TrialOutcome::free_energy);
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string s = "# cvm2d.sweep.v1\n"
                    "h,y2_mean,y2_std,z1_mean,z1_std,z3_mean,z3_std,delta_mean,delta_std,"
                    "enthalpy_mean,enthalpy_std,entropy_mean,entropy_std,"
                    "free_energy_mean,free_energy_std\n";
    for (const SweepRow& r : rows) {
        std::string row = f6(r.h);
        append_stats(row, r.y2);
        append_stats(row, r.z1);
        append_stats(row, r.z3);
        append_stats(row, r.delta_term);
        append_stats(row, r.enthalpy);
        append_stats(row, r.entropy);
        append_stats(row, r.free_energy);
        s += row;
        s += '\n';
    }
    return s;
}

std::vector<PerturbRow> run_perturb_study(const SweepSpec& spec, double fraction) {
    if (!(fraction >= 0.0) || !(fraction <= 1.0))
        throw domain_error("perturb study: fraction must be in [0,1], got " +
                           std::to_string(fraction));
    const std::vector<double> hs = checked_h_values(spec);
    const int n_active = checked_n_active(spec);
    const double eps0 = sweep_eps0(spec);
    const std::size_t nt = static_cast<std::size_t>(spec.num_trials);

    struct Outcome {
        double f1 = 0, f2 = 0, gap = 0, y2 = 0;
    };
    std::vector<Outcome> out(hs.size() * nt);
    parallel_for(out.size(), [&](std::size_t idx) {
        const std::size_t hi = idx / nt;
        const std::size_t t = idx % nt;
        const std::uint64_t seed = spec.base.seed + t;
        const Grid g = new_random(spec.rows, spec.cols, n_active, seed);
        const MinimizeConfig cfg = trial_config(spec, hs[hi], eps0, seed);

        const MinimizeResult first = minimize(g, cfg);
        const Grid shaken = perturb(first.final_grid, fraction, seed ^ kPerturbStream);
        const MinimizeResult second = minimize(shaken, cfg);

        out[idx] = {first.final_report.free_energy, second.final_report.free_energy,
                    std::fabs(first.final_report.free_energy - second.final_report.free_energy),
                    second.final_fractions.y2};
    });

    std::vector<PerturbRow> rows(hs.size());
    for (std::size_t hi = 0; hi < hs.size(); ++hi) {
        std::vector<double> f1(nt), f2(nt), gap(nt), y2(nt);
        for (std::size_t t = 0; t < nt; ++t) {
            const Outcome& o = out[hi * nt + t];
            f1[t] = o.f1;
            f2[t] = o.f2;
            gap[t] = o.gap;
            y2[t] = o.y2;
        }
        rows[hi].h = hs[hi];
        rows[hi].f_before = stats_of(f1);
        rows[hi].f_after = stats_of(f2);
        rows[hi].gap = stats_of(gap);
        rows[hi].y2_after = stats_of(y2);
    }
    return rows;
}

std::string perturb_csv(const std::vector<PerturbRow>& rows) {
    std::string s = "# cvm2d.perturb.v1\n"
                    "h,f_before_mean,f_before_std,f_after_mean,f_after_std,"
                    "gap_mean,gap_std,y2_after_mean,y2_after_std\n";
    for (const PerturbRow& r : rows) {
        std::string row = f6(r.h);
        append_stats(row, r.f_before);
        append_stats(row, r.f_after);
        append_stats(row, r.gap);
        append_stats(row, r.y2_after);
        s += row;
        s += '\n';
    }
    return s;
}

std::string analytic_csv(double h_min, double h_max, double step) {
    if (!(step > 0.0))
        throw domain_error("analytic table: step must be positive, got " + std::to_string(step));
    if (!(h_max >= h_min))
        throw domain_error("analytic table: h_max must be >= h_min");
    std::string s = "# cvm2d.analytic.v1\n"
                    "h,delta_denom,y1,y2,w1,w2,z1,z2,z3,physical\n";
    const int n = static_cast<int>(std::floor((h_max - h_min) / step + 1e-9)) + 1;
    for (int i = 0; i < n; ++i) {
        const double h = h_min + step * i;
        const EquilibriumSolution sol = equilibrium(h);
        const ConfigFractions& fr = sol.fractions;
        s += f6(h);
        for (double v : {sol.delta_denom, fr.y1, fr.y2, fr.w1, fr.w2, fr.z1, fr.z2, fr.z3}) {
            s += ',';
            s += f6(v);
        }
        s += sol.physical ? ",1\n" : ",0\n";
    }
    return s;
}

HEstimateReport estimate_h_report(const Grid& g) {
    const ConfigCounts k = count(g);
    const ConfigFractions fr = fractions(k, g.size());
    HEstimateReport rep;
    rep.fractions = fr;
    rep.estimate = estimate_h(fr);
    rep.h_from_y2 = bisect_h([](double h) { return equilibrium(h).fractions.y2; }, fr.y2);
    rep.h_from_z1 = bisect_h([](double h) { return equilibrium(h).fractions.z1; }, fr.z1);
    rep.h_from_z3 = bisect_h([](double h) { return equilibrium(h).fractions.z3; }, fr.z3);

    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (double v : {rep.h_from_y2, rep.h_from_z1, rep.h_from_z3}) {
        if (std::isnan(v)) continue;
        if (!any) {
            lo = hi = v;
            any = true;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    rep.spread = any ? hi - lo : std::nan("");
    return rep;
}

std::string estimate_csv(const HEstimateReport& rep) {
    std::string s = "# cvm2d.estimate.v1\n"
                    "h_estimate,h_from_y2,h_from_z1,h_from_z3,h_spread\n";
    s += f6(rep.estimate);
    for (double v : {rep.h_from_y2, rep.h_from_z1, rep.h_from_z3, rep.spread}) {
        s += ',';
        s += f6(v);
    }
    s += '\n';
    return s;
}

std::string render_pgm(const Grid& g) {
    std::string s = "P2\n" + std::to_string(g.cols) + " " + std::to_string(g.rows) + "\n1\n";
    for (int r = 0; r < g.rows; ++r) {
        for (int c = 0; c < g.cols; ++c) {
            if (c) s += ' ';
            s += (g.at(r, c) == UnitState::A) ? '1' : '0';
        }
        s += '\n';
    }
    return s;
}

std::string eps0_table_csv(const std::vector<double>& eps0_values, long long n_units) {
    if (n_units <= 0) throw domain_error("eps0 table: n_units must be positive");
    std::string s = "# cvm2d.eps0_table.v1\n"
                    "eps0,x1,y1,z1,Z1_up_down,Z1_single\n";
    for (double eps0 : eps0_values) {
        const double x1 = x1_from_eps0(eps0);
        const ConfigFractions base = random_fractions(x1);
        s += f6(eps0);
        for (double v : {x1, base.y1, base.z1, base.z1 * 2.0 * n_units, base.z1 * n_units}) {
            s += ',';
            s += f6(v);
        }
        s += '\n';
    }
    return s;
}

std::string trajectory_csv(const Trajectory& t) {
    std::string s = "# cvm2d.trajectory.v1\nstep,accepted,free_energy,y2,z1,z3\n";
    for (const TrajectoryStep& step : t.steps) {
        s += std::to_string(step.proposal);
        s += step.accepted ? ",1" : ",0";
        for (double v : {step.free_energy, step.y2, step.z1, step.z3}) {
            s += ',';
            s += f6(v);
        }
        s += '\n';
    }
    return s;
}

std::string report_csv(const ThermoReport& r) {
    std::string s = "# cvm2d.report.v1\nenthalpy,entropy,free_energy,delta\n";
    s += f6(r.enthalpy);
    for (double v : {r.entropy, r.free_energy, r.delta_term}) {
        s += ',';
        s += f6(v);
    }
    s += '\n';
    return s;
}

namespace {

Grid read_grid_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw io_error("read failed: " + path);
    return from_text(ss.str());
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw io_error("write failed: " + path);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_file(out_path, content);
}

// Parameter-range guidance. Soft warnings only; nothing is clamped.
void lint_parameters(double h, double eps0) {
    if (h > 1.5)
        std::cerr << "warning: h = " << h << " exceeds the useful range 1.0..1.5; "
                  << "configuration variables plateau beyond h = 1.3, so larger values "
                  << "add cost without effect\n";
    if (eps0 > 3.0)
        std::cerr << "warning: eps0 = " << eps0 << " is outside the useful range (< 3); "
                  << "activation this strong drives x1 toward zero\n";
}

PatternKind pattern_kind_from_name(const std::string& name) {
    if (name == "scale-free") return PatternKind::scale_free_like;
    if (name == "rich-club") return PatternKind::rich_club_like;
    if (name == "very-small-rich-club") return PatternKind::very_small_rich_club;
    if (name == "random") return PatternKind::random_uniform;
    if (name == "stripes") return PatternKind::stripes;
    throw domain_error("unknown pattern: " + name);
}

std::string counts_csv(const ConfigCounts& k) {
    std::string s = "# cvm2d.counts.v1\n"
                    "x1,x2,y1,y2,y3,w1,w2,w3,z1,z2,z3,z4,z5,z6,triplet_orientations\n";
    const long long v[14] = {k.x1, k.x2, k.y1, k.y2, k.y3, k.w1, k.w2,
                             k.w3, k.z1, k.z2, k.z3, k.z4, k.z5, k.z6};
    for (int i = 0; i < 14; ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    s += ',';
    s += std::to_string(k.triplet_orientations);
    s += '\n';
    return s;
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"2-D cluster-variation thermodynamics on a toroidal bistate lattice"};
    app.require_subcommand(1);

    int rows = 16, cols = 16;
    double x1 = 0.5;
    double h = 1.0, eps0 = 0.0, eps1 = 0.0;
    std::uint64_t seed = 0;
    int trials = 20;
    int patience = 2000, max_sweeps = 200;
    long long record_every = 1;
    bool incremental = false;
    std::string out_path;
    std::string grid_path;

    // sweep / perturb-study
    std::vector<double> h_values;
    bool eps0_from_comp = false;
    double fraction = 0.1;

    CLI::App* sweep = app.add_subcommand("sweep", "minimize trials over a range of h, tabulate means");
    sweep->add_option("--rows", rows);
    sweep->add_option("--cols", cols);
    sweep->add_option("--x1", x1, "composition (A fraction)");
    sweep->add_option("--h-values", h_values, "h points (default 0.8..1.8 step 0.1)");
    sweep->add_option("--trials", trials);
    sweep->add_option("--seed", seed, "base seed; trial i uses seed+i");
    sweep->add_option("--eps0", eps0);
    sweep->add_flag("--eps0-from-x1", eps0_from_comp, "derive eps0 from the composition");
    sweep->add_option("--patience", patience);
    sweep->add_option("--max-sweeps", max_sweeps);
    sweep->add_flag("--incremental", incremental, "evaluate swaps by local deltas");
    sweep->add_option("--out", out_path, "CSV path (stdout when omitted)");

    CLI::App* pstudy = app.add_subcommand("perturb-study",
                                          "minimize, shake a fraction of cells, minimize again");
    pstudy->add_option("--rows", rows);
    pstudy->add_option("--cols", cols);
    pstudy->add_option("--x1", x1, "composition (A fraction)");
    pstudy->add_option("--h-values", h_values, "h points (default 0.8..1.8 step 0.1)");
    pstudy->add_option("--trials", trials);
    pstudy->add_option("--seed", seed, "base seed; trial i uses seed+i");
    pstudy->add_option("--eps0", eps0);
    pstudy->add_flag("--eps0-from-x1", eps0_from_comp, "derive eps0 from the composition");
    pstudy->add_option("--fraction", fraction, "fraction of cells to shake");
    pstudy->add_option("--patience", patience);
    pstudy->add_option("--max-sweeps", max_sweeps);
    pstudy->add_flag("--incremental", incremental, "evaluate swaps by local deltas");
    pstudy->add_option("--out", out_path, "CSV path (stdout when omitted)");

    double h_min = 0.5, h_max = 2.5, h_step = 0.1;
    CLI::App* analytic_cmd = app.add_subcommand("analytic", "closed-form equilibrium curve");
    analytic_cmd->add_option("--h-min", h_min);
    analytic_cmd->add_option("--h-max", h_max);
    analytic_cmd->add_option("--step", h_step)->check(CLI::PositiveNumber);
    analytic_cmd->add_option("--out", out_path, "CSV path (stdout when omitted)");

    std::string triplet_mode = "both";
    CLI::App* count_cmd = app.add_subcommand("count", "configuration-variable tallies of a grid");
    count_cmd->add_option("--grid", grid_path, "grid text file")->required();
    count_cmd->add_option("--triplet-mode", triplet_mode)
        ->check(CLI::IsMember({"both", "single"}));
    count_cmd->add_option("--out", out_path, "CSV path (stdout when omitted)");

    CLI::App* est_cmd = app.add_subcommand("estimate-h", "read h back from a grid's fractions");
    est_cmd->add_option("--grid", grid_path, "grid text file")->required();
    est_cmd->add_option("--out", out_path, "CSV path (stdout when omitted)");

    std::string pattern_name;
    int n_active = -1;
    std::string out_prefix = "minimized";
    CLI::App* min_cmd = app.add_subcommand("minimize", "descend one grid to a free-energy minimum");
    min_cmd->set_help_flag("--help", "print this help and exit");  // frees -h for the field strength
    CLI::Option* min_grid = min_cmd->add_option("--grid", grid_path, "grid text file");
    CLI::Option* min_pattern =
        min_cmd->add_option("--pattern", pattern_name,
                            "scale-free|rich-club|very-small-rich-club|random|stripes");
    min_grid->excludes(min_pattern);
    min_pattern->excludes(min_grid);
    min_cmd->add_option("--rows", rows);
    min_cmd->add_option("--cols", cols);
    min_cmd->add_option("--x1", x1, "composition for generated patterns and the descent target");
    min_cmd->add_option("--n-active", n_active, "overrides --x1 for generated patterns");
    CLI::Option* min_h = min_cmd->add_option("-h,--h", h, "exp(2 eps1)");
    CLI::Option* min_eps1 = min_cmd->add_option("--eps1", eps1);
    min_h->excludes(min_eps1);
    min_eps1->excludes(min_h);
    min_cmd->add_option("--eps0", eps0);
    min_cmd->add_option("--seed", seed);
    min_cmd->add_option("--patience", patience);
    min_cmd->add_option("--max-sweeps", max_sweeps);
    min_cmd->add_option("--record-every", record_every);
    min_cmd->add_flag("--incremental", incremental, "evaluate swaps by local deltas");
    min_cmd->add_option("--out", out_prefix, "output prefix (.txt, .pgm, _trajectory.csv, _report.csv)");

    std::string format = "pgm";
    CLI::App* render_cmd = app.add_subcommand("render", "grid file to PGM or text");
    render_cmd->add_option("--grid", grid_path, "grid text file")->required();
    render_cmd->add_option("--format", format)->check(CLI::IsMember({"pgm", "txt"}));
    render_cmd->add_option("--out", out_path, "output path (stdout when omitted)");

    std::vector<double> eps0_values, x1_values;
    CLI::App* table_cmd = app.add_subcommand("eps0-table", "independent-placement baselines per eps0");
    CLI::Option* table_eps0 = table_cmd->add_option("--eps0-values", eps0_values);
    CLI::Option* table_x1 = table_cmd->add_option("--x1-values", x1_values);
    table_eps0->excludes(table_x1);
    table_x1->excludes(table_eps0);
    table_cmd->add_option("--rows", rows);
    table_cmd->add_option("--cols", cols);
    table_cmd->add_option("--out", out_path, "CSV path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*sweep || *pstudy) {
            SweepSpec spec;
            spec.rows = rows;
            spec.cols = cols;
            spec.x1 = x1;
            spec.h_values = h_values;
            spec.num_trials = trials;
            spec.base.params.eps0 = eps0;
            spec.base.patience = patience;
            spec.base.max_sweeps = max_sweeps;
            spec.base.seed = seed;
            spec.base.record_every = record_every;
            spec.base.incremental_eval = incremental;
            spec.eps0_from_composition = eps0_from_comp;
            for (double hv : spec.h_values.empty() ? default_h_values() : spec.h_values)
                lint_parameters(hv, eps0_from_comp ? eps0_from_x1(x1) : eps0);
            if (*sweep)
                emit(out_path, sweep_csv(run_sweep(spec)));
            else
                emit(out_path, perturb_csv(run_perturb_study(spec, fraction)));
        } else if (*analytic_cmd) {
            emit(out_path, analytic_csv(h_min, h_max, h_step));
        } else if (*count_cmd) {
            const Grid g = read_grid_file(grid_path);
            const TripletCount mode =
                triplet_mode == "single" ? TripletCount::down_only : TripletCount::up_and_down;
            const ConfigCounts k = count(g, mode);
            std::string s = counts_csv(k);
            s += "# cvm2d.fractions.v1\n";
            s += fractions_csv_header();
            s += '\n';
            s += fractions_csv_row(fractions(k, g.size()));
            s += '\n';
            emit(out_path, s);
        } else if (*est_cmd) {
            const Grid g = read_grid_file(grid_path);
            const HEstimateReport rep = estimate_h_report(g);
            std::string s = "# cvm2d.fractions.v1\n";
            s += fractions_csv_header();
            s += '\n';
            s += fractions_csv_row(rep.fractions);
            s += '\n';
            s += estimate_csv(rep);
            emit(out_path, s);
        } else if (*min_cmd) {
            const double use_h = min_eps1->count() > 0 ? h_from_eps1(eps1) : h;
            lint_parameters(use_h, eps0);
            Grid g;
            if (min_grid->count() > 0) {
                g = read_grid_file(grid_path);
            } else if (min_pattern->count() > 0) {
                PatternSpec ps;
                ps.kind = pattern_kind_from_name(pattern_name);
                ps.rows = rows;
                ps.cols = cols;
                ps.n_active = n_active >= 0
                                  ? n_active
                                  : static_cast<int>(std::llround(x1 * rows * cols));
                ps.seed = seed;
                g = generate(ps);
            } else {
                std::cerr << "minimize: pass --grid or --pattern\n";
                return 2;
            }
            MinimizeConfig cfg;
            cfg.params.eps0 = eps0;
            cfg.params.eps1 = eps1_from_h(use_h);
            cfg.target_x1 = min_cmd->count("--x1") > 0 || min_pattern->count() == 0
                                ? x1
                                : static_cast<double>(g.active_count()) / g.size();
            cfg.patience = patience;
            cfg.max_sweeps = max_sweeps;
            cfg.seed = seed;
            cfg.record_every = record_every;
            cfg.incremental_eval = incremental;

            const MinimizeResult res = minimize(g, cfg);
            write_text_file(out_prefix + ".txt", to_text(res.final_grid));
            write_text_file(out_prefix + ".pgm", render_pgm(res.final_grid));
            write_text_file(out_prefix + "_trajectory.csv", trajectory_csv(res.trajectory));
            write_text_file(out_prefix + "_report.csv", report_csv(res.final_report));
            std::cout << report_csv(res.final_report);
        } else if (*render_cmd) {
            const Grid g = read_grid_file(grid_path);
            emit(out_path, format == "txt" ? to_text(g) : render_pgm(g));
        } else if (*table_cmd) {
            if (table_eps0->count() == 0 && table_x1->count() == 0) {
                std::cerr << "eps0-table: pass --eps0-values or --x1-values\n";
                return 2;
            }
            std::vector<double> eps0s = eps0_values;
            if (table_x1->count() > 0) {
                eps0s.clear();
                for (double v : x1_values) eps0s.push_back(eps0_from_x1(v));
            }
            for (double e : eps0s) lint_parameters(1.0, e);
            emit(out_path, eps0_table_csv(eps0s, static_cast<long long>(rows) * cols));
        }
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

} // namespace cvm
