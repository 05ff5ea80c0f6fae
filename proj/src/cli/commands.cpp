#include "hypwin/cli.hpp"

#include "hypwin/error.hpp"
#include "hypwin/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace hypwin::cli {

namespace {

const std::vector<WindowSpec>& fixed_windows()
{
    static const std::vector<WindowSpec> windows{
        WindowSpec::top_hat(),
        WindowSpec::hann(1.0),
        WindowSpec::hann(2.0),
        WindowSpec::hann(3.0),
        WindowSpec::of(WindowFamily::ValleePoussin),
        WindowSpec::of(WindowFamily::Bohman),
        WindowSpec::of(WindowFamily::Kaiser),
        WindowSpec::of(WindowFamily::Nuttall3),
        WindowSpec::of(WindowFamily::Nuttall4a),
        WindowSpec::of(WindowFamily::Nuttall4b),
    };
    return windows;
}

std::string family_string(const WindowSpec& spec) { return std::string(family_name(spec.family)); }

std::optional<double> try_rolloff(const Spectrum& sp)
{
    try {
        return estimate_rolloff(sp, kRolloffCenter).slope;
    } catch (const NumericalError&) {
        return std::nullopt;
    }
}

// Evenly spaced ENBW targets in (lo, hi], `points` of them.
double enbw_target(int i, int points, double lo, double hi) { return lo + (hi - lo) * (i + 1) / points; }

constexpr double kSweepEnbwLow = 1.0;
constexpr double kSweepEnbwHigh = 3.0;

struct RolloffPair
{
    std::optional<double> total;
    std::optional<double> residual;
    RolloffSource source = RolloffSource::Total;
};

RolloffPair hyperbolic_rolloffs(const SampledWindow& w, int pad)
{
    const auto parts = decompose(w, pad);
    RolloffPair r;
    r.total = try_rolloff(parts.total);
    r.residual = try_rolloff(parts.residual_spectrum());
    r.source = rolloff_source_for(parts.total);
    return r;
}

} // namespace

Table cmd_metrics(const WindowSpec& spec, const RunConfig& cfg)
{
    cfg.validate();
    const auto m = evaluate_metrics(spec, cfg.n, cfg.pad);
    Table t{{"family", "params", "enbw", "sidelobe_db", "rolloff", "rolloff_source"}, {}};
    t.add_row({family_string(spec), spec.parameter_string(), m.enbw, cell(m.sidelobe_db), cell(m.rolloff),
               std::string(to_string(m.rolloff_source))});
    return t;
}

Table cmd_warp_curve(const std::vector<double>& alphas, const RunConfig& cfg, double step)
{
    cfg.validate();
    if (!(step > 0.0 && step <= 0.01)) {
        throw ValidationError("step", "warp step must lie in (0, 0.01] so each curve has at least 200 points");
    }
    for (double a : alphas) {
        WindowSpec::hyperbolic(a, 0.0).validate();
    }
    const auto half = static_cast<long long>(std::floor(0.998 / step + 1e-9));
    const auto per_alpha = static_cast<std::size_t>(2 * half + 1);

    struct Row
    {
        double alpha, s, enbw;
    };
    const auto rows = parallel_map(
        alphas.size() * per_alpha,
        [&](std::size_t idx) {
            const double alpha = alphas[idx / per_alpha];
            const double s = static_cast<double>(static_cast<long long>(idx % per_alpha) - half) * step;
            return Row{alpha, s, enbw(sample_window(WindowSpec::hyperbolic(alpha, s), cfg.n))};
        },
        cfg.exec);

    Table t{{"alpha", "s", "inv_enbw", "enbw"}, {}};
    for (const auto& r : rows) {
        t.add_row({r.alpha, r.s, 1.0 / r.enbw, r.enbw});
    }
    return t;
}

Table cmd_sidelobe_sweep(const RunConfig& cfg, int points, std::vector<double> alphas)
{
    cfg.validate();
    if (points < 2) {
        throw ValidationError("points", "need at least 2 points per curve");
    }

    // Each job yields one row; jobs are laid out in output order.
    struct Job
    {
        std::string series;
        WindowSpec spec;
        std::string parameter;
        double value;
        std::optional<double> target_enbw; // hyperbolic: solve for s first
    };
    std::vector<Job> jobs;
    for (const auto& w : fixed_windows()) {
        const bool hann = w.family == WindowFamily::HannPow;
        jobs.push_back({"fixed", w, hann ? "alpha" : "", hann ? w.alpha : std::nan(""), {}});
    }
    for (int i = 1; i <= points; ++i) {
        const double r = static_cast<double>(i) / points;
        jobs.push_back({"tukey", WindowSpec::tukey(r), "tukey_fraction", r, {}});
    }
    for (int i = 1; i <= points; ++i) {
        const double eps = 0.5 * i / points;
        jobs.push_back({"planck", WindowSpec::planck(eps), "planck_epsilon", eps, {}});
    }
    for (double a : alphas) {
        WindowSpec::hyperbolic(a, 0.0).validate();
        for (int i = 0; i < points; ++i) {
            jobs.push_back({"hyperbolic", WindowSpec::hyperbolic(a, 0.0), "alpha", a,
                            enbw_target(i, points, kSweepEnbwLow, kSweepEnbwHigh)});
        }
    }

    struct Row
    {
        WindowSpec spec;
        double enbw;
        std::optional<double> sidelobe;
    };
    const auto rows = parallel_map(
        jobs.size(),
        [&](std::size_t i) {
            WindowSpec spec = jobs[i].spec;
            if (jobs[i].target_enbw) {
                spec.warp = solve_warp_for_enbw(spec.alpha, *jobs[i].target_enbw, cfg.n);
            }
            const auto w = sample_window(spec, cfg.n);
            const auto sp = compute_spectrum(w, cfg.pad, dft::Execution::Serial);
            // hyperbolic curves end where the near-field sidelobes disappear
            if (jobs[i].target_enbw && !oscillates_in_near_field(sp, spec.alpha)) {
                return Row{spec, enbw(w), std::nullopt};
            }
            return Row{spec, enbw(w), max_sidelobe_db(sp)};
        },
        cfg.exec);

    Table t{{"series", "family", "parameter", "value", "warp", "enbw", "sidelobe_db"}, {}};
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto& job = jobs[i];
        const auto& row = rows[i];
        t.add_row({job.series, family_string(row.spec), job.parameter.empty() ? Cell{} : Cell{job.parameter},
                   std::isnan(job.value) ? Cell{} : Cell{job.value},
                   row.spec.family == WindowFamily::Hyperbolic ? Cell{row.spec.warp} : Cell{}, row.enbw,
                   cell(row.sidelobe)});
    }
    return t;
}

Table cmd_rolloff_sweep(const RunConfig& cfg, int points, double alpha, int max_alpha)
{
    cfg.validate();
    if (points < 2) {
        throw ValidationError("points", "need at least 2 points per curve");
    }
    if (cfg.pad < 4) {
        throw ValidationError("pad", "roll-off sweep needs a zero-pad factor of at least 4");
    }
    WindowSpec::hyperbolic(alpha, 0.0).validate();
    if (max_alpha < 1 || max_alpha > kMaxAlpha) {
        throw ValidationError("max_alpha", "must lie in [1, 64]");
    }

    enum class Kind
    {
        Plain,
        HyperbolicAtEnbw,
    };
    struct Job
    {
        std::string figure;
        std::string series;
        WindowSpec spec;
        std::string parameter;
        double value;
        Kind kind;
        double target_enbw = 0.0;
    };
    std::vector<Job> jobs;
    for (const auto& w : fixed_windows()) {
        const bool hann = w.family == WindowFamily::HannPow;
        jobs.push_back({"enbw", "fixed", w, hann ? "alpha" : "", hann ? w.alpha : std::nan(""), Kind::Plain});
    }
    for (int i = 1; i <= points; ++i) {
        const double r = static_cast<double>(i) / points;
        jobs.push_back({"enbw", "tukey", WindowSpec::tukey(r), "tukey_fraction", r, Kind::Plain});
    }
    for (int i = 1; i <= points; ++i) {
        const double eps = 0.5 * i / points;
        jobs.push_back({"enbw", "planck", WindowSpec::planck(eps), "planck_epsilon", eps, Kind::Plain});
    }
    for (int i = 0; i < points; ++i) {
        jobs.push_back({"enbw", "hyperbolic", WindowSpec::hyperbolic(alpha, 0.0), "alpha", alpha,
                        Kind::HyperbolicAtEnbw, enbw_target(i, points, kSweepEnbwLow, kSweepEnbwHigh)});
    }
    for (int a = 1; a <= max_alpha; ++a) {
        jobs.push_back({"alpha", "hyperbolic", WindowSpec::hyperbolic(a, 0.0), "alpha", static_cast<double>(a),
                        Kind::HyperbolicAtEnbw, 1.5});
    }
    for (int a = 1; a <= max_alpha; ++a) {
        jobs.push_back({"alpha", "hann_pow", WindowSpec::hann(a), "alpha", static_cast<double>(a), Kind::Plain});
    }

    struct Row
    {
        WindowSpec spec;
        double enbw;
        RolloffPair rolloff;
        bool has_residual;
    };
    const auto rows = parallel_map(
        jobs.size(),
        [&](std::size_t i) {
            const auto& job = jobs[i];
            WindowSpec spec = job.spec;
            if (job.kind == Kind::HyperbolicAtEnbw) {
                spec.warp = solve_warp_for_enbw(spec.alpha, job.target_enbw, cfg.n);
                const auto w = sample_window(spec, cfg.n);
                return Row{spec, enbw(w), hyperbolic_rolloffs(w, cfg.pad), true};
            }
            const auto w = sample_window(spec, cfg.n);
            RolloffPair r;
            r.total = try_rolloff(compute_spectrum(w, cfg.pad, dft::Execution::Serial));
            return Row{spec, enbw(w), r, false};
        },
        cfg.exec);

    Table t{{"figure", "series", "family", "parameter", "value", "warp", "enbw", "rolloff_total", "rolloff_residual",
             "rolloff", "rolloff_source"},
            {}};
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto& job = jobs[i];
        const auto& row = rows[i];
        const auto& chosen = row.rolloff.source == RolloffSource::Residual ? row.rolloff.residual : row.rolloff.total;
        t.add_row({job.figure, job.series, family_string(row.spec),
                   job.parameter.empty() ? Cell{} : Cell{job.parameter},
                   std::isnan(job.value) ? Cell{} : Cell{job.value},
                   row.spec.family == WindowFamily::Hyperbolic ? Cell{row.spec.warp} : Cell{}, row.enbw,
                   cell(row.rolloff.total), row.has_residual ? cell(row.rolloff.residual) : Cell{}, cell(chosen),
                   std::string(to_string(row.rolloff.source))});
    }
    return t;
}

ToneOption parse_tone(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ValidationError("tone", "expected TF:AMPLITUDE, e.g. 100:1e-10");
    }
    try {
        std::size_t used = 0;
        const double tf = std::stod(text.substr(0, colon), &used);
        if (used != colon) {
            throw std::invalid_argument("trailing characters");
        }
        const std::string amp_text = text.substr(colon + 1);
        const double amp = std::stod(amp_text, &used);
        if (used != amp_text.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return {tf, amp};
    } catch (const std::logic_error&) {
        throw ValidationError("tone", "could not parse '" + text + "' as TF:AMPLITUDE");
    }
}

Table cmd_spectrum(const WindowSpec& spec, const RunConfig& cfg, bool decompose_curve, std::optional<ToneOption> tone,
                   std::optional<double> max_tf)
{
    cfg.validate();
    const auto w = sample_window(spec, cfg.n);
    Spectrum total = tone ? tone_demo(spec, tone->tf, tone->amplitude, cfg.n, cfg.pad)
                          : compute_spectrum(w, cfg.pad, cfg.exec);

    std::optional<Decomposition> parts;
    if (decompose_curve) {
        parts = decompose_against(std::move(total), w);
    }
    const Spectrum& shown = parts ? parts->total : total;

    Table t{{"Tf", "total_db", "total"}, {}};
    if (parts) {
        t.columns.insert(t.columns.end(), {"dc_db", "residual_db", "dc", "residual"});
    }
    std::size_t last = shown.size() - 1;
    if (max_tf) {
        if (!(*max_tf > 0.0)) {
            throw ValidationError("max_tf", "must be positive");
        }
        last = std::min(last, shown.bin(*max_tf));
    }
    for (std::size_t k = 0; k <= last; ++k) {
        std::vector<Cell> row{shown.tf(k), shown.power_db[k], shown.values[k]};
        if (parts) {
            row.emplace_back(amplitude_to_db(parts->dc[k]));
            row.emplace_back(amplitude_to_db(parts->residual[k]));
            row.emplace_back(parts->dc[k]);
            row.emplace_back(parts->residual[k]);
        }
        t.add_row(std::move(row));
    }
    return t;
}

Table cmd_crossover(const std::vector<double>& alphas, const RunConfig& cfg, int points, double enbw_min,
                    double enbw_max)
{
    cfg.validate();
    if (points < 1) {
        throw ValidationError("points", "need at least 1 point per curve");
    }
    if (!(enbw_min > 1.0 && enbw_max >= enbw_min)) {
        throw ValidationError("enbw_min", "ENBW range must satisfy 1 < min <= max");
    }
    if (cfg.pad < 4) {
        throw ValidationError("pad", "crossover needs a zero-pad factor of at least 4");
    }
    for (double a : alphas) {
        WindowSpec::hyperbolic(a, 0.0).validate();
    }
    const auto per_alpha = static_cast<std::size_t>(points);
    const auto results = parallel_map(
        alphas.size() * per_alpha,
        [&](std::size_t idx) -> std::optional<CrossoverResult> {
            const double alpha = alphas[idx / per_alpha];
            const auto i = static_cast<int>(idx % per_alpha);
            const double target = points == 1 ? enbw_min : enbw_min + (enbw_max - enbw_min) * i / (points - 1);
            try {
                return crossover_vs_planck(alpha, target, cfg.n, cfg.pad);
            } catch (const NumericalError&) {
                return std::nullopt;
            }
        },
        cfg.exec);

    Table t{{"alpha", "enbw", "warp", "planck_epsilon", "crossover_tf", "max_advantage_db", "source"}, {}};
    for (std::size_t idx = 0; idx < results.size(); ++idx) {
        const double alpha = alphas[idx / per_alpha];
        const auto i = static_cast<int>(idx % per_alpha);
        const double target = points == 1 ? enbw_min : enbw_min + (enbw_max - enbw_min) * i / (points - 1);
        if (const auto& r = results[idx]) {
            t.add_row({alpha, target, r->warp, r->planck_epsilon, r->crossover_tf, r->max_advantage_db,
                       std::string(to_string(r->source))});
        } else {
            t.add_row({alpha, target});
        }
    }
    return t;
}

} // namespace hypwin::cli
