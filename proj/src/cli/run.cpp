#include "hypwin/cli.hpp"

#include "hypwin/error.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

namespace hypwin::cli {

namespace {

struct WindowOptions
{
    std::string family = "hann";
    double alpha = 1.0;
    double warp = 0.0;
    double tukey = 0.5;
    double epsilon = 0.1;

    CLI::Option* alpha_opt = nullptr;
    CLI::Option* warp_opt = nullptr;
    CLI::Option* tukey_opt = nullptr;
    CLI::Option* epsilon_opt = nullptr;

    void attach(CLI::App& app)
    {
        app.add_option("--window,-w", family, "Window family")
            ->check(CLI::IsMember({"tophat", "hann", "hyperbolic", "tukey", "planck", "vallee-poussin", "bohman",
                                   "kaiser", "nuttall3", "nuttall4a", "nuttall4b"}));
        alpha_opt = app.add_option("--alpha,-a", alpha, "Exponent (hann, hyperbolic)");
        warp_opt = app.add_option("--warp,-s", warp, "Hyperbolic warp s in [-0.9999, 0.9999]");
        tukey_opt = app.add_option("--tukey", tukey, "Tukey taper fraction r: 1 is Hann, 0 is the top hat");
        epsilon_opt = app.add_option("--epsilon", epsilon, "Planck taper width as a fraction of the window");
    }

    WindowSpec resolve() const
    {
        WindowSpec spec = WindowSpec::of(parse_family(family));
        const auto applicable = applicable_parameters(spec.family);
        const auto allowed = [&](std::string_view name) {
            return std::find(applicable.begin(), applicable.end(), name) != applicable.end();
        };
        const std::pair<CLI::Option*, std::string_view> given[] = {
            {alpha_opt, "alpha"}, {warp_opt, "warp"}, {tukey_opt, "tukey_fraction"}, {epsilon_opt, "planck_epsilon"}};
        for (const auto& [opt, name] : given) {
            if (opt->count() > 0 && !allowed(name)) {
                throw ValidationError(std::string(name), "not a parameter of the " + family + " window");
            }
        }
        spec.alpha = alpha;
        spec.warp = warp;
        spec.tukey_fraction = tukey;
        spec.planck_epsilon = epsilon;
        spec.validate();
        return spec;
    }
};

void emit(const Table& table, const RunConfig& cfg, std::ostream& out)
{
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) {
            throw ValidationError("out", "cannot open '" + cfg.out_path + "' for writing");
        }
        sink = &file;
    }
    if (cfg.format == OutputFormat::Json) {
        write_json(table, *sink);
    } else {
        write_csv(table, *sink);
    }
    sink->flush();
    if (!*sink) {
        throw ValidationError("out", "write failed");
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hyperbolic window spectral analysis"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    RunConfig cfg;
    bool serial = false;
    app.add_option("--n", cfg.n, "Window length (even, >= 4)");
    app.add_option("--pad", cfg.pad, "Zero-pad factor (>= 1)");
    std::string format = "csv";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out,-o", cfg.out_path, "Write to this file instead of standard output");
    app.add_flag("--serial", serial, "Use the single-threaded kernels");

    auto* metrics = app.add_subcommand("metrics", "ENBW, maximum sidelobe and roll-off of one window");
    WindowOptions metrics_window;
    metrics_window.attach(*metrics);

    auto* warp_curve = app.add_subcommand("warp-curve", "1/ENBW against warp s");
    std::vector<double> warp_alphas{1.0, 2.0, 3.0, 4.0};
    double warp_step = 0.002;
    warp_curve->add_option("--alphas", warp_alphas, "Exponents to trace")->delimiter(',');
    warp_curve->add_option("--step", warp_step, "Spacing of s");

    auto* sidelobe = app.add_subcommand("sidelobe-sweep", "Maximum sidelobe against ENBW");
    int sidelobe_points = 100;
    std::vector<double> sidelobe_alphas{1.0, 2.0, 3.0};
    sidelobe->add_option("--points", sidelobe_points, "Points per curve");
    sidelobe->add_option("--alphas", sidelobe_alphas, "Hyperbolic exponents")->delimiter(',');

    auto* rolloff = app.add_subcommand("rolloff-sweep", "Roll-off against ENBW and against alpha");
    int rolloff_points = 100;
    double rolloff_alpha = 3.0;
    int rolloff_max_alpha = 10;
    rolloff->add_option("--points", rolloff_points, "Points per curve");
    rolloff->add_option("--alpha", rolloff_alpha, "Hyperbolic exponent for the ENBW sweep");
    rolloff->add_option("--max-alpha", rolloff_max_alpha, "Largest exponent for the alpha sweep");

    auto* spectrum = app.add_subcommand("spectrum", "Transform of one window, optionally decomposed");
    WindowOptions spectrum_window;
    spectrum_window.attach(*spectrum);
    bool decompose_flag = false;
    std::string tone_text;
    double max_tf = 0.0;
    spectrum->add_flag("--decompose", decompose_flag, "Add DC and residual columns");
    auto* tone_opt = spectrum->add_option("--tone", tone_text, "Add a tone TF:AMPLITUDE, e.g. 100:1e-10");
    auto* max_tf_opt = spectrum->add_option("--max-tf", max_tf, "Last frequency to print");

    auto* crossover = app.add_subcommand("crossover", "Planck crossover frequency against ENBW");
    std::vector<double> crossover_alphas{4.0};
    int crossover_points = 100;
    double enbw_min = 1.1;
    double enbw_max = 1.55;
    crossover->add_option("--alphas", crossover_alphas, "Hyperbolic exponents")->delimiter(',');
    crossover->add_option("--points", crossover_points, "Points per curve");
    crossover->add_option("--enbw-min", enbw_min, "Lowest ENBW");
    crossover->add_option("--enbw-max", enbw_max, "Highest ENBW");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    cfg.exec = serial ? dft::Execution::Serial : dft::Execution::Parallel;

    try {
        cfg.validate();
        Table table;
        if (metrics->parsed()) {
            table = cmd_metrics(metrics_window.resolve(), cfg);
        } else if (warp_curve->parsed()) {
            table = cmd_warp_curve(warp_alphas, cfg, warp_step);
        } else if (sidelobe->parsed()) {
            table = cmd_sidelobe_sweep(cfg, sidelobe_points, sidelobe_alphas);
        } else if (rolloff->parsed()) {
            table = cmd_rolloff_sweep(cfg, rolloff_points, rolloff_alpha, rolloff_max_alpha);
        } else if (spectrum->parsed()) {
            std::optional<ToneOption> tone;
            if (tone_opt->count() > 0) {
                tone = parse_tone(tone_text);
            }
            table = cmd_spectrum(spectrum_window.resolve(), cfg, decompose_flag, tone,
                                 max_tf_opt->count() > 0 ? std::optional<double>(max_tf) : std::nullopt);
        } else if (crossover->parsed()) {
            table = cmd_crossover(crossover_alphas, cfg, crossover_points, enbw_min, enbw_max);
        }
        emit(table, cfg, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

} // namespace hypwin::cli
