#pragma once

#include "hypwin/hyperbolic_analysis.hpp"
#include "hypwin/window.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hypwin::cli {

enum class OutputFormat
{
    Csv,
    Json,
};

/// Options shared by every subcommand.
struct RunConfig
{
    int n = 4096;
    int pad = 16;
    OutputFormat format = OutputFormat::Csv;
    std::string out_path; // empty: standard output
    dft::Execution exec = dft::Execution::Parallel;

    void validate() const;
};

/// Empty cells are absent values (written as an empty CSV field / JSON null).
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
    std::size_t column(const std::string& name) const;
};

inline Cell cell(std::optional<double> v) { return v ? Cell{*v} : Cell{}; }

/// Header line then one line per row; doubles with 9 significant digits.
void write_csv(const Table& table, std::ostream& out);
/// Array of objects keyed by column name.
void write_json(const Table& table, std::ostream& out);
std::string format_double(double v);

Table cmd_metrics(const WindowSpec& spec, const RunConfig& cfg);

/// (alpha, s, 1/ENBW) on s = -0.998 .. 0.998 in steps of `step`.
Table cmd_warp_curve(const std::vector<double>& alphas, const RunConfig& cfg, double step = 0.002);

/// Maximum sidelobe against ENBW: fixed windows as single points, Tukey and
/// Planck over their parameter range, hyperbolic at each alpha over ENBW.
Table cmd_sidelobe_sweep(const RunConfig& cfg, int points = 100, std::vector<double> alphas = {1.0, 2.0, 3.0});

/// Roll-off against ENBW (hyperbolic total and residual at `alpha`, Tukey,
/// Planck, fixed windows) and roll-off against alpha at ENBW 1.5 with the
/// Hann^alpha reference.
Table cmd_rolloff_sweep(const RunConfig& cfg, int points = 100, double alpha = 3.0, int max_alpha = 10);

struct ToneOption
{
    double tf;
    double amplitude;
};

/// Parses "tf:amp", e.g. "100:1e-10".
ToneOption parse_tone(const std::string& text);

/// (Tf, total_db, total[, dc_db, residual_db, dc, residual]) up to `max_tf`
/// (default: whole grid). The undecorated columns are signed amplitudes.
Table cmd_spectrum(const WindowSpec& spec, const RunConfig& cfg, bool decompose, std::optional<ToneOption> tone,
                   std::optional<double> max_tf = std::nullopt);

/// Crossover frequency against ENBW for each alpha.
Table cmd_crossover(const std::vector<double>& alphas, const RunConfig& cfg, int points = 100,
                    double enbw_min = 1.1, double enbw_max = 1.55);

/// Full command-line entry point. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hypwin::cli
