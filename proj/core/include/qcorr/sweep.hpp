#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/measures.hpp"
#include "qcorr/models.hpp"

namespace qcorr {

enum class SweepVariable { Time, Purity, Coupling };
enum class OutputFormat { Csv, Json };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepSpec {
    Model model = Model::Cavity;
    double p = 1.0;
    double theta = 0.0;
    double gamma_over_lambda = 0.0;
    double t_max = 12.0;
    int steps = 1200;  // endpoint-inclusive grid lambda_t_i = i * t_max / (steps-1)
    Subsystem measured = Subsystem::B;
    SweepVariable variable = SweepVariable::Time;
    std::vector<double> secondary;  // grid of p or gamma values for non-time sweeps
    std::string out_path;
    OutputFormat format = OutputFormat::Csv;
    int threads = 1;
    OptimizerOptions optimizer{};
};

void validate_spec(const SweepSpec& spec);  // throws std::invalid_argument

struct SweepRow {
    double lambda_t = 0.0;
    CorrelationReport report;
};

/// One correlation report per time-grid point. Rows are independent pure
/// computations, so the result is identical for any thread count.
std::vector<SweepRow> time_sweep_rows(const SweepSpec& spec);

struct MeasureStats {
    double min = 0.0;
    double max = 0.0;
};

struct SweepSummary {
    MeasureStats discord, gmqd, negativity, classical_corr, mutual_info;
    /// [first, last] lambda_t of every run of >= 2 consecutive grid points
    /// with negativity < 1e-9.
    std::vector<std::pair<double, double>> sudden_death_intervals;
};

SweepSummary summarize(const std::vector<SweepRow>& rows);

/// Frozen CSV schema: header lambda_t,discord,gmqd,negativity,
/// classical_corr,mutual_info; 12 significant digits; LF line endings;
/// no trailing delimiter.
std::string to_csv(const std::vector<SweepRow>& rows);

std::string format_g12(double v);

/// Run the sweep, write the output file(s), print the summary to `out`.
/// Purity/coupling sweeps run one full time sweep per secondary grid value
/// into a per-value file (suffix _p<value> or _g<value>).
void run_sweep(const SweepSpec& spec, std::ostream& out);

void print_summary(const SweepSummary& summary, std::ostream& out);

struct FigurePreset {
    std::string name;
    SweepSpec spec;
};

/// The six frozen parameter sets behind the `figure` command, t in [0, 12]
/// over 1200 steps:
///   f1a cavity p=1 theta=pi/4        f1b cavity p=0.5 theta=pi/4
///   f2a dephasing g=0 theta=pi/60    f2b dephasing g=1 theta=pi/60
///   f3a dephasing g=2 theta=pi/60    f3b dephasing g=2 theta=pi/3
/// (all dephasing presets at p=0.5)
const std::vector<FigurePreset>& figure_presets();
const FigurePreset* find_preset(const std::string& name);

}  // namespace qcorr
