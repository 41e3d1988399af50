// Command-line front end: model parameter sweeps, figure presets, and
// correlation reports for density matrices supplied as JSON files.
//
// Exit codes: 0 ok, 1 usage, 2 physics/validation, 3 I/O.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcorr/io.hpp"
#include "qcorr/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPhysics = 2;
constexpr int kExitIo = 3;

std::string preset_names() {
    std::string names;
    for (const auto& p : qcorr::figure_presets()) {
        if (!names.empty()) names += ' ';
        names += p.name;
    }
    return names;
}

int run_state_command(const std::string& path, qcorr::Subsystem measured) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "io error: cannot read '" << path << "'\n";
        return kExitIo;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    qcorr::CMatrix m(4);
    try {
        m = qcorr::density_from_json(buf.str());
    } catch (const qcorr::FormatError& e) {
        std::cerr << "format error in '" << path << "': " << e.what() << "\n";
        return kExitPhysics;
    }
    const qcorr::Validation v = qcorr::validate(m);
    if (!v.state) {
        std::cerr << "physics error: not a density matrix: " << v.report.describe() << "\n";
        return kExitPhysics;
    }
    std::cout << qcorr::report_to_json(qcorr::correlation_report(*v.state, measured))
              << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-qubit correlation measures and model sweeps"};
    app.require_subcommand(1);

    const std::map<std::string, qcorr::Model> model_names{
        {"cavity", qcorr::Model::Cavity}, {"dephasing", qcorr::Model::Dephasing}};
    const std::map<std::string, qcorr::Subsystem> subsystem_names{
        {"A", qcorr::Subsystem::A}, {"B", qcorr::Subsystem::B}};
    const std::map<std::string, qcorr::OutputFormat> format_names{
        {"csv", qcorr::OutputFormat::Csv}, {"json", qcorr::OutputFormat::Json}};
    const std::map<std::string, qcorr::SweepVariable> variable_names{
        {"time", qcorr::SweepVariable::Time},
        {"purity", qcorr::SweepVariable::Purity},
        {"coupling", qcorr::SweepVariable::Coupling}};

    // sweep
    qcorr::SweepSpec spec;
    auto* sweep = app.add_subcommand("sweep", "sweep a model over time/purity/coupling");
    sweep->add_option("--model", spec.model, "cavity or dephasing")
        ->transform(CLI::CheckedTransformer(model_names))
        ->required();
    sweep->add_option("--p", spec.p, "initial-state purity in [0,1]");
    sweep->add_option("--theta", spec.theta, "initial-state angle, radians");
    sweep->add_option("--gamma", spec.gamma_over_lambda, "bath coupling gamma/lambda");
    sweep->add_option("--t-max", spec.t_max, "end of the lambda_t grid");
    sweep->add_option("--steps", spec.steps, "grid points (endpoint-inclusive)");
    sweep->add_option("--measured", spec.measured, "measured subsystem for discord (A|B)")
        ->transform(CLI::CheckedTransformer(subsystem_names));
    sweep->add_option("--out", spec.out_path, "output path (default sweep.<format>)");
    sweep->add_option("--format", spec.format, "csv or json")
        ->transform(CLI::CheckedTransformer(format_names));
    sweep->add_option("--sweep-var", spec.variable, "time, purity or coupling")
        ->transform(CLI::CheckedTransformer(variable_names));
    sweep->add_option("--grid", spec.secondary,
                      "secondary grid values for purity/coupling sweeps")
        ->delimiter(',');
    sweep->add_option("--threads", spec.threads, "worker threads (output is identical)");

    // state
    std::string state_path;
    qcorr::Subsystem state_measured = qcorr::Subsystem::B;
    auto* state = app.add_subcommand("state", "report all measures for a JSON density matrix");
    state->add_option("file", state_path, "4x4 matrix of [re,im] pairs, row-major")
        ->required();
    state->add_option("--measured", state_measured, "measured subsystem (A|B)")
        ->transform(CLI::CheckedTransformer(subsystem_names));

    // figure
    std::string preset_name;
    std::string figure_out;
    qcorr::OutputFormat figure_format = qcorr::OutputFormat::Csv;
    int figure_threads = 1;
    auto* figure = app.add_subcommand("figure", "run a frozen parameter preset");
    figure->add_option("preset", preset_name, "one of: " + preset_names())->required();
    figure->add_option("--out", figure_out, "output path (default <preset>.<format>)");
    figure->add_option("--format", figure_format, "csv or json")
        ->transform(CLI::CheckedTransformer(format_names));
    figure->add_option("--threads", figure_threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sweep->parsed()) {
            qcorr::run_sweep(spec, std::cout);
            return kExitOk;
        }
        if (state->parsed()) {
            return run_state_command(state_path, state_measured);
        }
        if (figure->parsed()) {
            const qcorr::FigurePreset* preset = qcorr::find_preset(preset_name);
            if (!preset) {
                std::cerr << "unknown preset '" << preset_name
                          << "' (valid: " << preset_names() << ")\n";
                return kExitUsage;
            }
            qcorr::SweepSpec run = preset->spec;
            run.format = figure_format;
            run.threads = figure_threads;
            run.out_path = figure_out.empty()
                               ? preset->name + (run.format == qcorr::OutputFormat::Csv
                                                     ? ".csv"
                                                     : ".json")
                               : figure_out;
            qcorr::run_sweep(run, std::cout);
            return kExitOk;
        }
    } catch (const qcorr::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPhysics;
    }
    return kExitUsage;
}
