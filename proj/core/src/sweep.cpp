#include "qcorr/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <thread>

#include "qcorr/io.hpp"

namespace qcorr {

namespace {

constexpr double kDeathTol = 1e-9;

ModelParams params_at(const SweepSpec& spec, double lambda_t) {
    return {spec.p, spec.theta, spec.gamma_over_lambda, lambda_t, spec.model};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
}

// sweep.csv -> sweep_p0.25.csv
std::string with_suffix(const std::string& path, const std::string& suffix) {
    const auto dot = path.rfind('.');
    const auto slash = path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

}  // namespace

void validate_spec(const SweepSpec& spec) {
    if (spec.steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    if (!(spec.t_max > 0.0)) throw std::invalid_argument("sweep: t-max must be > 0");
    if (!(spec.p >= 0.0 && spec.p <= 1.0))
        throw std::invalid_argument("sweep: purity must lie in [0,1]");
    if (spec.gamma_over_lambda < 0.0)
        throw std::invalid_argument("sweep: gamma must be >= 0");
    if (spec.threads < 1) throw std::invalid_argument("sweep: threads must be >= 1");
    if (spec.variable != SweepVariable::Time && spec.secondary.empty())
        throw std::invalid_argument("sweep: purity/coupling sweeps need a value grid");
}

std::vector<SweepRow> time_sweep_rows(const SweepSpec& spec) {
    validate_spec(spec);
    const int n = spec.steps;
    std::vector<SweepRow> rows(static_cast<std::size_t>(n));

    auto compute_range = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            const double lt = spec.t_max * i / (n - 1);
            const DensityMatrix rho = model_state(params_at(spec, lt));
            rows[static_cast<std::size_t>(i)] = {
                lt, correlation_report(rho, spec.measured, spec.optimizer)};
        }
    };

    const int nthreads = std::min(spec.threads, n);
    if (nthreads <= 1) {
        compute_range(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) {
            const int lo = n * t / nthreads;
            const int hi = n * (t + 1) / nthreads;
            pool.emplace_back(compute_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

namespace {

MeasureStats stats_of(const std::vector<SweepRow>& rows, double CorrelationReport::*field) {
    MeasureStats s{rows.front().report.*field, rows.front().report.*field};
    for (const auto& row : rows) {
        s.min = std::min(s.min, row.report.*field);
        s.max = std::max(s.max, row.report.*field);
    }
    return s;
}

}  // namespace

SweepSummary summarize(const std::vector<SweepRow>& rows) {
    if (rows.empty()) return {};
    SweepSummary s;
    s.discord = stats_of(rows, &CorrelationReport::discord);
    s.gmqd = stats_of(rows, &CorrelationReport::gmqd);
    s.negativity = stats_of(rows, &CorrelationReport::negativity);
    s.classical_corr = stats_of(rows, &CorrelationReport::classical_corr);
    s.mutual_info = stats_of(rows, &CorrelationReport::mutual_info);

    std::size_t i = 0;
    while (i < rows.size()) {
        if (rows[i].report.negativity < kDeathTol) {
            std::size_t j = i;
            while (j + 1 < rows.size() && rows[j + 1].report.negativity < kDeathTol) ++j;
            if (j > i) s.sudden_death_intervals.emplace_back(rows[i].lambda_t, rows[j].lambda_t);
            i = j + 1;
        } else {
            ++i;
        }
    }
    return s;
}

std::string format_g12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "lambda_t,discord,gmqd,negativity,classical_corr,mutual_info\n";
    for (const auto& row : rows) {
        out += format_g12(row.lambda_t);
        out += ',';
        out += format_g12(row.report.discord);
        out += ',';
        out += format_g12(row.report.gmqd);
        out += ',';
        out += format_g12(row.report.negativity);
        out += ',';
        out += format_g12(row.report.classical_corr);
        out += ',';
        out += format_g12(row.report.mutual_info);
        out += '\n';
    }
    return out;
}

void print_summary(const SweepSummary& s, std::ostream& out) {
    auto line = [&](const char* name, const MeasureStats& m) {
        out << "  " << name << " min " << format_g12(m.min) << "  max " << format_g12(m.max)
            << "\n";
    };
    line("discord        ", s.discord);
    line("gmqd           ", s.gmqd);
    line("negativity     ", s.negativity);
    line("classical_corr ", s.classical_corr);
    line("mutual_info    ", s.mutual_info);
    out << "  sudden-death intervals: ";
    if (s.sudden_death_intervals.empty()) {
        out << "none\n";
    } else {
        bool first = true;
        for (const auto& [a, b] : s.sudden_death_intervals) {
            if (!first) out << ", ";
            out << "[" << format_g12(a) << ", " << format_g12(b) << "]";
            first = false;
        }
        out << "\n";
    }
}

namespace {

void run_one(const SweepSpec& spec, const std::string& path, std::ostream& out) {
    const std::vector<SweepRow> rows = time_sweep_rows(spec);
    const SweepSummary summary = summarize(rows);
    write_file(path, spec.format == OutputFormat::Csv ? to_csv(rows)
                                                      : sweep_to_json(rows, summary));
    out << "wrote " << path << " (" << rows.size() << " rows, lambda_t in [0, "
        << format_g12(spec.t_max) << "])\n";
    print_summary(summary, out);
}

}  // namespace

void run_sweep(const SweepSpec& spec, std::ostream& out) {
    validate_spec(spec);
    const char* ext = spec.format == OutputFormat::Csv ? ".csv" : ".json";
    const std::string base =
        spec.out_path.empty() ? std::string("sweep") + ext : spec.out_path;

    if (spec.variable == SweepVariable::Time) {
        run_one(spec, base, out);
        return;
    }

    const bool purity = spec.variable == SweepVariable::Purity;
    for (double v : spec.secondary) {
        SweepSpec sub = spec;
        sub.variable = SweepVariable::Time;
        sub.secondary.clear();
        if (purity)
            sub.p = v;
        else
            sub.gamma_over_lambda = v;
        out << (purity ? "p = " : "gamma/lambda = ") << format_g12(v) << "\n";
        run_one(sub, with_suffix(base, (purity ? "_p" : "_g") + format_g12(v)), out);
    }
}

const std::vector<FigurePreset>& figure_presets() {
    static const std::vector<FigurePreset> presets = [] {
        const double pi = std::numbers::pi;
        auto cavity = [&](double p, double theta) {
            SweepSpec s;
            s.model = Model::Cavity;
            s.p = p;
            s.theta = theta;
            return s;
        };
        auto dephasing = [&](double gamma, double theta) {
            SweepSpec s;
            s.model = Model::Dephasing;
            s.p = 0.5;
            s.theta = theta;
            s.gamma_over_lambda = gamma;
            return s;
        };
        return std::vector<FigurePreset>{
            {"f1a", cavity(1.0, pi / 4)},      {"f1b", cavity(0.5, pi / 4)},
            {"f2a", dephasing(0.0, pi / 60)},  {"f2b", dephasing(1.0, pi / 60)},
            {"f3a", dephasing(2.0, pi / 60)},  {"f3b", dephasing(2.0, pi / 3)},
        };
    }();
    return presets;
}

const FigurePreset* find_preset(const std::string& name) {
    for (const auto& p : figure_presets())
        if (p.name == name) return &p;
    return nullptr;
}

}  // namespace qcorr
