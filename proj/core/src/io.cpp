#include "qcorr/io.hpp"

#include <json.hpp>

namespace qcorr {

using nlohmann::json;

CMatrix density_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_array() || j.size() != 4)
        throw FormatError("expected a 4x4 array of [re, im] pairs");

    CMatrix m(4);
    for (int r = 0; r < 4; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || row.size() != 4)
            throw FormatError("row " + std::to_string(r) + ": expected 4 entries");
        for (int c = 0; c < 4; ++c) {
            const json& e = row[static_cast<std::size_t>(c)];
            const std::string where =
                "entry [" + std::to_string(r) + "][" + std::to_string(c) + "]";
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw FormatError(where + ": expected an [re, im] number pair");
            m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
        }
    }
    if (!m.all_finite()) throw FormatError("matrix contains non-finite values");
    return m;
}

std::string density_to_json(const CMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.dim(); ++c)
            row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

namespace {

json report_json(const CorrelationReport& rep) {
    return json{{"mutual_info", rep.mutual_info},
                {"classical_corr", rep.classical_corr},
                {"discord", rep.discord},
                {"gmqd", rep.gmqd},
                {"negativity", rep.negativity},
                {"argmax_basis",
                 {{"theta_m", rep.argmax_basis.theta_m}, {"phi_m", rep.argmax_basis.phi_m}}},
                {"converged", rep.converged}};
}

}  // namespace

std::string report_to_json(const CorrelationReport& rep) { return report_json(rep).dump(2); }

std::string sweep_to_json(const std::vector<SweepRow>& rows, const SweepSummary& summary) {
    json jrows = json::array();
    for (const auto& row : rows) {
        jrows.push_back(json{{"lambda_t", row.lambda_t},
                             {"discord", row.report.discord},
                             {"gmqd", row.report.gmqd},
                             {"negativity", row.report.negativity},
                             {"classical_corr", row.report.classical_corr},
                             {"mutual_info", row.report.mutual_info}});
    }
    auto stats = [](const MeasureStats& m) { return json{{"min", m.min}, {"max", m.max}}; };
    json intervals = json::array();
    for (const auto& [a, b] : summary.sudden_death_intervals)
        intervals.push_back(json::array({a, b}));
    json j{{"rows", std::move(jrows)},
           {"summary",
            {{"discord", stats(summary.discord)},
             {"gmqd", stats(summary.gmqd)},
             {"negativity", stats(summary.negativity)},
             {"classical_corr", stats(summary.classical_corr)},
             {"mutual_info", stats(summary.mutual_info)},
             {"sudden_death_intervals", std::move(intervals)}}}};
    return j.dump(2);
}

}  // namespace qcorr
