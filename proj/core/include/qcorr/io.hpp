#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qcorr/measures.hpp"
#include "qcorr/sweep.hpp"

namespace qcorr {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse the density-matrix interchange format: a 4x4 nested array of
/// [re, im] number pairs, row-major, basis order |00>,|01>,|10>,|11>.
/// Malformed input raises FormatError naming the offending entry.
CMatrix density_from_json(const std::string& text);

std::string density_to_json(const CMatrix& m);

std::string report_to_json(const CorrelationReport& rep);

std::string sweep_to_json(const std::vector<SweepRow>& rows, const SweepSummary& summary);

}  // namespace qcorr
