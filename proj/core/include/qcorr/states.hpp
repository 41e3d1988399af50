#pragma once

#include <array>
#include <optional>
#include <string>

#include "qcorr/cmatrix.hpp"

namespace qcorr {

/// A certified two-qubit density matrix: Hermitian, unit trace, positive
/// semidefinite (within the tolerances enforced by validate()).
struct DensityMatrix {
    CMatrix mat;
};

/// Local Bloch vectors and the 3x3 correlation matrix of a two-qubit state.
struct BlochForm {
    std::array<double, 3> x{};                 // qubit A
    std::array<double, 3> y{};                 // qubit B
    std::array<std::array<double, 3>, 3> r{};  // r[i][j] = tr(rho sigma_i (x) sigma_j)
};

/// Which pure-state component pair a Werner mixture is built on.
enum class BasisPair {
    Aligned,      // sin(theta)|11> + cos(theta)|00>
    AntiAligned,  // sin(theta)|10> + cos(theta)|01>
};

/// Werner mixture p|phi><phi| + (1-p)/4 * I of purity p.
DensityMatrix werner(double p, double theta, BasisPair pair);

BlochForm bloch_decompose(const DensityMatrix& rho);

/// Rebuild the 4x4 matrix from Bloch data; inverse of bloch_decompose.
CMatrix bloch_assemble(const BlochForm& b);

/// Direction on the Bloch sphere, polar then azimuthal angle.
struct BlochAngles {
    double theta_b = 0.0;
    double phi_b = 0.0;
};

/// Classical-quantum state sum_k probs[k] |k><k| (x) sigmas[k], where
/// {|k>} is the qubit-A basis along `basis`. Zero-discord when measured
/// on A; used as a test fixture throughout.
DensityMatrix classical_quantum(const std::array<double, 2>& probs, BlochAngles basis,
                                const std::array<CMatrix, 2>& sigmas);

struct ValidationReport {
    double herm_defect = 0.0;     // ‖m − m†‖_HS
    double trace_defect = 0.0;    // |tr m − 1|
    double min_eigenvalue = 0.0;  // of the symmetrized matrix
    bool finite = true;
    bool hermitian = true;
    bool unit_trace = true;
    bool positive = true;

    bool ok() const { return finite && hermitian && unit_trace && positive; }
    std::string describe() const;
};

struct Validation {
    ValidationReport report;
    std::optional<DensityMatrix> state;  // engaged iff report.ok()
};

/// Check the density-matrix invariants of an arbitrary 4x4 matrix.
/// Tolerances: hermiticity 1e-10, trace 1e-10, smallest eigenvalue -1e-9.
Validation validate(const CMatrix& m);

}  // namespace qcorr
