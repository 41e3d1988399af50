#pragma once

#include <array>
#include <utility>

#include "qcorr/states.hpp"

namespace qcorr {

/// Rank-1 projective measurement along the Bloch direction (theta_m, phi_m).
struct MeasurementBasis {
    double theta_m = 0.0;  // [0, pi]
    double phi_m = 0.0;    // [0, 2*pi)

    std::array<double, 3> direction() const;
    /// Projector pair (I ± n·sigma)/2; the two sum to the identity exactly.
    std::pair<CMatrix, CMatrix> projectors() const;
};

/// Settings of the two-stage measurement optimizer: a coarse angle grid
/// followed by Nelder-Mead refinement from the best grid point.
struct OptimizerOptions {
    int grid_theta = 64;
    int grid_phi = 128;
    double simplex_tol = 1e-8;  // terminate when the simplex diameter drops below
    int max_iterations = 500;
};

struct CcResult {
    double value = 0.0;
    MeasurementBasis basis;
    bool converged = true;
};

/// Von Neumann entropy in bits, -sum lambda log2 lambda with 0 log 0 := 0.
/// Works on 2x2 and 4x4 density matrices; eigenvalues that dip slightly
/// negative from roundoff are clamped to zero.
double von_neumann_entropy(const CMatrix& rho);
double von_neumann_entropy(const DensityMatrix& rho);

/// S(rho_A) + S(rho_B) - S(rho_AB), in bits.
double mutual_information(const DensityMatrix& rho);

/// sum_k p_k S(rho_k) for the two outcomes of projectively measuring
/// `measured`; outcomes with p_k < 1e-14 contribute nothing.
double conditional_entropy(const DensityMatrix& rho, const MeasurementBasis& basis,
                           Subsystem measured);

/// max over projective bases of S(rho_unmeasured) - conditional entropy,
/// with the maximizing basis. `converged` is false if the refinement hit
/// its iteration cap before the simplex collapsed.
CcResult classical_correlation(const DensityMatrix& rho, Subsystem measured = Subsystem::B,
                               const OptimizerOptions& opts = {});

/// Mutual information minus classical correlation, clamped to [0, inf).
double quantum_discord(const DensityMatrix& rho, Subsystem measured = Subsystem::B,
                       const OptimizerOptions& opts = {});

/// Geometric discord (squared Hilbert-Schmidt distance to the nearest
/// classical-quantum state, measurement on A):
/// (‖x‖² + ‖R‖²_F − k_max)/4 with k_max the top eigenvalue of xxᵀ + RRᵀ.
double gmqd(const DensityMatrix& rho);

/// Entanglement negativity: −2 × (sum of negative eigenvalues of the
/// B-partial transpose), floored at 0. Range [0, 1] for two qubits.
double negativity(const DensityMatrix& rho);

/// All five measures of one state, computed consistently.
struct CorrelationReport {
    double mutual_info = 0.0;
    double classical_corr = 0.0;
    double discord = 0.0;
    double gmqd = 0.0;
    double negativity = 0.0;
    MeasurementBasis argmax_basis;
    bool converged = true;
};

CorrelationReport correlation_report(const DensityMatrix& rho,
                                     Subsystem measured = Subsystem::B,
                                     const OptimizerOptions& opts = {});

}  // namespace qcorr
