#pragma once

#include <array>
#include <functional>

#include "qcorr/states.hpp"

namespace qcorr {

enum class Model { Cavity, Dephasing };

/// Parameters of either model. `lambda_t` is the dimensionless time
/// (coupling constant times physical time).
struct ModelParams {
    double p = 1.0;                  // purity of the initial Werner mixture
    double theta = 0.0;              // initial-state angle, radians
    double gamma_over_lambda = 0.0;  // bath coupling ratio (dephasing only)
    double lambda_t = 0.0;
    Model model = Model::Cavity;
};

/// Two-qubit vacuum Rabi frequency of the resonant cavity model in units
/// of the qubit-cavity coupling. Single source of truth for the model's
/// oscillation: the state is exactly (2*pi / this)-periodic in lambda_t.
extern const double kCavityRabiOverLambda;  // sqrt(6)

/// Entries of the cavity-model state: diagonal (a2, a4, a4, a1) in basis
/// order |00>,|01>,|10>,|11>, a3 between |00>/|11>, a5 between |01>/|10>.
struct CavityCoefficients {
    double a1, a2, a3, a4, a5;
};

CavityCoefficients cavity_coefficients(const ModelParams& mp);
DensityMatrix cavity_state(const ModelParams& mp);

/// Closed-form spectrum {a4±a5, ((a1+a2) ± sqrt((a1−a2)² + 4a3²))/2},
/// sorted descending.
std::array<double, 4> cavity_eigvals_analytic(const ModelParams& mp);

/// Reduced single-qubit state diag(a2+a4, a1+a4); identical for A and B,
/// and diagonal for all parameters.
CMatrix cavity_reduced(const ModelParams& mp, Subsystem which);

/// Effective decoherence factor exp(−(gamma/lambda) · lambda_t), in (0,1].
double decoherence_factor(double gamma_over_lambda, double lambda_t);

/// Alternate bath models plug in here: a map lambda_t -> damping in (0,1].
using DecoherenceFn = std::function<double(double)>;

/// Entries of the dephasing-model state: diagonal (alpha1, alpha3, alpha2,
/// alpha1) in basis order |00>,|01>,|10>,|11> and coherence alpha4 between
/// |10> and |01>. The populations carry the cosine of the exchange phase
/// 2*lambda_t and the coherence carries its sine, so with ld == 1 the
/// spectrum stays fixed under the evolution.
struct DephasingCoefficients {
    double alpha1, alpha2, alpha3;
    cplx alpha4;
    double beta;  // population shift (p/2) * ld * cos(2 theta) * cos(2 lambda_t)
    double ld;    // decoherence factor actually applied
};

DephasingCoefficients dephasing_coefficients(const ModelParams& mp);
DephasingCoefficients dephasing_coefficients(const ModelParams& mp, const DecoherenceFn& ld);
DensityMatrix dephasing_state(const ModelParams& mp);
DensityMatrix dephasing_state(const ModelParams& mp, const DecoherenceFn& ld);

/// Closed-form spectrum {alpha1, alpha1, block pair from the |01>/|10>
/// subspace}, sorted descending.
std::array<double, 4> dephasing_eigvals_analytic(const ModelParams& mp);

/// Reduced single-qubit states: A = diag(alpha1+alpha3, alpha1+alpha2),
/// B with the populations swapped.
CMatrix dephasing_reduced(const ModelParams& mp, Subsystem which);

/// Cross-check data for the dephasing model. `coherence_variant` replaces
/// the sine of the exchange phase in Im(alpha4) by its cosine; that variant
/// fails positivity for large purity and does not reproduce the Werner
/// state at lambda_t = 0, which the fields below quantify.
/// `spectrum_radicand_variant` is an alternate closed form of the inner
/// radicand that disagrees with the block form whenever beta != 0.
struct DephasingDiagnostics {
    cplx coherence;                    // alpha4 in use
    cplx coherence_variant;            // cosine-phase variant
    double variant_min_eigenvalue;     // smallest eigenvalue of the variant state
    double variant_initial_residual;   // HS distance of the variant at lambda_t=0
                                       // from the matching Werner state
    double spectrum_radicand;          // 16*(beta² + |alpha4|²)
    double spectrum_radicand_variant;  // (1+p)² − 16|alpha4|²
};

DephasingDiagnostics dephasing_diagnostics(const ModelParams& mp);

/// Dispatch on mp.model.
DensityMatrix model_state(const ModelParams& mp);

}  // namespace qcorr
