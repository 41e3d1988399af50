#include "qcorr/models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcorr {

const double kCavityRabiOverLambda = std::sqrt(6.0);

namespace {

void require_params(const ModelParams& mp, Model expected, const char* what) {
    if (mp.model != expected)
        throw std::invalid_argument(std::string(what) + ": wrong model selector");
    if (!(mp.p >= 0.0 && mp.p <= 1.0))
        throw std::invalid_argument(std::string(what) + ": purity must lie in [0,1]");
    if (!std::isfinite(mp.theta) || !std::isfinite(mp.lambda_t))
        throw std::invalid_argument(std::string(what) + ": non-finite parameter");
    if (mp.gamma_over_lambda < 0.0)
        throw std::invalid_argument(std::string(what) + ": coupling ratio must be >= 0");
}

DensityMatrix certified(const CMatrix& m, const char* what) {
    Validation v = validate(m);
    if (!v.state)
        throw std::logic_error(std::string(what) + " produced an invalid state: " +
                               v.report.describe());
    return *v.state;
}

std::array<double, 4> sorted_desc(std::array<double, 4> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

}  // namespace

CavityCoefficients cavity_coefficients(const ModelParams& mp) {
    require_params(mp, Model::Cavity, "cavity_coefficients");
    const double w = kCavityRabiOverLambda * mp.lambda_t;
    const double cw = std::cos(w);
    const double sw = std::sin(w);
    const double s = std::sin(mp.theta);
    const double c = std::cos(mp.theta);
    const double q = (1.0 - mp.p) / 4.0;

    CavityCoefficients k{};
    k.a1 = q + (mp.p / 9.0) * (2.0 + cw) * (2.0 + cw) * s * s;
    k.a2 = q + mp.p * c * c + (2.0 * mp.p / 9.0) * (1.0 - cw) * (1.0 - cw) * s * s;
    k.a3 = (mp.p / 3.0) * (2.0 + cw) * s * c;
    k.a4 = q + (mp.p / 6.0) * sw * sw * s * s;
    k.a5 = k.a4 - q;
    return k;
}

DensityMatrix cavity_state(const ModelParams& mp) {
    const CavityCoefficients k = cavity_coefficients(mp);
    CMatrix m(4);
    m(0, 0) = k.a2;
    m(1, 1) = k.a4;
    m(2, 2) = k.a4;
    m(3, 3) = k.a1;
    m(0, 3) = k.a3;
    m(3, 0) = k.a3;
    m(1, 2) = k.a5;
    m(2, 1) = k.a5;
    return certified(m, "cavity_state");
}

std::array<double, 4> cavity_eigvals_analytic(const ModelParams& mp) {
    const CavityCoefficients k = cavity_coefficients(mp);
    const double disc = std::sqrt((k.a1 - k.a2) * (k.a1 - k.a2) + 4.0 * k.a3 * k.a3);
    return sorted_desc({k.a4 + k.a5, k.a4 - k.a5, 0.5 * ((k.a1 + k.a2) + disc),
                        0.5 * ((k.a1 + k.a2) - disc)});
}

CMatrix cavity_reduced(const ModelParams& mp, Subsystem) {
    const CavityCoefficients k = cavity_coefficients(mp);
    CMatrix m(2);
    m(0, 0) = k.a2 + k.a4;
    m(1, 1) = k.a1 + k.a4;
    return m;
}

double decoherence_factor(double gamma_over_lambda, double lambda_t) {
    if (gamma_over_lambda < 0.0 || lambda_t < 0.0)
        throw std::invalid_argument("decoherence_factor: arguments must be >= 0");
    return std::exp(-gamma_over_lambda * lambda_t);
}

DephasingCoefficients dephasing_coefficients(const ModelParams& mp) {
    return dephasing_coefficients(
        mp, [&](double lt) { return decoherence_factor(mp.gamma_over_lambda, lt); });
}

DephasingCoefficients dephasing_coefficients(const ModelParams& mp, const DecoherenceFn& ld) {
    require_params(mp, Model::Dephasing, "dephasing_coefficients");
    DephasingCoefficients k{};
    k.ld = ld(mp.lambda_t);
    k.beta = 0.5 * mp.p * k.ld * std::cos(2.0 * mp.theta) * std::cos(2.0 * mp.lambda_t);
    k.alpha1 = (1.0 - mp.p) / 4.0;
    k.alpha2 = (1.0 + mp.p) / 4.0 - k.beta;
    k.alpha3 = (1.0 + mp.p) / 4.0 + k.beta;
    k.alpha4 = cplx(0.5 * mp.p * std::sin(2.0 * mp.theta),
                    -0.5 * mp.p * k.ld * std::cos(2.0 * mp.theta) *
                        std::sin(2.0 * mp.lambda_t));
    return k;
}

namespace {

CMatrix dephasing_matrix(const DephasingCoefficients& k) {
    CMatrix m(4);
    m(0, 0) = k.alpha1;
    m(1, 1) = k.alpha3;
    m(2, 2) = k.alpha2;
    m(3, 3) = k.alpha1;
    m(2, 1) = k.alpha4;
    m(1, 2) = std::conj(k.alpha4);
    return m;
}

}  // namespace

DensityMatrix dephasing_state(const ModelParams& mp) {
    return certified(dephasing_matrix(dephasing_coefficients(mp)), "dephasing_state");
}

DensityMatrix dephasing_state(const ModelParams& mp, const DecoherenceFn& ld) {
    return certified(dephasing_matrix(dephasing_coefficients(mp, ld)), "dephasing_state");
}

std::array<double, 4> dephasing_eigvals_analytic(const ModelParams& mp) {
    const DephasingCoefficients k = dephasing_coefficients(mp);
    const double half_sum = 0.5 * (k.alpha2 + k.alpha3);
    const double disc = std::sqrt((k.alpha2 - k.alpha3) * (k.alpha2 - k.alpha3) +
                                  4.0 * std::norm(k.alpha4));
    return sorted_desc({k.alpha1, k.alpha1, half_sum + 0.5 * disc, half_sum - 0.5 * disc});
}

CMatrix dephasing_reduced(const ModelParams& mp, Subsystem which) {
    const DephasingCoefficients k = dephasing_coefficients(mp);
    CMatrix m(2);
    if (which == Subsystem::A) {
        m(0, 0) = k.alpha1 + k.alpha3;
        m(1, 1) = k.alpha1 + k.alpha2;
    } else {
        m(0, 0) = k.alpha1 + k.alpha2;
        m(1, 1) = k.alpha1 + k.alpha3;
    }
    return m;
}

DephasingDiagnostics dephasing_diagnostics(const ModelParams& mp) {
    const DephasingCoefficients k = dephasing_coefficients(mp);
    DephasingDiagnostics d{};
    d.coherence = k.alpha4;
    d.coherence_variant = cplx(k.alpha4.real(), -k.beta);

    DephasingCoefficients kv = k;
    kv.alpha4 = d.coherence_variant;
    d.variant_min_eigenvalue = herm_eig(dephasing_matrix(kv)).eigenvalues.back();

    ModelParams at_zero = mp;
    at_zero.lambda_t = 0.0;
    DephasingCoefficients k0 = dephasing_coefficients(at_zero);
    k0.alpha4 = cplx(k0.alpha4.real(), -k0.beta);
    d.variant_initial_residual =
        hs_dist(dephasing_matrix(k0), werner(mp.p, mp.theta, BasisPair::AntiAligned).mat);

    d.spectrum_radicand = 16.0 * (k.beta * k.beta + std::norm(k.alpha4));
    d.spectrum_radicand_variant =
        (1.0 + mp.p) * (1.0 + mp.p) - 16.0 * std::norm(k.alpha4);
    return d;
}

DensityMatrix model_state(const ModelParams& mp) {
    return mp.model == Model::Cavity ? cavity_state(mp) : dephasing_state(mp);
}

}  // namespace qcorr
