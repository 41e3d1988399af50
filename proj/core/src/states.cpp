#include "qcorr/states.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qcorr {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = -1e-9;

DensityMatrix certified(const CMatrix& m, const char* what) {
    Validation v = validate(m);
    if (!v.state)
        throw std::logic_error(std::string(what) + " produced an invalid state: " +
                               v.report.describe());
    return *v.state;
}

}  // namespace

DensityMatrix werner(double p, double theta, BasisPair pair) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("werner: purity must lie in [0,1], got " +
                                    std::to_string(p));
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    // basis order |00>, |01>, |10>, |11>
    const int hi = (pair == BasisPair::Aligned) ? 3 : 2;  // sin component
    const int lo = (pair == BasisPair::Aligned) ? 0 : 1;  // cos component

    CMatrix m(4);
    for (int i = 0; i < 4; ++i) m(i, i) = (1.0 - p) / 4.0;
    m(hi, hi) += p * s * s;
    m(lo, lo) += p * c * c;
    m(hi, lo) += p * s * c;
    m(lo, hi) += p * s * c;
    return certified(m, "werner");
}

BlochForm bloch_decompose(const DensityMatrix& rho) {
    const CMatrix id = CMatrix::identity(2);
    BlochForm b;
    for (int i = 0; i < 3; ++i) {
        b.x[static_cast<std::size_t>(i)] = (kron(pauli(i), id) * rho.mat).trace().real();
        b.y[static_cast<std::size_t>(i)] = (kron(id, pauli(i)) * rho.mat).trace().real();
        for (int j = 0; j < 3; ++j)
            b.r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (kron(pauli(i), pauli(j)) * rho.mat).trace().real();
    }
    return b;
}

CMatrix bloch_assemble(const BlochForm& b) {
    const CMatrix id = CMatrix::identity(2);
    CMatrix m = CMatrix::identity(4);
    for (int i = 0; i < 3; ++i) {
        m += cplx(b.x[static_cast<std::size_t>(i)]) * kron(pauli(i), id);
        m += cplx(b.y[static_cast<std::size_t>(i)]) * kron(id, pauli(i));
        for (int j = 0; j < 3; ++j)
            m += cplx(b.r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                 kron(pauli(i), pauli(j));
    }
    m *= 0.25;
    return m;
}

DensityMatrix classical_quantum(const std::array<double, 2>& probs, BlochAngles basis,
                                const std::array<CMatrix, 2>& sigmas) {
    if (probs[0] < 0.0 || probs[1] < 0.0 || std::abs(probs[0] + probs[1] - 1.0) > 1e-12)
        throw std::invalid_argument(
            "classical_quantum: probabilities must be non-negative and sum to 1");
    for (const auto& s : sigmas) {
        if (s.dim() != 2)
            throw std::invalid_argument("classical_quantum: sigmas must be 2x2");
        if (std::abs(s.trace().real() - 1.0) > 1e-10)
            throw std::invalid_argument("classical_quantum: sigmas must have unit trace");
    }

    // orthonormal pair along the basis direction
    const double ct = std::cos(basis.theta_b / 2.0);
    const double st = std::sin(basis.theta_b / 2.0);
    const cplx eip = std::polar(1.0, basis.phi_b);
    const cplx up[2] = {cplx(ct), eip * st};
    const cplx dn[2] = {cplx(st), -eip * ct};

    CMatrix m(4);
    for (int k = 0; k < 2; ++k) {
        const cplx* vec = (k == 0) ? up : dn;
        CMatrix proj(2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) proj(r, c) = vec[r] * std::conj(vec[c]);
        m += cplx(probs[static_cast<std::size_t>(k)]) *
             kron(proj, sigmas[static_cast<std::size_t>(k)]);
    }
    return certified(m, "classical_quantum");
}

std::string ValidationReport::describe() const {
    if (ok()) return "ok";
    std::string out;
    char buf[96];
    auto add = [&](const char* fmt, double v) {
        std::snprintf(buf, sizeof buf, fmt, v);
        if (!out.empty()) out += "; ";
        out += buf;
    };
    if (!finite) out = "non-finite entries";
    if (!hermitian) add("hermiticity violated (defect %.3g)", herm_defect);
    if (!unit_trace) add("unit trace violated (trace defect %.3g)", trace_defect);
    if (!positive) add("positivity violated (min eigenvalue %.3g)", min_eigenvalue);
    return out;
}

Validation validate(const CMatrix& m) {
    Validation v;
    if (m.dim() != 4) throw std::invalid_argument("validate expects a 4x4 matrix");

    v.report.finite = m.all_finite();
    if (!v.report.finite) return v;

    v.report.herm_defect = hs_dist(m, m.adjoint());
    v.report.hermitian = v.report.herm_defect <= kHermTol;
    v.report.trace_defect = std::abs(m.trace() - cplx(1.0));
    v.report.unit_trace = v.report.trace_defect <= kTraceTol;

    // eigenvalues of the symmetrized matrix, so a mild hermiticity defect
    // still yields a meaningful positivity diagnostic
    CMatrix sym(4);
    const CMatrix adj = m.adjoint();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) sym(r, c) = 0.5 * (m(r, c) + adj(r, c));
    const EigenResult eig = herm_eig(sym);
    v.report.min_eigenvalue = eig.eigenvalues.back();
    v.report.positive = v.report.min_eigenvalue >= kPsdTol;

    if (v.report.ok()) v.state = DensityMatrix{m};
    return v;
}

}  // namespace qcorr
