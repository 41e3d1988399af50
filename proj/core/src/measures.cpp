#include "qcorr/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qcorr {

namespace {

constexpr double kOutcomeFloor = 1e-14;
constexpr double kNegativeEigTol = -1e-12;

double clamp0(double v) { return v <= 0.0 ? 0.0 : v; }

Subsystem other(Subsystem s) { return s == Subsystem::A ? Subsystem::B : Subsystem::A; }

}  // namespace

std::array<double, 3> MeasurementBasis::direction() const {
    return {std::sin(theta_m) * std::cos(phi_m), std::sin(theta_m) * std::sin(phi_m),
            std::cos(theta_m)};
}

std::pair<CMatrix, CMatrix> MeasurementBasis::projectors() const {
    const auto n = direction();
    CMatrix nd(2);
    for (int i = 0; i < 3; ++i) {
        CMatrix s = pauli(i);
        s *= cplx(n[static_cast<std::size_t>(i)]);
        nd += s;
    }
    CMatrix plus = CMatrix::identity(2);
    CMatrix minus = CMatrix::identity(2);
    plus += nd;
    minus -= nd;
    plus *= 0.5;
    minus *= 0.5;
    return {plus, minus};
}

double von_neumann_entropy(const CMatrix& rho) {
    const EigenResult eig = herm_eig(rho);
    double s = 0.0;
    for (double lam : eig.eigenvalues) {
        if (lam <= 0.0) continue;  // 0 log 0 := 0; roundoff negatives clamped
        s -= lam * std::log2(lam);
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.mat); }

double mutual_information(const DensityMatrix& rho) {
    return von_neumann_entropy(partial_trace(rho.mat, Subsystem::A)) +
           von_neumann_entropy(partial_trace(rho.mat, Subsystem::B)) -
           von_neumann_entropy(rho.mat);
}

double conditional_entropy(const DensityMatrix& rho, const MeasurementBasis& basis,
                           Subsystem measured) {
    const auto [plus, minus] = basis.projectors();
    const CMatrix id = CMatrix::identity(2);
    double total = 0.0;
    for (const CMatrix* proj : {&plus, &minus}) {
        const CMatrix m =
            (measured == Subsystem::B) ? kron(id, *proj) : kron(*proj, id);
        const CMatrix sandwich = m * rho.mat * m;
        const double pk = sandwich.trace().real();
        if (pk < kOutcomeFloor) continue;
        CMatrix cond = partial_trace(sandwich, other(measured));
        cond *= cplx(1.0 / pk);
        total += pk * von_neumann_entropy(cond);
    }
    return total;
}

namespace {

// Fold arbitrary angles back to theta in [0, pi], phi in [0, 2*pi) without
// moving the direction they describe.
MeasurementBasis canonical_basis(double theta, double phi) {
    const double two_pi = 2.0 * std::numbers::pi;
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) theta += two_pi;
    if (theta > std::numbers::pi) {
        theta = two_pi - theta;
        phi += std::numbers::pi;
    }
    phi = std::fmod(phi, two_pi);
    if (phi < 0.0) phi += two_pi;
    return {theta, phi};
}

struct Vertex {
    double th, ph, f;
};

}  // namespace

CcResult classical_correlation(const DensityMatrix& rho, Subsystem measured,
                               const OptimizerOptions& opts) {
    const double s_unmeasured = von_neumann_entropy(partial_trace(rho.mat, other(measured)));
    auto objective = [&](double th, double ph) {
        return s_unmeasured - conditional_entropy(rho, MeasurementBasis{th, ph}, measured);
    };

    // stage 1: coarse grid, theta endpoint-inclusive, phi periodic
    double best = -std::numeric_limits<double>::infinity();
    double best_th = 0.0, best_ph = 0.0;
    for (int i = 0; i < opts.grid_theta; ++i) {
        const double th = std::numbers::pi * i / (opts.grid_theta - 1);
        for (int j = 0; j < opts.grid_phi; ++j) {
            const double ph = 2.0 * std::numbers::pi * j / opts.grid_phi;
            const double f = objective(th, ph);
            if (f > best) {
                best = f;
                best_th = th;
                best_ph = ph;
            }
        }
    }

    // stage 2: Nelder-Mead from the best grid point (maximization)
    const double dth = std::numbers::pi / opts.grid_theta;
    const double dph = 2.0 * std::numbers::pi / opts.grid_phi;
    std::array<Vertex, 3> sx = {Vertex{best_th, best_ph, best},
                                Vertex{best_th + dth, best_ph, 0.0},
                                Vertex{best_th, best_ph + dph, 0.0}};
    sx[1].f = objective(sx[1].th, sx[1].ph);
    sx[2].f = objective(sx[2].th, sx[2].ph);

    auto diameter = [&] {
        double d = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                d = std::max(d, std::hypot(sx[static_cast<std::size_t>(i)].th -
                                               sx[static_cast<std::size_t>(j)].th,
                                           sx[static_cast<std::size_t>(i)].ph -
                                               sx[static_cast<std::size_t>(j)].ph));
        return d;
    };

    bool converged = false;
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        std::sort(sx.begin(), sx.end(), [](const Vertex& a, const Vertex& b) {
            return a.f > b.f;  // best first
        });
        if (diameter() < opts.simplex_tol) {
            converged = true;
            break;
        }
        const double cth = 0.5 * (sx[0].th + sx[1].th);
        const double cph = 0.5 * (sx[0].ph + sx[1].ph);
        Vertex& worst = sx[2];

        const Vertex refl{cth + (cth - worst.th), cph + (cph - worst.ph), 0.0};
        const double fr = objective(refl.th, refl.ph);
        if (fr > sx[0].f) {
            const double eth = cth + 2.0 * (refl.th - cth);
            const double eph = cph + 2.0 * (refl.ph - cph);
            const double fe = objective(eth, eph);
            if (fe > fr)
                worst = {eth, eph, fe};
            else
                worst = {refl.th, refl.ph, fr};
        } else if (fr > sx[1].f) {
            worst = {refl.th, refl.ph, fr};
        } else {
            const bool outside = fr > worst.f;
            const double bth = outside ? refl.th : worst.th;
            const double bph = outside ? refl.ph : worst.ph;
            const double xth = cth + 0.5 * (bth - cth);
            const double xph = cph + 0.5 * (bph - cph);
            const double fc = objective(xth, xph);
            if (fc > (outside ? fr : worst.f)) {
                worst = {xth, xph, fc};
            } else {
                for (int i = 1; i < 3; ++i) {
                    Vertex& vx = sx[static_cast<std::size_t>(i)];
                    vx.th = sx[0].th + 0.5 * (vx.th - sx[0].th);
                    vx.ph = sx[0].ph + 0.5 * (vx.ph - sx[0].ph);
                    vx.f = objective(vx.th, vx.ph);
                }
            }
        }
    }

    std::sort(sx.begin(), sx.end(),
              [](const Vertex& a, const Vertex& b) { return a.f > b.f; });
    if (sx[0].f < best) sx[0] = {best_th, best_ph, best};  // never worse than the grid
    return {sx[0].f, canonical_basis(sx[0].th, sx[0].ph), converged};
}

double quantum_discord(const DensityMatrix& rho, Subsystem measured,
                       const OptimizerOptions& opts) {
    const double d = mutual_information(rho) - classical_correlation(rho, measured, opts).value;
    return clamp0(d);
}

namespace {

// Largest eigenvalue of a symmetric 3x3 matrix, trigonometric closed form.
double sym3_max_eigenvalue(const std::array<std::array<double, 3>, 3>& k) {
    const double p1 = k[0][1] * k[0][1] + k[0][2] * k[0][2] + k[1][2] * k[1][2];
    const double q = (k[0][0] + k[1][1] + k[2][2]) / 3.0;
    const double p2 = (k[0][0] - q) * (k[0][0] - q) + (k[1][1] - q) * (k[1][1] - q) +
                      (k[2][2] - q) * (k[2][2] - q) + 2.0 * p1;
    if (p2 <= 0.0) return q;  // scalar matrix
    const double pp = std::sqrt(p2 / 6.0);

    std::array<std::array<double, 3>, 3> b{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (k[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                 (i == j ? q : 0.0)) /
                pp;
    const double det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                       b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                       b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    const double r = std::clamp(det / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    return q + 2.0 * pp * std::cos(phi);
}

}  // namespace

double gmqd(const DensityMatrix& rho) {
    const BlochForm b = bloch_decompose(rho);
    std::array<std::array<double, 3>, 3> k{};
    double x_sq = 0.0, r_sq = 0.0;
    for (int i = 0; i < 3; ++i) {
        const auto si = static_cast<std::size_t>(i);
        x_sq += b.x[si] * b.x[si];
        for (int j = 0; j < 3; ++j) {
            const auto sj = static_cast<std::size_t>(j);
            r_sq += b.r[si][sj] * b.r[si][sj];
            k[si][sj] = b.x[si] * b.x[sj];
            for (int m = 0; m < 3; ++m)
                k[si][sj] += b.r[si][static_cast<std::size_t>(m)] *
                             b.r[sj][static_cast<std::size_t>(m)];
        }
    }
    return 0.25 * (x_sq + r_sq - sym3_max_eigenvalue(k));
}

double negativity(const DensityMatrix& rho) {
    const EigenResult eig = herm_eig(partial_transpose(rho.mat, Subsystem::B));
    double neg_sum = 0.0;
    for (double lam : eig.eigenvalues)
        if (lam < kNegativeEigTol) neg_sum += lam;
    return clamp0(-2.0 * neg_sum);
}

CorrelationReport correlation_report(const DensityMatrix& rho, Subsystem measured,
                                     const OptimizerOptions& opts) {
    CorrelationReport rep;
    const double mi = mutual_information(rho);
    const CcResult cc = classical_correlation(rho, measured, opts);
    rep.mutual_info = clamp0(mi);
    rep.classical_corr = clamp0(cc.value);
    rep.discord = clamp0(mi - cc.value);
    rep.gmqd = clamp0(gmqd(rho));
    rep.negativity = negativity(rho);
    rep.argmax_basis = cc.basis;
    rep.converged = cc.converged;
    return rep;
}

}  // namespace qcorr
