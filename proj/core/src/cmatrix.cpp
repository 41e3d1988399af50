#include "qcorr/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qcorr {

namespace {

void require_dim(int dim) {
    if (dim != 2 && dim != 4)
        throw std::invalid_argument("CMatrix dimension must be 2 or 4, got " +
                                    std::to_string(dim));
}

}  // namespace

CMatrix::CMatrix(int dim) : dim_(dim) { require_dim(dim); }

CMatrix CMatrix::identity(int dim) {
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out(r, c) = std::conj((*this)(c, r));
    return out;
}

cplx CMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

bool CMatrix::all_finite() const {
    for (int i = 0; i < dim_ * dim_; ++i)
        if (!std::isfinite(a_[i].real()) || !std::isfinite(a_[i].imag())) return false;
    return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("CMatrix dimension mismatch");
    for (int i = 0; i < dim_ * dim_; ++i) a_[i] += o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("CMatrix dimension mismatch");
    for (int i = 0; i < dim_ * dim_; ++i) a_[i] -= o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    for (int i = 0; i < dim_ * dim_; ++i) a_[i] *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("CMatrix dimension mismatch");
    const int n = a.dim_;
    CMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            const cplx ark = a(r, k);
            if (ark == cplx(0.0)) continue;
            for (int c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
        }
    return out;
}

bool operator==(const CMatrix& a, const CMatrix& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_ * a.dim_; ++i)
        if (a.a_[i] != b.a_[i]) return false;
    return true;
}

CMatrix pauli_x() {
    CMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

CMatrix pauli_y() {
    CMatrix m(2);
    m(0, 1) = cplx(0.0, -1.0);
    m(1, 0) = cplx(0.0, 1.0);
    return m;
}

CMatrix pauli_z() {
    CMatrix m(2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

const CMatrix& pauli(int i) {
    static const std::array<CMatrix, 3> sigma = {pauli_x(), pauli_y(), pauli_z()};
    return sigma.at(static_cast<std::size_t>(i));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != 2 || b.dim() != 2)
        throw std::invalid_argument("kron expects two 2x2 matrices");
    CMatrix out(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

CMatrix partial_trace(const CMatrix& rho, Subsystem keep) {
    if (rho.dim() != 4) throw std::invalid_argument("partial_trace expects a 4x4 matrix");
    CMatrix out(2);
    if (keep == Subsystem::A) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
    } else {
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l)
                out(k, l) = rho(k, l) + rho(2 + k, 2 + l);
    }
    return out;
}

CMatrix partial_transpose(const CMatrix& rho, Subsystem part) {
    if (rho.dim() != 4)
        throw std::invalid_argument("partial_transpose expects a 4x4 matrix");
    CMatrix out(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    if (part == Subsystem::B)
                        out(2 * i + k, 2 * j + l) = rho(2 * i + l, 2 * j + k);
                    else
                        out(2 * i + k, 2 * j + l) = rho(2 * j + k, 2 * i + l);
                }
    return out;
}

double hs_norm_sq(const CMatrix& a) {
    double s = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) s += std::norm(a(r, c));
    return s;
}

double hs_dist(const CMatrix& a, const CMatrix& b) {
    return std::sqrt(hs_norm_sq(a - b));
}

namespace {

double offdiag_norm(const CMatrix& m) {
    double s = 0.0;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
            if (r != c) s += std::norm(m(r, c));
    return std::sqrt(s);
}

}  // namespace

EigenResult herm_eig(const CMatrix& h) {
    const int n = h.dim();

    double defect_sq = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) defect_sq += std::norm(h(r, c) - std::conj(h(c, r)));
    if (std::sqrt(defect_sq) > 1e-12)
        throw std::invalid_argument("herm_eig: matrix is not Hermitian (defect " +
                                    std::to_string(std::sqrt(defect_sq)) + ")");

    CMatrix a(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));
    CMatrix v = CMatrix::identity(n);

    constexpr double kOffTol = 1e-13;
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps && offdiag_norm(a) > kOffTol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double b = std::abs(apq);
                if (b == 0.0) continue;

                // Unitary plane rotation J with J(p,p)=J(q,q)=c, J(p,q)=s,
                // J(q,p)=-conj(s) chosen so (J†AJ)(p,q) = 0.
                const cplx phase = apq / b;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * b);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = t * c * phase;

                // columns: B = A J
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - std::conj(s) * akq;
                    a(k, q) = s * akp + c * akq;
                }
                // rows: A' = J† B
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = std::conj(s) * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - std::conj(s) * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigenResult res{std::vector<double>(static_cast<std::size_t>(n)), CMatrix(n)};
    for (int k = 0; k < n; ++k) {
        res.eigenvalues[static_cast<std::size_t>(k)] = a(order[static_cast<std::size_t>(k)],
                                                         order[static_cast<std::size_t>(k)])
                                                           .real();
        for (int r = 0; r < n; ++r)
            res.eigenvectors(r, k) = v(r, order[static_cast<std::size_t>(k)]);
    }
    return res;
}

}  // namespace qcorr
