#pragma once

#include <array>
#include <complex>
#include <vector>

namespace qcorr {

using cplx = std::complex<double>;

enum class Subsystem { A, B };

/// Dense complex matrix of dimension 2 or 4, row-major storage.
/// All operations on it are pure; instances are plain values.
class CMatrix {
public:
    explicit CMatrix(int dim);
    static CMatrix identity(int dim);

    int dim() const { return dim_; }

    cplx& operator()(int r, int c) { return a_[r * dim_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[r * dim_ + c]; }

    CMatrix adjoint() const;
    cplx trace() const;
    bool all_finite() const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cplx s);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend bool operator==(const CMatrix& a, const CMatrix& b);

private:
    int dim_;
    std::array<cplx, 16> a_{};  // first dim*dim entries in use
};

// 2x2 building blocks
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();
const CMatrix& pauli(int i);  // i in {0,1,2} for x,y,z

/// Kronecker product of two 2x2 matrices. The left factor is qubit A;
/// the composite basis order is |00>, |01>, |10>, |11>.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Trace out one qubit of a 4x4 matrix, keeping `keep`.
CMatrix partial_trace(const CMatrix& rho, Subsystem keep);

/// Transpose the indices of one qubit of a 4x4 matrix. Involutive and
/// exact (pure entry permutation, no arithmetic).
CMatrix partial_transpose(const CMatrix& rho, Subsystem part);

/// Squared Hilbert-Schmidt norm, tr(A†A).
double hs_norm_sq(const CMatrix& a);

/// Hilbert-Schmidt distance ‖a − b‖.
double hs_dist(const CMatrix& a, const CMatrix& b);

struct EigenResult {
    std::vector<double> eigenvalues;  // sorted descending
    CMatrix eigenvectors;             // column k pairs with eigenvalues[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Requires ‖h − h†‖_HS <= 1e-12; the iteration runs on the
/// symmetrized (h + h†)/2 until the off-diagonal norm drops below 1e-13.
EigenResult herm_eig(const CMatrix& h);

}  // namespace qcorr
