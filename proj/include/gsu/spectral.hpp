#ifndef GSU_SPECTRAL_HPP
#define GSU_SPECTRAL_HPP

#include <string>

#include <Eigen/Dense>

namespace gsu {

using GraphSignal = Eigen::VectorXcd;
using Spectrum = Eigen::VectorXcd;

/// Orthonormal transformation basis: column k of `u` is the k-th basis
/// vector, lambda holds the eigenvalues in nondecreasing order. Complex
/// entries appear only for the DFT basis; Laplacian bases are real.
struct SpectralBasis {
    Eigen::MatrixXcd u;
    Eigen::VectorXd lambda;

    int size() const { return static_cast<int>(u.rows()); }
    bool is_real() const;
};

/// Eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.
/// Sweeps run in fixed (p,q) order until every off-diagonal magnitude drops
/// below tol * ||m||_F; throws if 50 sweeps are not enough. Eigenpairs are
/// sorted by eigenvalue ascending and each eigenvector is sign-normalized so
/// its largest-magnitude entry (lowest index on ties) is positive.
SpectralBasis eig_sym(const Eigen::MatrixXd& m, double tol = 1e-12);

/// Unitary DFT basis u_k(n) = exp(j 2 pi n k / N) / sqrt(N). The lambda
/// field carries the index k as a placeholder.
SpectralBasis dft_basis(int n);

Spectrum gft(const SpectralBasis& b, const GraphSignal& x);
GraphSignal igft(const SpectralBasis& b, const Spectrum& spec);

/// Max-entry magnitude of U^H U - I.
double orthonormality_error(const SpectralBasis& b);

/// CSV with a header row of eigenvalues and one eigenvector per column,
/// 17 significant digits.
std::string basis_to_csv(const SpectralBasis& b);

}  // namespace gsu

#endif
