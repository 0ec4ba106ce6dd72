#include "gsu/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gsu {

bool SpectralBasis::is_real() const {
    return (u.imag().cwiseAbs().maxCoeff() == 0.0);
}

SpectralBasis eig_sym(const Eigen::MatrixXd& m, double tol) {
    const int n = static_cast<int>(m.rows());
    if (m.cols() != n) throw std::invalid_argument("eig_sym: matrix not square");
    const double scale = m.cwiseAbs().maxCoeff();
    if (scale > 0.0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("eig_sym: matrix not symmetric");

    Eigen::MatrixXd a = m;
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double fro = m.norm();
    const double thresh = (fro > 0.0) ? tol * fro : 0.0;

    constexpr int kMaxSweeps = 50;
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        double off_max = 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                off_max = std::max(off_max, std::abs(a(p, q)));
        if (off_max <= thresh) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= thresh) continue;
                Eigen::JacobiRotation<double> rot;
                rot.makeJacobi(a(p, p), apq, a(q, q));
                a.applyOnTheLeft(p, q, rot.adjoint());
                a.applyOnTheRight(p, q, rot);
                v.applyOnTheRight(p, q, rot);
            }
        }
    }
    if (sweep == kMaxSweeps)
        throw std::runtime_error("eig_sym: no convergence within sweep budget");

    // sort ascending, stable on ties for determinism
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i) < a(j, j); });

    SpectralBasis b;
    b.u.resize(n, n);
    b.lambda.resize(n);
    for (int k = 0; k < n; ++k) {
        b.lambda(k) = a(order[k], order[k]);
        Eigen::VectorXd col = v.col(order[k]);
        int imax = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(col(i)) > std::abs(col(imax))) imax = i;
        if (col(imax) < 0.0) col = -col;
        b.u.col(k) = col.cast<std::complex<double>>();
    }
    return b;
}

SpectralBasis dft_basis(int n) {
    if (n < 1) throw std::invalid_argument("dft_basis: n must be >= 1");
    SpectralBasis b;
    b.u.resize(n, n);
    b.lambda.resize(n);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k) {
        b.lambda(k) = k;  // index placeholder
        for (int row = 0; row < n; ++row) {
            const double phase =
                2.0 * std::numbers::pi * static_cast<double>((static_cast<long long>(row) * k) % n) / n;
            b.u(row, k) = std::polar(inv_sqrt_n, phase);
        }
    }
    return b;
}

Spectrum gft(const SpectralBasis& b, const GraphSignal& x) {
    if (x.size() != b.size()) throw std::invalid_argument("gft: dimension mismatch");
    return b.u.adjoint() * x;
}

GraphSignal igft(const SpectralBasis& b, const Spectrum& spec) {
    if (spec.size() != b.size()) throw std::invalid_argument("igft: dimension mismatch");
    return b.u * spec;
}

double orthonormality_error(const SpectralBasis& b) {
    const int n = b.size();
    Eigen::MatrixXcd g = b.u.adjoint() * b.u;
    g -= Eigen::MatrixXcd::Identity(n, n);
    return g.cwiseAbs().maxCoeff();
}

std::string basis_to_csv(const SpectralBasis& b) {
    const int n = b.size();
    char buf[48];
    std::string out;
    for (int k = 0; k < n; ++k) {
        std::snprintf(buf, sizeof(buf), "%.17g", b.lambda(k));
        out += buf;
        out += (k + 1 < n) ? "," : "\n";
    }
    const bool real = b.is_real();
    for (int row = 0; row < n; ++row) {
        for (int k = 0; k < n; ++k) {
            const std::complex<double> z = b.u(row, k);
            if (real) {
                std::snprintf(buf, sizeof(buf), "%.17g", z.real());
            } else {
                std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
            }
            out += buf;
            out += (k + 1 < n) ? "," : "\n";
        }
    }
    return out;
}

}  // namespace gsu
