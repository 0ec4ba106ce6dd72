#ifndef GSU_RIHACZEK_HPP
#define GSU_RIHACZEK_HPP

#include <string>

#include "gsu/spectral.hpp"

namespace gsu {

enum class Convention { graph, classical };

/// Vertex-frequency energy distribution E(n,k) of a unit-energy signal.
/// graph convention:     E(n,k) = x(n) X(k) u_k(n)
/// classical convention: E(n,k) = x(n) conj(X(k)) conj(u_k(n))
/// The two coincide entrywise for real signals on real bases. Entries may be
/// negative or complex; no nonnegativity holds.
struct EnergyDistribution {
    Eigen::MatrixXcd e;  // row = vertex, column = spectral index
    Convention convention = Convention::graph;
    double scale = 1.0;  // l2 norm of the input before unit-energy normalization
    GraphSignal x;       // normalized signal, retained for the marginals
    Spectrum spec;
};

/// Throws on zero-energy signals; normalizes to unit energy internally and
/// records the scale factor.
EnergyDistribution rihaczek(const SpectralBasis& b, const GraphSignal& x,
                            Convention convention = Convention::graph);

/// Sum over spectral indices per vertex; equals |x(n)|^2.
Eigen::VectorXd vertex_marginal(const EnergyDistribution& d);
/// Sum over vertices per spectral index; equals |X(k)|^2.
Eigen::VectorXd spectral_marginal(const EnergyDistribution& d);

/// Sum of |E(n,k)| over all entries.
double l1_norm(const EnergyDistribution& d);

std::string distribution_to_csv(const EnergyDistribution& d);
std::string distribution_to_json(const EnergyDistribution& d);

}  // namespace gsu

#endif
