#ifndef GSU_TEST_HELPERS_HPP
#define GSU_TEST_HELPERS_HPP

#include <random>

#include "gsu/graph.hpp"
#include "gsu/spectral.hpp"

namespace gsu::testing {

inline Graph random_connected_graph(int n, std::uint64_t seed, double p = 0.5) {
    return Graph::random(n, p, seed);
}

inline SpectralBasis random_basis(int n, std::uint64_t seed, double p = 0.5) {
    return eig_sym(random_connected_graph(n, seed, p).laplacian());
}

inline GraphSignal random_real_signal(int n, std::mt19937_64& rng, bool unit_energy = true) {
    std::normal_distribution<double> dist(0.0, 1.0);
    GraphSignal x(n);
    for (int i = 0; i < n; ++i) x(i) = dist(rng);
    if (unit_energy) x /= x.norm();
    return x;
}

inline GraphSignal random_complex_signal(int n, std::mt19937_64& rng, bool unit_energy = true) {
    std::normal_distribution<double> dist(0.0, 1.0);
    GraphSignal x(n);
    for (int i = 0; i < n; ++i) x(i) = std::complex<double>(dist(rng), dist(rng));
    if (unit_energy) x /= x.norm();
    return x;
}

}  // namespace gsu::testing

#endif
