#include "gsu/rihaczek.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gsu {

EnergyDistribution rihaczek(const SpectralBasis& b, const GraphSignal& x,
                            Convention convention) {
    const int n = b.size();
    if (x.size() != n) throw std::invalid_argument("rihaczek: dimension mismatch");
    const double norm = x.norm();
    if (norm == 0.0) throw std::invalid_argument("rihaczek: zero-energy signal");

    EnergyDistribution d;
    d.convention = convention;
    d.scale = norm;
    d.x = x / norm;
    d.spec = gft(b, d.x);
    d.e.resize(n, n);
    for (int row = 0; row < n; ++row) {
        for (int k = 0; k < n; ++k) {
            if (convention == Convention::graph) {
                d.e(row, k) = d.x(row) * d.spec(k) * b.u(row, k);
            } else {
                d.e(row, k) = d.x(row) * std::conj(d.spec(k)) * std::conj(b.u(row, k));
            }
        }
    }
    return d;
}

Eigen::VectorXd vertex_marginal(const EnergyDistribution& d) {
    return d.e.rowwise().sum().real();
}

Eigen::VectorXd spectral_marginal(const EnergyDistribution& d) {
    return d.e.colwise().sum().real().transpose();
}

double l1_norm(const EnergyDistribution& d) {
    return d.e.cwiseAbs().sum();
}

std::string distribution_to_csv(const EnergyDistribution& d) {
    const int n = static_cast<int>(d.e.rows());
    const bool real = (d.e.imag().cwiseAbs().maxCoeff() == 0.0);
    char buf[48];
    std::string out;
    for (int row = 0; row < n; ++row) {
        for (int k = 0; k < n; ++k) {
            if (real) {
                std::snprintf(buf, sizeof(buf), "%.17g", d.e(row, k).real());
            } else {
                std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", d.e(row, k).real(),
                              d.e(row, k).imag());
            }
            out += buf;
            out += (k + 1 < n) ? "," : "\n";
        }
    }
    return out;
}

std::string distribution_to_json(const EnergyDistribution& d) {
    const int n = static_cast<int>(d.e.rows());
    nlohmann::ordered_json j;
    j["n"] = n;
    j["convention"] = (d.convention == Convention::graph) ? "graph" : "classical";
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    const bool real = (d.e.imag().cwiseAbs().maxCoeff() == 0.0);
    for (int row = 0; row < n; ++row) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (int k = 0; k < n; ++k) {
            if (real) {
                r.push_back(d.e(row, k).real());
            } else {
                r.push_back(nlohmann::ordered_json::array({d.e(row, k).real(), d.e(row, k).imag()}));
            }
        }
        entries.push_back(std::move(r));
    }
    j["entries"] = std::move(entries);
    return j.dump();
}

}  // namespace gsu
