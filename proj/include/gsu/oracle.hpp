#ifndef GSU_ORACLE_HPP
#define GSU_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gsu/bounds.hpp"
#include "gsu/spectral.hpp"

namespace gsu {

struct SupportPair {
    std::vector<int> m_set;  // vertex indices
    std::vector<int> k_set;  // spectral indices
};

struct Feasibility {
    bool feasible = false;
    /// True when the rank decision flips between pivot tolerances tol and
    /// 1e-7; eigensolver noise territory.
    bool marginal = false;
};

/// A pair (M, K) is feasible when some nonzero signal has supp(x) within M
/// and supp(X) within K, i.e. the submatrix of U with rows outside M and
/// columns in K is rank deficient. Enforced for n <= 12.
Feasibility support_feasible(const SpectralBasis& b, const SupportPair& pair,
                             double tol = 1e-9);

struct OracleReport {
    int n = 0;
    int min_feasible_product = 0;
    double bound_squared = 0.0;
    double bound_linear = 0.0;
    int violations = 0;
    int marginal_count = 0;
    std::uint64_t seed = 0;
    long long min_product_observed = 0;  // randomized mode only
    int trials = 0;
};

/// Exhaustive minimum of |M||K| over feasible pairs, enumerated in increasing
/// product order with early exit. n <= 8.
OracleReport min_feasible_product(const SpectralBasis& b, double tol = 1e-9);

/// Randomized signal-level check: random sparse spectra, inverse transform,
/// support counting at threshold 1e-9 * inf-norm, and bound comparison.
/// Deterministic per seed via per-trial substreams.
OracleReport random_signal_check(const SpectralBasis& b, int trials,
                                 std::uint64_t seed,
                                 double support_threshold = 1e-9);

std::string oracle_report_to_json(const OracleReport& r);

}  // namespace gsu

#endif
