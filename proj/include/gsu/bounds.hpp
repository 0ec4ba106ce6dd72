#ifndef GSU_BOUNDS_HPP
#define GSU_BOUNDS_HPP

#include <functional>
#include <string>
#include <vector>

#include "gsu/spectral.hpp"

namespace gsu {

enum class Variant { squared, linear };

const char* variant_name(Variant v);

/// Absolute values of the transformation matrix entries sorted nonincreasing,
/// with running prefix sums of s(p) and s(p)^2. For an n x n orthonormal
/// basis the full squared sum equals n.
struct SortedMagnitudes {
    std::vector<double> s;
    std::vector<double> prefix_sq;   // prefix_sq[p-1] = sum of s(1..p)^2
    std::vector<double> prefix_lin;  // prefix_lin[p-1] = sum of s(1..p)

    int count() const { return static_cast<int>(s.size()); }

    static SortedMagnitudes from_basis(const SpectralBasis& b);
    /// Builds from raw magnitudes (sorts them); orthonormal-energy checks do
    /// not apply here, so truncated prefixes can be replayed directly.
    static SortedMagnitudes from_values(std::vector<double> values);
};

/// Candidate bound at support product p:
///   squared: p / sum of the p largest s^2
///   linear:  p^2 / (sum of the p largest s)^2
/// Nondecreasing in p.
double qn(const SortedMagnitudes& s, int p, Variant variant);

/// 1 / s(1)^2, the reciprocal squared coherence.
double classical_bound(const SortedMagnitudes& s);
double classical_bound(const SpectralBasis& b);

struct DirectSearchResult {
    int p_star = 0;
    double bound = 0.0;
};

/// Smallest integer P with P >= qn(P) - 1e-9; always exists within the count.
DirectSearchResult direct_search_bound(const SortedMagnitudes& s, Variant variant);

struct Iteration {
    int ceil_q = 0;
    double q_n = 0.0;
};

struct FixedPointTrace {
    std::vector<Iteration> iterations;
    double bound = 0.0;
    bool terminated = false;
    bool clamped = false;
};

/// The iterative recalculation: Q <- qn(ceil(Q)) until ceil(Q) >= qn(ceil(Q)).
/// Ceilings use a 1e-9 guard so analytically integral bounds do not round up.
/// The search is clamped at p_max (recorded in the trace if it ever binds).
FixedPointTrace iterate_bound(double q0, int p_max,
                              const std::function<double(int)>& qn_at);

struct BoundReport {
    int n = 0;
    Variant variant = Variant::squared;
    double classical_q = 0.0;
    double improved_q = 0.0;
    double sum_bound = 0.0;
    std::vector<Iteration> iterations;
    bool terminated = false;
    bool clamped = false;
    std::vector<double> s_prefix;  // first 16 sorted magnitudes
};

BoundReport improved_bound(const SpectralBasis& b, Variant variant);
BoundReport improved_bound(const SortedMagnitudes& s, int n, Variant variant);

/// |M||K| / sum of |u_k(n)|^2 over n in M, k in K.
double signal_dependent_bound(const SpectralBasis& b,
                              const std::vector<int>& m_set,
                              const std::vector<int>& k_set);

/// Additive-support bound 2 / avg of the P* largest s(p), with P* the
/// linear-variant fixed point.
double sum_support_bound(const SortedMagnitudes& s);
double sum_support_bound(const SpectralBasis& b);

std::string report_to_json(const BoundReport& r);

}  // namespace gsu

#endif
