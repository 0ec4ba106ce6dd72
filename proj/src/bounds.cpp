#include "gsu/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gsu {

namespace {

constexpr double kCeilGuard = 1e-9;
constexpr double kStopSlack = 1e-9;

int guarded_ceil(double q) {
    return static_cast<int>(std::ceil(q - kCeilGuard));
}

}  // namespace

const char* variant_name(Variant v) {
    return v == Variant::squared ? "squared" : "linear";
}

SortedMagnitudes SortedMagnitudes::from_basis(const SpectralBasis& b) {
    if (orthonormality_error(b) >= 1e-8)
        throw std::invalid_argument("sorted_magnitudes: basis not orthonormal");
    const int n = b.size();
    std::vector<double> values;
    values.reserve(static_cast<size_t>(n) * n);
    // row-major walk keeps ties in stable (n, k) lexicographic order
    for (int row = 0; row < n; ++row)
        for (int k = 0; k < n; ++k) values.push_back(std::abs(b.u(row, k)));
    return from_values(std::move(values));
}

SortedMagnitudes SortedMagnitudes::from_values(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("sorted_magnitudes: empty input");
    std::stable_sort(values.begin(), values.end(), std::greater<double>());
    SortedMagnitudes sm;
    sm.s = std::move(values);
    sm.prefix_sq.resize(sm.s.size());
    sm.prefix_lin.resize(sm.s.size());
    double acc_sq = 0.0, acc_lin = 0.0;
    for (size_t i = 0; i < sm.s.size(); ++i) {
        acc_sq += sm.s[i] * sm.s[i];
        acc_lin += sm.s[i];
        sm.prefix_sq[i] = acc_sq;
        sm.prefix_lin[i] = acc_lin;
    }
    return sm;
}

double qn(const SortedMagnitudes& s, int p, Variant variant) {
    if (p < 1 || p > s.count()) throw std::out_of_range("qn: p out of range");
    if (variant == Variant::squared) {
        return static_cast<double>(p) / s.prefix_sq[p - 1];
    }
    const double avg = s.prefix_lin[p - 1] / p;
    return 1.0 / (avg * avg);
}

double classical_bound(const SortedMagnitudes& s) {
    return 1.0 / (s.s[0] * s.s[0]);
}

double classical_bound(const SpectralBasis& b) {
    return classical_bound(SortedMagnitudes::from_basis(b));
}

DirectSearchResult direct_search_bound(const SortedMagnitudes& s, Variant variant) {
    for (int p = 1; p <= s.count(); ++p) {
        const double q = qn(s, p, variant);
        if (p >= q - kStopSlack) return {p, q};
    }
    // unreachable for orthonormal input; the last prefix averages below 1
    return {s.count(), qn(s, s.count(), variant)};
}

FixedPointTrace iterate_bound(double q0, int p_max,
                              const std::function<double(int)>& qn_at) {
    FixedPointTrace trace;
    double q = q0;
    for (int step = 0; step <= p_max; ++step) {
        int c = guarded_ceil(q);
        if (c < 1) c = 1;
        if (c > p_max) {
            c = p_max;
            trace.clamped = true;
        }
        const double value = qn_at(c);
        trace.iterations.push_back({c, value});
        if (c >= value - kStopSlack || (trace.clamped && c == p_max)) {
            trace.bound = value;
            trace.terminated = true;
            return trace;
        }
        q = value;
    }
    throw std::runtime_error("iterate_bound: no fixed point within step budget");
}

BoundReport improved_bound(const SortedMagnitudes& s, int n, Variant variant) {
    BoundReport r;
    r.n = n;
    r.variant = variant;
    r.classical_q = classical_bound(s);
    FixedPointTrace trace = iterate_bound(
        r.classical_q, s.count(), [&](int p) { return qn(s, p, variant); });
    r.improved_q = trace.bound;
    r.iterations = std::move(trace.iterations);
    r.terminated = trace.terminated;
    r.clamped = trace.clamped;
    r.sum_bound = sum_support_bound(s);
    const int prefix = std::min(16, s.count());
    r.s_prefix.assign(s.s.begin(), s.s.begin() + prefix);
    return r;
}

BoundReport improved_bound(const SpectralBasis& b, Variant variant) {
    return improved_bound(SortedMagnitudes::from_basis(b), b.size(), variant);
}

double signal_dependent_bound(const SpectralBasis& b,
                              const std::vector<int>& m_set,
                              const std::vector<int>& k_set) {
    if (m_set.empty() || k_set.empty())
        throw std::invalid_argument("signal_dependent_bound: empty support set");
    const int n = b.size();
    double sum = 0.0;
    for (int row : m_set) {
        if (row < 0 || row >= n)
            throw std::invalid_argument("signal_dependent_bound: vertex index out of range");
        for (int k : k_set) {
            if (k < 0 || k >= n)
                throw std::invalid_argument("signal_dependent_bound: spectral index out of range");
            sum += std::norm(b.u(row, k));
        }
    }
    return static_cast<double>(m_set.size() * k_set.size()) / sum;
}

double sum_support_bound(const SortedMagnitudes& s) {
    const DirectSearchResult fp = direct_search_bound(s, Variant::linear);
    const double avg = s.prefix_lin[fp.p_star - 1] / fp.p_star;
    return 2.0 / avg;
}

double sum_support_bound(const SpectralBasis& b) {
    return sum_support_bound(SortedMagnitudes::from_basis(b));
}

std::string report_to_json(const BoundReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["variant"] = variant_name(r.variant);
    j["classical_q"] = r.classical_q;
    j["improved_q"] = r.improved_q;
    j["sum_bound"] = r.sum_bound;
    nlohmann::ordered_json iters = nlohmann::ordered_json::array();
    for (const Iteration& it : r.iterations) {
        nlohmann::ordered_json ji;
        ji["ceil_q"] = it.ceil_q;
        ji["q_n"] = it.q_n;
        iters.push_back(std::move(ji));
    }
    j["iterations"] = std::move(iters);
    j["s_prefix"] = r.s_prefix;
    return j.dump();
}

}  // namespace gsu
