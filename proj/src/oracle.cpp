#include "gsu/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gsu {

namespace {

/// Rank by Gaussian elimination with partial pivoting; a pivot counts when
/// its magnitude exceeds tol times the largest absolute entry of the input.
int rank_with_tol(Eigen::MatrixXcd m, double tol) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    if (rows == 0 || cols == 0) return 0;
    const double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0;
    const double thresh = tol * scale;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = rank;
        for (int r = rank + 1; r < rows; ++r)
            if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
        if (std::abs(m(pivot, col)) <= thresh) continue;
        m.row(rank).swap(m.row(pivot));
        for (int r = rank + 1; r < rows; ++r) {
            const std::complex<double> f = m(r, col) / m(rank, col);
            m.row(r).tail(cols - col) -= f * m.row(rank).tail(cols - col);
        }
        ++rank;
    }
    return rank;
}

Eigen::MatrixXcd complement_submatrix(const SpectralBasis& b,
                                      const std::vector<int>& m_set,
                                      const std::vector<int>& k_set) {
    const int n = b.size();
    std::vector<char> in_m(n, 0);
    for (int v : m_set) {
        if (v < 0 || v >= n) throw std::invalid_argument("support: vertex index out of range");
        in_m[v] = 1;
    }
    std::vector<int> rows;
    for (int v = 0; v < n; ++v)
        if (!in_m[v]) rows.push_back(v);
    Eigen::MatrixXcd sub(rows.size(), k_set.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < k_set.size(); ++j) {
            const int k = k_set[j];
            if (k < 0 || k >= n) throw std::invalid_argument("support: spectral index out of range");
            sub(i, j) = b.u(rows[i], k);
        }
    return sub;
}

bool feasible_at(const Eigen::MatrixXcd& sub, double tol) {
    return rank_with_tol(sub, tol) < sub.cols();
}

// all size-k index subsets of [0, n), lexicographic
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(trial) + 1};
    return std::mt19937_64(seq);
}

}  // namespace

Feasibility support_feasible(const SpectralBasis& b, const SupportPair& pair,
                             double tol) {
    if (b.size() > 12)
        throw std::invalid_argument("support_feasible: n > 12 out of combinatorial scope");
    if (pair.m_set.empty() || pair.k_set.empty())
        throw std::invalid_argument("support_feasible: empty support set");
    if (tol <= 0.0) throw std::invalid_argument("support_feasible: tol must be > 0");
    const Eigen::MatrixXcd sub = complement_submatrix(b, pair.m_set, pair.k_set);
    Feasibility f;
    f.feasible = feasible_at(sub, tol);
    f.marginal = (feasible_at(sub, 1e-7) != f.feasible);
    return f;
}

OracleReport min_feasible_product(const SpectralBasis& b, double tol) {
    const int n = b.size();
    if (n > 8)
        throw std::invalid_argument("min_feasible_product: n > 8 out of exhaustive scope");
    OracleReport report;
    report.n = n;
    report.bound_squared = improved_bound(b, Variant::squared).improved_q;
    report.bound_linear = improved_bound(b, Variant::linear).improved_q;

    for (int product = 1; product <= n * n; ++product) {
        bool found = false;
        for (int msize = 1; msize <= n && !found; ++msize) {
            if (product % msize != 0) continue;
            const int ksize = product / msize;
            if (ksize > n) continue;
            for_each_subset(n, msize, [&](const std::vector<int>& m_set) {
                if (found) return;
                for_each_subset(n, ksize, [&](const std::vector<int>& k_set) {
                    if (found) return;
                    const Eigen::MatrixXcd sub = complement_submatrix(b, m_set, k_set);
                    const bool ok = feasible_at(sub, tol);
                    if (ok != feasible_at(sub, 1e-7)) ++report.marginal_count;
                    if (ok) found = true;
                });
            });
        }
        if (found) {
            report.min_feasible_product = product;
            return report;
        }
    }
    // M = K = full set is always feasible, so this is unreachable
    throw std::runtime_error("min_feasible_product: no feasible pair found");
}

OracleReport random_signal_check(const SpectralBasis& b, int trials,
                                 std::uint64_t seed, double support_threshold) {
    if (trials < 1) throw std::invalid_argument("random_signal_check: trials must be >= 1");
    const int n = b.size();
    OracleReport report;
    report.n = n;
    report.seed = seed;
    report.trials = trials;
    report.bound_squared = improved_bound(b, Variant::squared).improved_q;
    report.bound_linear = improved_bound(b, Variant::linear).improved_q;
    report.min_product_observed = static_cast<long long>(n) * n + 1;

    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng = trial_rng(seed, t);
        std::uniform_int_distribution<int> size_dist(1, n);
        std::normal_distribution<double> coef(0.0, 1.0);
        const int ksize = size_dist(rng);
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        Spectrum spec = Spectrum::Zero(n);
        for (int i = 0; i < ksize; ++i) spec(all[i]) = {coef(rng), coef(rng)};
        if (spec.norm() == 0.0) spec(all[0]) = 1.0;
        const GraphSignal x = igft(b, spec);

        const double xthr = support_threshold * x.cwiseAbs().maxCoeff();
        const double sthr = support_threshold * spec.cwiseAbs().maxCoeff();
        std::vector<int> m_set, k_set;
        for (int i = 0; i < n; ++i) {
            if (std::abs(x(i)) > xthr) m_set.push_back(i);
            if (std::abs(spec(i)) > sthr) k_set.push_back(i);
        }
        const long long product =
            static_cast<long long>(m_set.size()) * static_cast<long long>(k_set.size());
        report.min_product_observed = std::min(report.min_product_observed, product);

        const double sig_bound = signal_dependent_bound(b, m_set, k_set);
        const double p = static_cast<double>(product);
        if (p < report.bound_squared - 1e-9 || p < report.bound_linear - 1e-9 ||
            p < sig_bound - 1e-9)
            ++report.violations;
    }
    return report;
}

std::string oracle_report_to_json(const OracleReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["min_feasible_product"] = r.min_feasible_product;
    j["bound_squared"] = r.bound_squared;
    j["bound_linear"] = r.bound_linear;
    j["violations"] = r.violations;
    j["marginal_count"] = r.marginal_count;
    j["seed"] = r.seed;
    if (r.trials > 0) {
        j["trials"] = r.trials;
        j["min_product_observed"] = r.min_product_observed;
    }
    return j.dump();
}

}  // namespace gsu
