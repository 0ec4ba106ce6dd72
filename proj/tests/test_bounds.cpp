#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "gsu/bounds.hpp"
#include "gsu/graph.hpp"
#include "helpers.hpp"

using namespace gsu;

namespace {

// s-vector printed for the 16-vertex example basis
const std::vector<double> kExample2S = {0.5857, 0.5285, 0.3743, 0.3669, 0.3659, 0.3658};

SpectralBasis identity_basis(int n) {
    SpectralBasis b;
    b.u = Eigen::MatrixXcd::Identity(n, n);
    b.lambda = Eigen::VectorXd::LinSpaced(n, 0, n - 1);
    return b;
}

}  // namespace

TEST_CASE("sorted magnitudes") {
    SUBCASE("dft(16): all 256 values are 0.25") {
        SortedMagnitudes s = SortedMagnitudes::from_basis(dft_basis(16));
        REQUIRE(s.count() == 256);
        for (double v : s.s) CHECK(v == doctest::Approx(0.25).epsilon(1e-12));
    }

    SUBCASE("nonincreasing order and prefix consistency") {
        SortedMagnitudes s = SortedMagnitudes::from_basis(testing::random_basis(10, 77));
        double acc_sq = 0.0, acc_lin = 0.0;
        for (int p = 1; p <= s.count(); ++p) {
            if (p > 1) CHECK(s.s[p - 1] <= s.s[p - 2]);
            acc_sq += s.s[p - 1] * s.s[p - 1];
            acc_lin += s.s[p - 1];
            CHECK(std::abs(s.prefix_sq[p - 1] - acc_sq) < 1e-12);
            CHECK(std::abs(s.prefix_lin[p - 1] - acc_lin) < 1e-12);
        }
        // total energy of an orthonormal matrix
        CHECK(s.prefix_sq.back() == doctest::Approx(10.0).epsilon(1e-9));
    }

    SUBCASE("non-orthonormal basis rejected") {
        SpectralBasis bad = identity_basis(4);
        bad.u *= 1.5;
        CHECK_THROWS_AS(SortedMagnitudes::from_basis(bad), std::invalid_argument);
    }
}

TEST_CASE("qn on the printed s-vector") {
    SortedMagnitudes s = SortedMagnitudes::from_values(kExample2S);
    CHECK(std::abs(qn(s, 1, Variant::squared) - 2.9156) < 1e-3);
    CHECK(std::abs(qn(s, 2, Variant::squared) - 3.2137) < 1e-3);
    CHECK(std::abs(qn(s, 5, Variant::squared) - 4.8499) < 1e-3);
    CHECK_THROWS_AS(qn(s, 0, Variant::squared), std::out_of_range);
    CHECK_THROWS_AS(qn(s, 7, Variant::squared), std::out_of_range);
}

TEST_CASE("classical bound") {
    // scalar check with the printed maxima
    CHECK(std::abs(classical_bound(SortedMagnitudes::from_values({std::sqrt(0.3430)})) - 2.9155) <
          1e-3);
    CHECK(std::abs(classical_bound(SortedMagnitudes::from_values({std::sqrt(0.2597)})) - 3.8510) <
          2e-3);
    CHECK(std::abs(classical_bound(dft_basis(32)) - 32.0) < 1e-9);
}

TEST_CASE("direct search") {
    SUBCASE("printed s-vector, squared variant") {
        SortedMagnitudes s = SortedMagnitudes::from_values(kExample2S);
        DirectSearchResult r = direct_search_bound(s, Variant::squared);
        CHECK(r.p_star == 5);
        CHECK(std::abs(r.bound - 4.8499) < 1e-3);
    }

    SUBCASE("dft(N): P* = N, bound = N") {
        SortedMagnitudes s = SortedMagnitudes::from_basis(dft_basis(16));
        DirectSearchResult r = direct_search_bound(s, Variant::squared);
        CHECK(r.p_star == 16);
        CHECK(std::abs(r.bound - 16.0) < 1e-9);
    }

    SUBCASE("identity basis: P* = 1, bound = 1") {
        SortedMagnitudes s = SortedMagnitudes::from_basis(identity_basis(6));
        for (Variant v : {Variant::squared, Variant::linear}) {
            DirectSearchResult r = direct_search_bound(s, v);
            CHECK(r.p_star == 1);
            CHECK(r.bound == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("iterative algorithm") {
    SUBCASE("recorded trace replay") {
        std::map<int, double> recorded = {{4, 4.6645}, {5, 4.7832}};
        FixedPointTrace t =
            iterate_bound(3.8510, 144, [&](int p) { return recorded.at(p); });
        REQUIRE(t.iterations.size() == 2);
        CHECK(t.iterations[0].ceil_q == 4);
        CHECK(t.iterations[0].q_n == doctest::Approx(4.6645));
        CHECK(t.iterations[1].ceil_q == 5);
        CHECK(t.bound == doctest::Approx(4.7832));
        CHECK(t.terminated);
        CHECK_FALSE(t.clamped);
    }

    SUBCASE("printed s-vector fixed point") {
        SortedMagnitudes s = SortedMagnitudes::from_values(kExample2S);
        BoundReport r = improved_bound(s, 16, Variant::squared);
        CHECK(std::abs(r.improved_q - 4.8499) < 1e-3);
        CHECK(r.iterations.back().ceil_q == 5);
        CHECK(r.terminated);
    }

    SUBCASE("dft stops in exactly one iteration") {
        for (int n : {4, 16}) {
            for (Variant v : {Variant::squared, Variant::linear}) {
                BoundReport r = improved_bound(dft_basis(n), v);
                CHECK(r.iterations.size() == 1);
                CHECK(std::abs(r.improved_q - n) < 1e-9);
                CHECK(std::abs(r.classical_q - n) < 1e-9);
            }
        }
    }

    SUBCASE("ceilQ nondecreasing across iterations") {
        BoundReport r = improved_bound(testing::random_basis(12, 5), Variant::squared);
        for (size_t i = 1; i < r.iterations.size(); ++i)
            CHECK(r.iterations[i].ceil_q >= r.iterations[i - 1].ceil_q);
    }
}

TEST_CASE("bound properties on random bases") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 4 + static_cast<int>(seed % 10);
        SpectralBasis b = testing::random_basis(n, 1000 + seed);
        SortedMagnitudes s = SortedMagnitudes::from_basis(b);

        // qn monotone in p
        for (int p = 1; p < s.count(); ++p)
            for (Variant v : {Variant::squared, Variant::linear})
                CHECK(qn(s, p + 1, v) >= qn(s, p, v) - 1e-12);

        BoundReport sq = improved_bound(b, Variant::squared);
        BoundReport lin = improved_bound(b, Variant::linear);

        // dominance chain
        CHECK(sq.improved_q >= sq.classical_q - 1e-12);
        CHECK(lin.improved_q >= sq.improved_q - 1e-12);

        // solution-existence window
        CHECK(sq.improved_q >= 1.0 - 1e-12);
        CHECK(sq.improved_q <= n + 1e-9);
        CHECK(lin.improved_q >= 1.0 - 1e-12);
        CHECK(lin.improved_q <= n + 1e-9);

        // fixed-point equivalence against the direct search
        for (Variant v : {Variant::squared, Variant::linear}) {
            DirectSearchResult ds = direct_search_bound(s, v);
            BoundReport it = improved_bound(b, v);
            CHECK(std::abs(ds.bound - it.improved_q) < 1e-9);
        }
    }
}

TEST_CASE("signal dependent bound") {
    SUBCASE("dft: any support sets give exactly N") {
        SpectralBasis b = dft_basis(8);
        CHECK(std::abs(signal_dependent_bound(b, {0, 3}, {1, 4, 6}) - 8.0) < 1e-9);
    }

    SUBCASE("full index sets give N") {
        SpectralBasis b = testing::random_basis(7, 3);
        std::vector<int> all = {0, 1, 2, 3, 4, 5, 6};
        CHECK(std::abs(signal_dependent_bound(b, all, all) - 7.0) < 1e-9);
    }

    SUBCASE("sorted prefix dominates any same-size support sum") {
        std::mt19937_64 rng(55);
        SpectralBasis b = testing::random_basis(8, 21);
        SortedMagnitudes s = SortedMagnitudes::from_basis(b);
        std::uniform_int_distribution<int> size_dist(1, 8);
        for (int t = 0; t < 50; ++t) {
            std::vector<int> idx = {0, 1, 2, 3, 4, 5, 6, 7};
            std::shuffle(idx.begin(), idx.end(), rng);
            std::vector<int> m(idx.begin(), idx.begin() + size_dist(rng));
            std::shuffle(idx.begin(), idx.end(), rng);
            std::vector<int> k(idx.begin(), idx.begin() + size_dist(rng));
            const int product = static_cast<int>(m.size() * k.size());
            CHECK(signal_dependent_bound(b, m, k) >= qn(s, product, Variant::squared) - 1e-9);
        }
    }

    SUBCASE("empty set rejected") {
        CHECK_THROWS_AS(signal_dependent_bound(dft_basis(4), {}, {0}), std::invalid_argument);
    }
}

TEST_CASE("sum support bound") {
    CHECK(std::abs(sum_support_bound(dft_basis(16)) - 8.0) < 1e-9);  // 2 sqrt(N)
    CHECK(std::abs(sum_support_bound(identity_basis(5)) - 2.0) < 1e-12);

    SUBCASE("identity with the linear-variant bound") {
        SpectralBasis b = testing::random_basis(9, 13);
        BoundReport lin = improved_bound(b, Variant::linear);
        CHECK(std::abs(sum_support_bound(b) - 2.0 * std::sqrt(lin.improved_q)) < 1e-6);
    }
}

TEST_CASE("bound report JSON") {
    BoundReport r = improved_bound(dft_basis(4), Variant::squared);
    std::string json = report_to_json(r);
    CHECK(json.rfind("{\"n\":4,\"variant\":\"squared\",\"classical_q\":", 0) == 0);
    CHECK(json.find("\"iterations\":[{\"ceil_q\":4,") != std::string::npos);
    CHECK(json.find("\"s_prefix\":[") != std::string::npos);
}
