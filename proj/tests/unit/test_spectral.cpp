#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "optonet/errors.hpp"
#include "optonet/spectral.hpp"
#include "optonet/topology.hpp"
#include "test_support.hpp"

using namespace optonet;
namespace ts = test_support;
using doctest::Approx;

namespace {

spectral::SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    spectral::SymmetricMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
    return m;
}

spectral::SymmetricMatrix random_symmetric(Rng& rng, std::size_t n, double scale) {
    spectral::SymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m.set(i, j, rng.uniform(-scale, scale));
    return m;
}

}  // namespace

TEST_CASE("small closed-form spectra") {
    const auto id3 = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto s1 = spectral::eigenvalues_symmetric(id3);
    REQUIRE(s1.eigenvalues.size() == 3);
    for (double e : s1.eigenvalues) CHECK(e == Approx(1.0).epsilon(1e-12));

    const auto s2 = spectral::eigenvalues_symmetric(from_rows({{2, 1}, {1, 2}}));
    CHECK(s2.eigenvalues[0] == Approx(1.0).epsilon(1e-12));
    CHECK(s2.eigenvalues[1] == Approx(3.0).epsilon(1e-12));

    const auto c4_lap = spectral::laplacian(adjacency_matrix(ts::cycle_graph(4)));
    const auto s3 = spectral::eigenvalues_symmetric(c4_lap);
    const std::vector<double> want = {0, 2, 2, 4};
    REQUIRE(s3.eigenvalues.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::fabs(s3.eigenvalues[i] - want[i]) < 1e-9);
}

TEST_CASE("cycle and complete-graph Laplacian spectra match closed forms") {
    for (int n : {5, 6, 7}) {
        const auto lap = spectral::laplacian(adjacency_matrix(ts::cycle_graph(n)));
        auto eigs = spectral::eigenvalues_symmetric(lap).eigenvalues;
        std::vector<double> want;
        for (int k = 0; k < n; ++k)
            want.push_back(2.0 - 2.0 * std::cos(2.0 * M_PI * k / n));
        std::sort(want.begin(), want.end());
        for (int i = 0; i < n; ++i) CHECK(std::fabs(eigs[i] - want[i]) < 1e-9);
    }
    for (int n : {4, 6}) {
        const auto lap = spectral::laplacian(adjacency_matrix(ts::complete_graph(n)));
        auto eigs = spectral::eigenvalues_symmetric(lap).eigenvalues;
        CHECK(std::fabs(eigs[0]) < 1e-9);
        for (int i = 1; i < n; ++i) CHECK(std::fabs(eigs[i] - n) < 1e-9);
    }
}

TEST_CASE("laplacian shape: zero row sums, degree diagonal, trace 2m") {
    const auto star = ts::star_graph(4);
    const auto lap = spectral::laplacian(adjacency_matrix(star));
    CHECK(lap.at(0, 0) == 3.0);
    CHECK(lap.at(1, 1) == 1.0);
    double trace = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        double row = 0;
        for (std::size_t j = 0; j < 4; ++j) row += lap.at(i, j);
        CHECK(row == 0.0);
        trace += lap.at(i, i);
    }
    CHECK(trace == 2.0 * static_cast<double>(star.edge_count()));

    const auto norm = spectral::normalized_laplacian(adjacency_matrix(star));
    for (std::size_t i = 0; i < 4; ++i) CHECK(norm.at(i, i) == Approx(1.0).epsilon(1e-12));

    // K2: both Laplacians coincide.
    const auto k2_lap = spectral::laplacian(adjacency_matrix(ts::build("k2", 2, {{1, 2}})));
    CHECK(k2_lap.at(0, 0) == 1.0);
    CHECK(k2_lap.at(0, 1) == -1.0);

    // An isolated node has no degree to normalize by.
    spectral::SymmetricMatrix isolated(2);
    CHECK_THROWS_AS(spectral::laplacian(isolated), InputError);
    CHECK_THROWS_AS(spectral::normalized_laplacian(isolated), InputError);
}

TEST_CASE("eigensolver: sum = trace, product = determinant, residuals small") {
    Rng rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng.index(5);  // 2..6
        auto m = random_symmetric(rng, n, 2.0);
        std::vector<std::vector<double>> rows(n, std::vector<double>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
        const double det = ts::det_cofactor(rows);
        if (std::fabs(det) < 0.1) continue;  // keep the relative check meaningful

        const auto decomp = spectral::eigen_symmetric(m);
        double trace = 0, sum = 0, prod = 1;
        for (std::size_t i = 0; i < n; ++i) {
            trace += m.at(i, i);
            sum += decomp.eigenvalues[i];
            prod *= decomp.eigenvalues[i];
        }
        CHECK(std::fabs(sum - trace) <= 1e-8 * std::max(1.0, std::fabs(trace)));
        CHECK(std::fabs(prod - det) <= 1e-8 * std::fabs(det));

        // ||Mv - lambda v|| per pair, plus pairwise orthonormality.
        for (std::size_t k = 0; k < n; ++k) {
            const auto& v = decomp.eigenvectors[k];
            double norm2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                double mv = 0;
                for (std::size_t j = 0; j < n; ++j) mv += m.at(i, j) * v[j];
                CHECK(std::fabs(mv - decomp.eigenvalues[k] * v[i]) < 1e-8);
                norm2 += v[i] * v[i];
            }
            CHECK(norm2 == Approx(1.0).epsilon(1e-9));
            for (std::size_t l = k + 1; l < n; ++l) {
                double dot = 0;
                for (std::size_t i = 0; i < n; ++i) dot += v[i] * decomp.eigenvectors[l][i];
                CHECK(std::fabs(dot) < 1e-9);
            }
        }
        // Ascending order.
        CHECK(std::is_sorted(decomp.eigenvalues.begin(), decomp.eigenvalues.end()));
    }

    spectral::SymmetricMatrix bad(2);
    bad.set(0, 1, std::nan(""));
    CHECK_THROWS_AS(spectral::eigenvalues_symmetric(bad), InputError);
}

TEST_CASE("graph spectra invariants over random connected graphs") {
    Rng rng(505);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng.index(17));  // 4..20
        const auto t = ts::random_connected(rng, n, rng.uniform(0.05, 0.5));
        const auto adjacency = adjacency_matrix(t);

        const auto lap_eigs =
            spectral::eigenvalues_symmetric(spectral::laplacian(adjacency)).eigenvalues;
        int near_zero = 0;
        double sum = 0;
        for (double e : lap_eigs) {
            if (std::fabs(e) < 1e-8) ++near_zero;
            sum += e;
        }
        CHECK(near_zero == 1);  // one component
        const double m2 = 2.0 * static_cast<double>(t.edge_count());
        CHECK(std::fabs(sum - m2) <= 1e-8 * m2);

        const auto norm_eigs =
            spectral::eigenvalues_symmetric(spectral::normalized_laplacian(adjacency))
                .eigenvalues;
        for (double e : norm_eigs) {
            CHECK(e >= -1e-9);
            CHECK(e <= 2.0 + 1e-9);
        }

        // Average degree <= spectral radius <= max degree.
        const double rho = spectral::spectral_radius(adjacency);
        std::size_t max_deg = 0;
        for (std::size_t v = 0; v < t.node_count(); ++v)
            max_deg = std::max(max_deg, t.degree(v));
        CHECK(rho >= m2 / static_cast<double>(n) - 1e-9);
        CHECK(rho <= static_cast<double>(max_deg) + 1e-9);

        CHECK(spectral::algebraic_connectivity(spectral::laplacian(adjacency)) > 0.0);
    }
}

TEST_CASE("spectral radius and algebraic connectivity closed forms") {
    CHECK(spectral::spectral_radius(adjacency_matrix(ts::complete_graph(5))) ==
          Approx(4.0).epsilon(1e-9));
    CHECK(spectral::spectral_radius(adjacency_matrix(ts::cycle_graph(6))) ==
          Approx(2.0).epsilon(1e-9));
    CHECK(spectral::spectral_radius(adjacency_matrix(ts::star_graph(5))) ==
          Approx(2.0).epsilon(1e-9));  // sqrt(n-1) with n-1 = 4 leaves
    CHECK(spectral::algebraic_connectivity(
              spectral::laplacian(adjacency_matrix(ts::build("k2", 2, {{1, 2}})))) ==
          Approx(2.0).epsilon(1e-9));
    CHECK(spectral::algebraic_connectivity(
              spectral::laplacian(adjacency_matrix(ts::cycle_graph(4)))) ==
          Approx(2.0).epsilon(1e-9));
    CHECK(spectral::algebraic_connectivity(
              spectral::laplacian(adjacency_matrix(ts::complete_graph(5)))) ==
          Approx(5.0).epsilon(1e-9));
}

TEST_CASE("weighted spectral distribution") {
    // Frozen reference: C4 normalized-Laplacian spectrum {0, 1, 1, 2}.
    spectral::Spectrum c4{{0.0, 1.0, 1.0, 2.0}};
    CHECK(spectral::wsd(c4) == Approx(0.45184414062500006).epsilon(1e-12));

    // All mass in the bin holding 1.0 (midpoint 1.025).
    spectral::Spectrum ones{{1.0, 1.0, 1.0, 1.0}};
    CHECK(spectral::wsd(ones) == Approx(3.9062499999999446e-07).epsilon(1e-9));

    // Permutation invariance.
    spectral::Spectrum shuffled{{2.0, 1.0, 0.0, 1.0}};
    CHECK(spectral::wsd(shuffled) == spectral::wsd(c4));

    // fp noise at the boundaries is clamped, genuine violations rejected.
    spectral::Spectrum noisy{{-1e-10, 1.0, 2.0 + 1e-10}};
    CHECK_NOTHROW(spectral::wsd(noisy));
    spectral::Spectrum low{{-1e-6, 1.0}};
    CHECK_THROWS_AS(spectral::wsd(low), InputError);
    spectral::Spectrum high{{1.0, 2.1}};
    CHECK_THROWS_AS(spectral::wsd(high), InputError);

    // Result stays in [0, 1].
    Rng rng(66);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> eigs(10);
        for (auto& e : eigs) e = rng.uniform(0.0, 2.0);
        const double w = spectral::wsd(spectral::Spectrum{eigs});
        CHECK(w >= 0.0);
        CHECK(w <= 1.0);
    }
}

TEST_CASE("complete-graph normalized spectrum: 0 then n/(n-1)") {
    const int n = 6;
    const auto eigs = spectral::eigenvalues_symmetric(
                          spectral::normalized_laplacian(
                              adjacency_matrix(ts::complete_graph(n))))
                          .eigenvalues;
    CHECK(std::fabs(eigs[0]) < 1e-9);
    for (int i = 1; i < n; ++i)
        CHECK(eigs[i] == Approx(static_cast<double>(n) / (n - 1)).epsilon(1e-9));
}
