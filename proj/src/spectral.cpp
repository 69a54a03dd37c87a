#include "optonet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "optonet/errors.hpp"

namespace optonet::spectral {

SymmetricMatrix::SymmetricMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {
    if (order == 0) throw InputError("spectral: matrix order must be >= 1");
}

double SymmetricMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (double v : data_) sum += v * v;
    return std::sqrt(sum);
}

namespace {

// One cyclic Jacobi pass machinery shared by both entry points.
// `basis` is nullptr when eigenvectors are not wanted.
void jacobi(SymmetricMatrix work, std::vector<double>& eigenvalues,
            std::vector<std::vector<double>>* basis) {
    const std::size_t n = work.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (!std::isfinite(work.at(i, j))) {
                throw InputError("spectral: matrix entry (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") is not finite");
            }
        }
    }
    const double threshold = kJacobiRelTol * work.frobenius_norm();

    std::vector<std::vector<double>> v;
    if (basis) {
        v.assign(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
    }

    bool converged = n < 2;
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = work.at(p, q);
                if (!(std::fabs(apq) > threshold)) continue;
                rotated = true;

                const double app = work.at(p, p);
                const double aqq = work.at(q, q);
                const double tau = (aqq - app) / (2.0 * apq);
                double t;
                if (tau >= 0.0) {
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                } else {
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                work.set(p, p, app - t * apq);
                work.set(q, q, aqq + t * apq);
                work.set(p, q, 0.0);
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = work.at(k, p);
                    const double akq = work.at(k, q);
                    work.set(k, p, c * akp - s * akq);
                    work.set(k, q, s * akp + c * akq);
                }
                if (basis) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const double vkp = v[k][p];
                        const double vkq = v[k][q];
                        v[k][p] = c * vkp - s * vkq;
                        v[k][q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        converged = !rotated;
    }
    if (!converged) {
        throw ComputeError("spectral: Jacobi iteration did not converge in " +
                           std::to_string(kJacobiMaxSweeps) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return work.at(a, a) < work.at(b, b); });

    eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = work.at(order[i], order[i]);

    if (basis) {
        basis->assign(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) (*basis)[i][k] = v[k][order[i]];
        }
    }
}

std::vector<double> row_degrees(const SymmetricMatrix& adjacency) {
    const std::size_t n = adjacency.order();
    std::vector<double> deg(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += adjacency.at(i, j);
        if (sum <= 0.0) {
            throw InputError("spectral: adjacency has an isolated node (zero degree at index " +
                             std::to_string(i) + ")");
        }
        deg[i] = sum;
    }
    return deg;
}

}  // namespace

Spectrum eigenvalues_symmetric(const SymmetricMatrix& m) {
    Spectrum s;
    jacobi(m, s.eigenvalues, nullptr);
    return s;
}

EigenDecomposition eigen_symmetric(const SymmetricMatrix& m) {
    EigenDecomposition d;
    jacobi(m, d.eigenvalues, &d.eigenvectors);
    return d;
}

SymmetricMatrix laplacian(const SymmetricMatrix& adjacency) {
    const std::size_t n = adjacency.order();
    const std::vector<double> deg = row_degrees(adjacency);
    SymmetricMatrix l(n);
    for (std::size_t i = 0; i < n; ++i) {
        l.set(i, i, deg[i]);
        for (std::size_t j = i + 1; j < n; ++j) l.set(i, j, -adjacency.at(i, j));
    }
    return l;
}

SymmetricMatrix normalized_laplacian(const SymmetricMatrix& adjacency) {
    const std::size_t n = adjacency.order();
    const std::vector<double> deg = row_degrees(adjacency);
    SymmetricMatrix nl(n);
    for (std::size_t i = 0; i < n; ++i) {
        nl.set(i, i, 1.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = adjacency.at(i, j);
            if (a != 0.0) nl.set(i, j, -a / std::sqrt(deg[i] * deg[j]));
        }
    }
    return nl;
}

double spectral_radius(const SymmetricMatrix& adjacency) {
    const Spectrum s = eigenvalues_symmetric(adjacency);
    return std::max(std::fabs(s.eigenvalues.front()), std::fabs(s.eigenvalues.back()));
}

double algebraic_connectivity(const SymmetricMatrix& laplacian_matrix) {
    if (laplacian_matrix.order() < 2) {
        throw InputError("spectral: algebraic connectivity needs order >= 2");
    }
    const Spectrum s = eigenvalues_symmetric(laplacian_matrix);
    return s.eigenvalues[1];
}

double wsd(const Spectrum& normalized_laplacian_spectrum) {
    const auto& eigs = normalized_laplacian_spectrum.eigenvalues;
    if (eigs.empty()) throw InputError("spectral: wsd of an empty spectrum");

    constexpr double kWidth = 2.0 / kWsdBins;
    std::vector<std::size_t> counts(kWsdBins, 0);
    for (double e : eigs) {
        if (e < -kWsdRangeTol || e > 2.0 + kWsdRangeTol) {
            throw InputError("spectral: eigenvalue " + std::to_string(e) +
                             " outside [0, 2]; not a normalized-Laplacian spectrum");
        }
        const double clamped = std::min(std::max(e, 0.0), 2.0);
        auto bin = static_cast<std::size_t>(clamped / kWidth);
        if (bin >= kWsdBins) bin = kWsdBins - 1;  // eigenvalue exactly 2
        ++counts[bin];
    }

    double total = 0.0;
    for (int k = 0; k < kWsdBins; ++k) {
        if (counts[k] == 0) continue;
        const double midpoint = (k + 0.5) * kWidth;
        const double weight = std::pow(1.0 - midpoint, kWsdPower);
        total += weight * (static_cast<double>(counts[k]) / static_cast<double>(eigs.size()));
    }
    return total;
}

}  // namespace optonet::spectral
