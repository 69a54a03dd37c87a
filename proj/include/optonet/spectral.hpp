#pragma once

#include <cstddef>
#include <vector>

namespace optonet::spectral {

// Dense symmetric matrix; set() mirrors automatically.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::size_t order);

    std::size_t order() const { return order_; }

    double at(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

    void set(std::size_t i, std::size_t j, double value) {
        data_[i * order_ + j] = value;
        data_[j * order_ + i] = value;
    }

    double frobenius_norm() const;

private:
    std::size_t order_;
    std::vector<double> data_;
};

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
};

struct EigenDecomposition {
    std::vector<double> eigenvalues;               // ascending
    std::vector<std::vector<double>> eigenvectors; // eigenvectors[i] pairs with eigenvalues[i]
};

// Rotations fire while |a_pq| > kJacobiRelTol * ||M||_F (norm of the input).
inline constexpr double kJacobiRelTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Cyclic Jacobi. Throws ComputeError if the sweep budget is exhausted.
Spectrum eigenvalues_symmetric(const SymmetricMatrix& m);
// Same iteration, accumulating the rotations into an orthonormal basis.
EigenDecomposition eigen_symmetric(const SymmetricMatrix& m);

// L = D - A. The adjacency must have all row sums >= 1 (no isolated nodes).
SymmetricMatrix laplacian(const SymmetricMatrix& adjacency);
// N = I - D^{-1/2} A D^{-1/2}; eigenvalues land in [0, 2].
SymmetricMatrix normalized_laplacian(const SymmetricMatrix& adjacency);

// max |eigenvalue| of the adjacency.
double spectral_radius(const SymmetricMatrix& adjacency);
// Second-smallest Laplacian eigenvalue; > 0 iff the graph is connected.
double algebraic_connectivity(const SymmetricMatrix& laplacian_matrix);

inline constexpr int kWsdBins = 40;
inline constexpr int kWsdPower = 4;
// Spectra are allowed to stick out of [0, 2] by at most this much (fp noise)
// before wsd() rejects them; anything inside the tolerance is clamped.
inline constexpr double kWsdRangeTol = 1e-9;

// Weighted spectral distribution of a normalized-Laplacian spectrum:
// histogram the eigenvalues into 40 equal bins over [0, 2] and sum
// (1 - bin midpoint)^4 * bin mass. Down-weights the trivial eigenvalues
// near 0 and 2 so mid-spectrum structure dominates.
double wsd(const Spectrum& normalized_laplacian_spectrum);

}  // namespace optonet::spectral
