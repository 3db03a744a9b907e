#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "hwcl/oracles.hpp"
#include "hwcl/weights.hpp"

namespace hwcl {

// Size caps for dense tensor-power work. Everything here computes finite
// compressions; the caps fail fast instead of silently exploding.
struct TensorCaps {
    long long max_dim = 4096; // ambient tensor dimension n^m
    long long max_boxes = 6;  // |lambda| for tableau group enumeration
};

// Permutation of {0,...,m-1} given by its image table.
using Permutation = std::vector<int>;

Permutation inverse_permutation(const Permutation& sigma);
int permutation_sign(const Permutation& sigma);

// Standard tableau with column-major filling (1 in the top-left box, each
// next label directly below the previous, continuing at the top of the
// next column), together with the row and column permutation groups.
struct TableauData {
    Partition shape;
    std::vector<std::vector<int>> columns; // labels per column, 1-based
    std::vector<std::vector<int>> rows;    // labels per row, 1-based
    std::vector<Permutation> row_group;    // R_lambda, |R| = f_row
    std::vector<Permutation> col_group;    // C_lambda, |C| = f_col
    std::vector<int> col_signs;            // sgn(c), aligned with col_group
    long long f_col = 1;                   // prod over columns of height!
    long long f_row = 1;                   // prod over rows of length!
};

TableauData build_tableau(const Partition& lam, const TensorCaps& caps = {});

// rho(sigma)(v_1 x ... x v_m) = v_{sigma^{-1}(1)} x ... x v_{sigma^{-1}(m)}
// as a dense matrix on (C^n)^{x m} (first factor most significant).
Eigen::MatrixXcd perm_action(const Permutation& sigma, int n, const TensorCaps& caps = {});

// P_col and P_row are orthogonal projections;
// P_lambda = f_col * f_row * P_col * P_row is the Young symmetrizer
// (idempotent up to scale, not an orthogonal projection in general).
struct YoungProjectors {
    Eigen::MatrixXcd p_lambda;
    Eigen::MatrixXcd p_col;
    Eigen::MatrixXcd p_row;
};

YoungProjectors young_projector(const Partition& lam, int n, const TensorCaps& caps = {});

// Apply g^{x m} to a dense vector without forming the big matrix.
Eigen::VectorXcd apply_tensor_power(const Eigen::MatrixXcd& g, const Eigen::VectorXcd& x, int m);

// Finite-rank model of the irreducible representation labeled by the
// sorted length-n extension of `weight`:
//   - nonnegative weights: compression of g^{x |lambda|} onto
//     image(P_lambda), columns of `isometry` orthonormal;
//   - nonpositive weights: entrywise conjugate of the model for -weight;
//   - mixed signs: determinant twist det(g)^{det_power} times the model
//     of the shifted partition `carrier`.
// dim always equals weyl_dim of the sorted length-n extension.
struct RepRealization {
    FiniteWeight weight;
    int ambient = 1;
    long long dim = 1;
    Partition carrier;
    long long det_power = 0;
    bool conjugated = false;
    Eigen::MatrixXcd isometry; // n^|carrier| x dim, orthonormal columns
};

RepRealization build_realization(const FiniteWeight& w, int n, const TensorCaps& caps = {});
Eigen::MatrixXcd realize(const RepRealization& rep, const Eigen::MatrixXcd& g);
Eigen::MatrixXcd realize(const FiniteWeight& w, int n, const Eigen::MatrixXcd& g,
                         const TensorCaps& caps = {});

// trace of realize(w, n, diag(x)); agrees with the Schur oracle for the
// sorted length-n extension of w.
std::complex<double> character(const FiniteWeight& w, int n, const EvalPoint& x,
                               const TensorCaps& caps = {});

// Sparse vector in (C^N)^{x m}; entries sorted by index.
struct SparseVec {
    long long dim = 1;
    int factors = 0;
    int ambient = 1;
    std::vector<std::pair<long long, std::complex<double>>> entries;

    double norm() const;
    Eigen::VectorXcd dense() const;
};

// <a, b>, linear in the first argument
std::complex<double> dot(const SparseVec& a, const SparseVec& b);

// e_k^(lambda) = sqrt(f_col) * tensor over columns of the wedge of
// e_{k+1}, ..., e_{k+height}; a unit vector in image(P_lambda).
// Requires k >= 1 and k + lambda'_1 <= ambient_n.
SparseVec basis_vector(int k, const Partition& lam, int ambient_n);

} // namespace hwcl
