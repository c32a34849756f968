#ifndef PHOTSUB_FILTERED_BASIS_HPP
#define PHOTSUB_FILTERED_BASIS_HPP

#include <Eigen/Core>

#include "photsub/filters.hpp"
#include "photsub/supermodes.hpp"

namespace photsub {

// Filter-adapted orthonormal sets: {psi_par} spans {t psi_k}, {psi_perp}
// lives strictly where t = 0. Verification machinery for the basis-change
// identities; the heralded-state pipeline itself only needs gamma.
struct FilteredBasis {
  Eigen::MatrixXd parallel;  // M  x n_points
  Eigen::MatrixXd perp;      // M' x n_points (empty unless t vanishes exactly)
  Eigen::MatrixXd p;         // N x M,  p_kn = <psi_k, psi_par_n>
  Eigen::MatrixXd q;         // N x M', q_kn = <psi_k, psi_perp_n>
  Eigen::MatrixXd t_matrix;  // M x M, T_{lk} = <psi_par_k | t | psi_par_l>
  Eigen::MatrixXd r_matrix;  // M x M, same with r
};

// Modified Gram-Schmidt with one re-orthogonalization pass on {t psi_k},
// k < m; candidates whose residual norm drops below 1e-10 are dropped.
// Identity filter returns the supermodes themselves.
Eigen::MatrixXd build_parallel(const SupermodeBasis& basis, const FilterProfile& filter, int m);

// Orthonormal set supported outside the filter passband, built from
// {(1 - 1_band) psi_k} orthogonalized against `parallel` and each other.
// Empty for filters with strictly positive transmission.
Eigen::MatrixXd build_perp(const SupermodeBasis& basis, const FilterProfile& filter,
                           const Eigen::MatrixXd& parallel, int m_perp);

// Quadrature inner products of the supermodes with both sets.
void change_of_basis(const SupermodeBasis& basis, const Eigen::MatrixXd& parallel,
                     const Eigen::MatrixXd& perp, Eigen::MatrixXd& p, Eigen::MatrixXd& q);

void t_r_matrices(const Eigen::MatrixXd& parallel, const FilterProfile& filter,
                  const SpectralGrid& grid, Eigen::MatrixXd& t_matrix,
                  Eigen::MatrixXd& r_matrix);

FilteredBasis build_filtered_basis(const SupermodeBasis& basis,
                                   const FilterProfile& filter, int m, int m_perp);

}  // namespace photsub

#endif
