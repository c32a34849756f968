#include "photsub/filtered_basis.hpp"

#include <vector>

#include "photsub/errors.hpp"

namespace photsub {

namespace {

constexpr double drop_threshold = 1e-10;

// Modified Gram-Schmidt with one re-orthogonalization pass; rows of
// `candidates` are orthogonalized against `against` (may be empty) and
// against the surviving earlier rows. Rank-deficient candidates are
// dropped. Returns rows scaled to unit L2 norm under `step`.
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& candidates,
                               const Eigen::MatrixXd& against, double step) {
  const int np = static_cast<int>(candidates.cols());
  std::vector<Eigen::VectorXd> kept;
  for (int i = 0; i < candidates.rows(); ++i) {
    Eigen::VectorXd v = candidates.row(i).transpose();
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j < against.rows(); ++j) {
        const double proj = against.row(j).dot(v) * step;
        v -= proj * against.row(j).transpose();
      }
      for (const auto& u : kept) {
        const double proj = u.dot(v) * step;
        v -= proj * u;
      }
    }
    const double norm = std::sqrt(v.squaredNorm() * step);
    if (norm < drop_threshold) continue;
    kept.push_back(v / norm);
  }
  Eigen::MatrixXd out(static_cast<int>(kept.size()), np);
  for (int i = 0; i < out.rows(); ++i) out.row(i) = kept[i].transpose();
  return out;
}

}  // namespace

Eigen::MatrixXd build_parallel(const SupermodeBasis& basis, const FilterProfile& filter,
                               int m) {
  if (m < 1 || m > basis.n_modes)
    throw argument_error("parallel mode count must be in [1, n_modes]");
  if (filter.kind == FilterKind::DeltaLimit)
    throw unsupported_error("delta-limit filters have no sampled parallel basis");
  if (filter.kind == FilterKind::Identity)
    return basis.samples.topRows(m);

  const auto& grid = basis.grid;
  Eigen::MatrixXd candidates(m, grid.n_points());
  for (int i = 0; i < grid.n_points(); ++i) {
    const double t = filter.transmission(grid.samples()[i]);
    for (int k = 0; k < m; ++k) candidates(k, i) = t * basis.samples(k, i);
  }
  if (candidates.cwiseAbs().maxCoeff() <= 0.0)
    throw domain_error("filter transmits nothing on this grid");
  return orthonormalize(candidates, Eigen::MatrixXd(0, grid.n_points()), grid.step());
}

Eigen::MatrixXd build_perp(const SupermodeBasis& basis, const FilterProfile& filter,
                           const Eigen::MatrixXd& parallel, int m_perp) {
  const auto& grid = basis.grid;
  if (filter.kind != FilterKind::Rectangular)
    return Eigen::MatrixXd(0, grid.n_points());  // t > 0 everywhere
  if (m_perp < 1) return Eigen::MatrixXd(0, grid.n_points());

  const int m = std::min(m_perp, basis.n_modes);
  Eigen::MatrixXd candidates(m, grid.n_points());
  for (int i = 0; i < grid.n_points(); ++i) {
    const double outside = filter.blocks(grid.samples()[i]) ? 1.0 : 0.0;
    for (int k = 0; k < m; ++k) candidates(k, i) = outside * basis.samples(k, i);
  }
  return orthonormalize(candidates, parallel, grid.step());
}

void change_of_basis(const SupermodeBasis& basis, const Eigen::MatrixXd& parallel,
                     const Eigen::MatrixXd& perp, Eigen::MatrixXd& p, Eigen::MatrixXd& q) {
  const double step = basis.grid.step();
  p = basis.samples * parallel.transpose() * step;
  q = basis.samples * perp.transpose() * step;
}

void t_r_matrices(const Eigen::MatrixXd& parallel, const FilterProfile& filter,
                  const SpectralGrid& grid, Eigen::MatrixXd& t_matrix,
                  Eigen::MatrixXd& r_matrix) {
  const int np = grid.n_points();
  if (parallel.cols() != np) throw argument_error("parallel modes do not match grid");
  Eigen::ArrayXd t(np), r(np);
  for (int i = 0; i < np; ++i) {
    t[i] = filter.transmission(grid.samples()[i]);
    r[i] = filter.reflection(grid.samples()[i]);
  }
  Eigen::MatrixXd wt = parallel;
  wt.array().rowwise() *= (t * grid.step()).transpose();
  Eigen::MatrixXd wr = parallel;
  wr.array().rowwise() *= (r * grid.step()).transpose();
  // T_{lk} = <psi_par_k | t | psi_par_l>: rows index l, columns k.
  t_matrix = wt * parallel.transpose();
  r_matrix = wr * parallel.transpose();
}

FilteredBasis build_filtered_basis(const SupermodeBasis& basis, const FilterProfile& filter,
                                   int m, int m_perp) {
  FilteredBasis fb;
  fb.parallel = build_parallel(basis, filter, m);
  fb.perp = build_perp(basis, filter, fb.parallel, m_perp);
  change_of_basis(basis, fb.parallel, fb.perp, fb.p, fb.q);
  t_r_matrices(fb.parallel, filter, basis.grid, fb.t_matrix, fb.r_matrix);
  return fb;
}

}  // namespace photsub
