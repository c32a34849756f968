#ifndef PHOTSUB_SRC_NUMERICS_HPP
#define PHOTSUB_SRC_NUMERICS_HPP

#include <Eigen/Core>
#include <utility>

namespace photsub::detail {

// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
const std::pair<Eigen::ArrayXd, Eigen::ArrayXd>& gauss_legendre(int n);

}  // namespace photsub::detail

#endif
