#include "numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace photsub::detail {

namespace {

std::pair<Eigen::ArrayXd, Eigen::ArrayXd> compute_gauss_legendre(int n) {
  Eigen::ArrayXd x(n), w(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  return {x, w};
}

}  // namespace

const std::pair<Eigen::ArrayXd, Eigen::ArrayXd>& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, std::pair<Eigen::ArrayXd, Eigen::ArrayXd>> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

}  // namespace photsub::detail
