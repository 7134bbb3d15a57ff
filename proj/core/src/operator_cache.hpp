#pragma once

#include <map>
#include <memory>
#include <shared_mutex>

#include <Eigen/Dense>

namespace qm::detail {

/// Factorization of r -> Laplacian_Q(Q * r) on V(degree - 2).
struct SplitSystem {
  Eigen::MatrixXcd laplacian;  // V(degree) -> V(degree - 2)
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu;
  double condition = 1.0;
};

struct OperatorCache {
  std::shared_mutex mutex;
  std::map<int, std::shared_ptr<const SplitSystem>> split;
};

}  // namespace qm::detail
