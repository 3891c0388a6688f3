#include "schurlab/designs.hpp"

#include "schurlab/errors.hpp"

#include <algorithm>

namespace schurlab {

IncidenceMatrix relation_incidence(const AssociationScheme& s, const std::vector<int>& class_set) {
  if (class_set.empty()) throw std::invalid_argument("relation_incidence: empty class set");
  std::vector<bool> in(static_cast<std::size_t>(s.rank()), false);
  for (int c : class_set) {
    if (c < 0 || c >= s.rank()) throw std::out_of_range("relation_incidence: class index out of range");
    in[static_cast<std::size_t>(c)] = true;
  }
  const auto n = static_cast<Eigen::Index>(s.num_points());
  IncidenceMatrix N(n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    for (Eigen::Index y = 0; y < n; ++y) {
      N(x, y) = in[static_cast<std::size_t>(s.class_of(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)))] ? 1 : 0;
    }
  }
  return N;
}

std::optional<std::int64_t> t_design_check(const IncidenceMatrix& N, int t) {
  if (t != 1 && t != 2) throw std::invalid_argument("t_design_check: t must be 1 or 2");
  if (N.rows() == 0) return std::nullopt;
  if (t == 1) {
    const auto sums = N.rowwise().sum().eval();
    if ((sums.array() != sums(0)).any()) return std::nullopt;
    return sums(0);
  }
  if (N.rows() < 2) return std::nullopt;
  const IncidenceMatrix co = N * N.transpose();
  const std::int64_t lambda = co(0, 1);
  for (Eigen::Index x = 0; x < co.rows(); ++x) {
    for (Eigen::Index y = 0; y < co.cols(); ++y) {
      if (x != y && co(x, y) != lambda) return std::nullopt;
    }
  }
  return lambda;
}

std::optional<PgdCertificate> pgd_check(const IncidenceMatrix& N) {
  const auto k = t_design_check(N, 1);
  if (!k || *k == 0) return std::nullopt;

  const IncidenceMatrix M = N * (N.transpose() * N);
  std::optional<std::int64_t> alpha;
  std::optional<std::int64_t> beta;
  for (Eigen::Index x = 0; x < M.rows(); ++x) {
    for (Eigen::Index b = 0; b < M.cols(); ++b) {
      auto& slot = N(x, b) != 0 ? beta : alpha;
      if (!slot) slot = M(x, b);
      else if (*slot != M(x, b)) return std::nullopt;
    }
  }
  if (!beta) return std::nullopt;
  return PgdCertificate{alpha, *beta, *k};
}

std::vector<PgdSuiteEntry> pgd_suite(const AssociationScheme& s) {
  if (s.rank() != 4) throw SchemeError("pgd_suite requires a rank-4 scheme");
  std::vector<PgdSuiteEntry> out = {
      {"R1", {1}, std::nullopt},
      {"R2", {2}, std::nullopt},
      {"R0uR3", {0, 3}, std::nullopt},
  };
  for (auto& e : out) e.certificate = pgd_check(relation_incidence(s, e.class_set));
  return out;
}

}  // namespace schurlab
