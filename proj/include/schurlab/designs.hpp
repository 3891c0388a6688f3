#pragma once

#include "schurlab/scheme.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace schurlab {

/// 0/1 point-by-block incidence matrix N of a block design (P, B, I).
using IncidenceMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Constants of a partial geometric design: for a point x and block B the
/// number of flags (y, C) with x in C and y in both C and B equals beta when
/// x is in B and alpha otherwise. alpha is empty when N has full support.
struct PgdCertificate {
  std::optional<std::int64_t> alpha;
  std::int64_t beta = 0;
  std::int64_t replication = 0;

  friend bool operator==(const PgdCertificate&, const PgdCertificate&) = default;
};

/// N_xy = 1 iff the class of (x, y) is in class_set.
IncidenceMatrix relation_incidence(const AssociationScheme& s, const std::vector<int>& class_set);

/// lambda if N is a t-design (t in {1, 2}), otherwise nullopt.
std::optional<std::int64_t> t_design_check(const IncidenceMatrix& N, int t);

/// Tests N N^T N = alpha (J - N) + beta N on a 1-design.
std::optional<PgdCertificate> pgd_check(const IncidenceMatrix& N);

struct PgdSuiteEntry {
  std::string label;
  std::vector<int> class_set;
  std::optional<PgdCertificate> certificate;
};

/// pgd_check on R_1, R_2 and R_0 u R_3 of a rank-4 scheme.
std::vector<PgdSuiteEntry> pgd_suite(const AssociationScheme& s);

}  // namespace schurlab
