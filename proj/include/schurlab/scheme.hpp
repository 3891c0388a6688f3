#pragma once

#include "schurlab/group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace schurlab {

/// Partition {S_0, ..., S_d} of an abelian group; the seed of a Schur ring.
/// Class 0 must be the identity singleton.
struct SchurPartition {
  AbelianGroup group;
  std::vector<std::vector<AbelianGroup::Element>> classes;

  int rank() const { return static_cast<int>(classes.size()); }
};

/// p_ij^k stored densely, indexed [i][j][k].
class IntersectionTensor {
 public:
  IntersectionTensor() = default;
  explicit IntersectionTensor(int rank) : rank_(rank), data_(static_cast<std::size_t>(rank * rank * rank), 0) {}

  int rank() const { return rank_; }
  std::int64_t& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
  std::int64_t operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

  friend bool operator==(const IntersectionTensor&, const IntersectionTensor&) = default;

 private:
  std::size_t index(int i, int j, int k) const { return static_cast<std::size_t>((i * rank_ + j) * rank_ + k); }
  int rank_ = 0;
  std::vector<std::int64_t> data_;
};

struct SchurFailure {
  enum class Kind { NotAPartition, IdentityClass, MissingInverse, Closure };
  Kind kind = Kind::NotAPartition;
  std::string message;
  // Closure witness: in S_i * S_j the elements `element` and `other` of the
  // same class have coefficients `count` and `other_count`.
  int i = -1;
  int j = -1;
  std::optional<AbelianGroup::Element> element;
  std::optional<AbelianGroup::Element> other;
  std::int64_t count = 0;
  std::int64_t other_count = 0;
};

std::string to_string(SchurFailure::Kind kind);

struct SchurValidation {
  std::optional<SchurFailure> failure;
  std::vector<int> pairing;
  IntersectionTensor structure_constants;

  bool ok() const { return !failure.has_value(); }
};

/// Checks S_0 = {0}, inverse closure and closure of the class-sum span under
/// multiplication. Never throws on bad input; reports the first witness.
SchurValidation validate_schur(const SchurPartition& p);

/// Association scheme of a Schur ring: points are the group elements, and
/// (x, y) lies in R_k iff x - y lies in S_k.
class AssociationScheme {
 public:
  const SchurPartition& partition() const { return partition_; }
  const AbelianGroup& group() const { return partition_.group; }

  int rank() const { return partition_.rank(); }
  int d() const { return rank() - 1; }
  std::uint32_t num_points() const { return group().order(); }

  int class_of(AbelianGroup::Element x, AbelianGroup::Element y) const {
    return class_of_element_[group().sub(x, y)];
  }
  int class_of_element(AbelianGroup::Element g) const { return class_of_element_[g]; }

  const std::vector<std::int64_t>& valencies() const { return valencies_; }
  const std::vector<int>& pairing() const { return pairing_; }
  const IntersectionTensor& p() const { return p_; }

  bool is_symmetric() const;
  bool is_commutative() const;

 private:
  friend AssociationScheme scheme_from_partition(const SchurPartition& p);
  explicit AssociationScheme(SchurPartition p) : partition_(std::move(p)) {}

  SchurPartition partition_;
  std::vector<int> class_of_element_;
  std::vector<std::int64_t> valencies_;
  std::vector<int> pairing_;
  IntersectionTensor p_;
};

/// Throws SchemeError carrying the validation witness if p is not a Schur
/// partition.
AssociationScheme scheme_from_partition(const SchurPartition& p);

/// p_ij^k from a single representative per class k, via the coefficient of
/// that representative in the group-algebra product S_i * S_j.
IntersectionTensor intersection_numbers(const AssociationScheme& s);

/// Re-counts p_ij^k literally (over all z) for `samples` random pairs (x, y)
/// and throws SchemeError on any disagreement with s.p().
void verify_representatives(const AssociationScheme& s, int samples, std::uint64_t seed);

struct ClosedSubset {
  std::vector<int> class_indices;
  friend bool operator==(const ClosedSubset&, const ClosedSubset&) = default;
};

/// All closed subsets, found by exhaustion over subsets containing 0.
std::vector<ClosedSubset> closed_subsets(const AssociationScheme& s);

}  // namespace schurlab
