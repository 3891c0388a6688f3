#pragma once

#include "schurlab/gauss_int.hpp"
#include "schurlab/scheme.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schurlab {

/// First eigenmatrix (chi_i(A_j)) with row 0 the trivial character.
struct CharacterTable {
  GaussMatrix entries;
  std::vector<std::int64_t> valencies;
  std::vector<std::int64_t> multiplicities;

  int rank() const { return static_cast<int>(entries.rows()); }
  std::int64_t num_points() const;
};

/// Value at v of the character of (Z_m)^n indexed by u:
/// (-1)^(u.v) for m = 2, i^(u.v) for m = 4.
GaussInt abelian_char_value(const AbelianGroup& g, AbelianGroup::Element u, AbelianGroup::Element v);
GaussInt abelian_char_value(const ZmVector& u, const ZmVector& v);

/// Collapses the restrictions of all group characters to the class sums.
/// Rows: trivial first, then lexicographic on (re, im) sequences.
CharacterTable character_table(const AssociationScheme& s);

struct VerificationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Both orthogonality relations, with denominators cleared so that the
/// comparison is an exact integer identity.
VerificationReport verify_orthogonality(const CharacterTable& t);

/// For every closed subset C and character chi: either C lies in Ker chi or
/// the values of chi on C sum to zero.
VerificationReport verify_kernel_lemma(const AssociationScheme& s, const CharacterTable& t);

/// Ordering of the character rows (row perm[i] is attached to class i, with
/// perm[0] = 0) under which n_i chi_i(A_j) = n_j chi_j(A_i) for all i, j.
std::optional<std::vector<int>> self_dual_check(const CharacterTable& t);

struct XuTemplate {
  enum class Kind { T1, T2, T3 };
  Kind kind;
  std::int64_t parameter;  // lambda for T1, theta for T2 and T3

  friend bool operator==(const XuTemplate&, const XuTemplate&) = default;
};

std::string to_string(const XuTemplate& t);

/// The literal template table; throws ConfigurationError when the parameter
/// is not admissible (3 | lambda for T1, theta odd for T2/T3).
GaussMatrix xu_table(const XuTemplate& t);

/// Matches a rank-4 table against the three templates up to simultaneous
/// reordering of non-trivial rows and columns and conjugation of rows.
std::optional<XuTemplate> template_match(const CharacterTable& t);

}  // namespace schurlab
