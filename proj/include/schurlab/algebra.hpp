#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace schurlab {

/// Dense integer matrix; used for matrices over Z_2 and Z_4 with entries kept
/// in canonical residues [0, m).
using ZMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
using Z4Matrix = ZMatrix;
using ZRowVector = Eigen::Matrix<int, 1, Eigen::Dynamic>;

/// Element of (Z_m)^n, m in {2, 4}. Coordinates are reduced on construction.
class ZmVector {
 public:
  ZmVector() = default;
  ZmVector(int modulus, ZRowVector coords);
  ZmVector(int modulus, std::initializer_list<int> coords);

  static ZmVector zero(int modulus, int n);
  static ZmVector unit(int modulus, int n, int i);

  int modulus() const { return modulus_; }
  int size() const { return static_cast<int>(coords_.size()); }
  const ZRowVector& coords() const { return coords_; }
  int operator[](int i) const { return coords_(i); }

  bool is_zero() const { return (coords_.array() == 0).all(); }

  friend ZmVector operator+(const ZmVector& a, const ZmVector& b);
  friend ZmVector operator-(const ZmVector& a);
  friend bool operator==(const ZmVector& a, const ZmVector& b);
  friend bool operator<(const ZmVector& a, const ZmVector& b);

  std::string to_string() const;

 private:
  int modulus_ = 2;
  ZRowVector coords_;
};

/// Entrywise canonical residue of `a` modulo `m`.
ZMatrix reduce_mod(const ZMatrix& a, int m);
ZRowVector reduce_mod(const ZRowVector& a, int m);

ZMatrix z4_identity(int n);
ZMatrix z4_mat_mul(const ZMatrix& a, const ZMatrix& b);
ZMatrix z4_pow(const ZMatrix& a, std::uint64_t e);
ZmVector z4_vec_mul(const ZmVector& v, const ZMatrix& a);

/// Multiplicative order of a unit matrix over Z_m (m in {2,4}); nullopt if no
/// power up to `limit` equals the identity.
std::optional<std::uint64_t> matrix_order(const ZMatrix& a, int m, std::uint64_t limit);

/// True iff the reduction mod 2 is invertible over GF(2).
bool gf2_invertible(const ZMatrix& a);
bool is_unit_z4(const ZMatrix& a);

/// Unique x with x * basis_rows = target over Z_4.
/// Throws SingularSystemError when basis_rows is not a unit.
ZRowVector z4_linsolve(const ZMatrix& basis_rows, const ZRowVector& target);

// ---------------------------------------------------------------------------
// GF(2^n) in the polynomial basis 1, z, ..., z^{n-1}. Polynomials over GF(2)
// are bit masks, bit i = coefficient of x^i.

using Gf2Poly = std::uint32_t;

constexpr int kMaxFieldDegree = 16;

int poly_degree(Gf2Poly p);
std::vector<int> poly_coefficients(Gf2Poly p);
Gf2Poly poly_from_coefficients(const std::vector<int>& coeffs);

/// True iff p has degree n, is irreducible, and x generates GF(2)[x]/(p)^*.
bool is_primitive_poly(Gf2Poly p, int n);

/// The built-in table entry: least (as an integer mask) primitive polynomial.
Gf2Poly builtin_primitive_poly(int n);

/// Table entry after applying the SCHURLAB_POLY_TABLE override, formatted as
/// comma separated `degree:mask` items, e.g. "3:0xd,5:0x25".
Gf2Poly primitive_poly(int n);

/// Parses an override string; throws ConfigurationError on malformed or
/// non-primitive entries.
std::vector<std::pair<int, Gf2Poly>> parse_poly_table(const std::string& spec);

class GF2n {
 public:
  using Element = std::uint32_t;

  /// Field built from the (possibly overridden) table entry for degree n.
  explicit GF2n(int n);
  GF2n(int n, Gf2Poly modulus);

  int degree() const { return n_; }
  Gf2Poly modulus() const { return modulus_; }
  std::uint32_t size() const { return 1u << n_; }

  static Element add(Element a, Element b) { return a ^ b; }
  Element mul(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;
  /// The class of x, which generates the multiplicative group.
  Element primitive_element() const { return n_ == 1 ? 1u : 2u; }
  std::uint64_t multiplicative_order(Element a) const;

  /// h: coefficient vector (a_0, ..., a_{n-1}).
  ZRowVector coordinates(Element a) const;
  Element from_coordinates(const ZRowVector& bits) const;

  /// g(a): matrix of y -> y*a acting on coordinate row vectors.
  ZMatrix regular_representation(Element a) const;

 private:
  int n_;
  Gf2Poly modulus_;
};

/// Companion matrix over Z_4 with ones on the superdiagonal and the given
/// last row (c_0, ..., c_{n-1}).
ZMatrix companion_matrix(const ZRowVector& last_row);

struct CompanionLift {
  ZMatrix P;
  std::uint64_t order = 0;
  Gf2Poly primitive_poly = 0;
  /// True when the entrywise lift of the GF(2) companion already had order
  /// 2^n - 1; false when P came from the squared lift.
  bool direct = true;
};

CompanionLift lift_primitive(int n);
CompanionLift lift_primitive(int n, Gf2Poly poly);

/// f(b) = sum_i b_i P^i.
ZMatrix f_map(const ZMatrix& P, const ZmVector& b);

}  // namespace schurlab
