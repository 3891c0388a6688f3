#include "schurlab/algebra.hpp"

#include "schurlab/errors.hpp"

#include <array>
#include <cstdlib>
#include <sstream>

namespace schurlab {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

void require_modulus(int m) {
  if (m != 2 && m != 4) throw ConfigurationError("modulus must be 2 or 4, got " + std::to_string(m));
}

void require_square(const ZMatrix& a, const char* what) {
  if (a.rows() != a.cols()) throw DimensionError(std::string(what) + ": matrix is not square");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Gf2Poly mulmod_poly(Gf2Poly a, Gf2Poly b, Gf2Poly p, int n) {
  Gf2Poly r = 0;
  while (b != 0) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> n) & 1u) a ^= p;
  }
  return r;
}

Gf2Poly powmod_poly(Gf2Poly base, std::uint64_t e, Gf2Poly p, int n) {
  Gf2Poly r = 1;
  while (e != 0) {
    if (e & 1u) r = mulmod_poly(r, base, p, n);
    base = mulmod_poly(base, base, p, n);
    e >>= 1;
  }
  return r;
}

// Least primitive polynomial of each degree 1..16, as integer masks.
constexpr std::array<Gf2Poly, kMaxFieldDegree + 1> kPrimitiveTable = {
    0x0,   0x3,   0x7,   0xb,    0x13,   0x25,   0x43,   0x83,   0x11d,
    0x211, 0x409, 0x805, 0x1053, 0x201b, 0x402b, 0x8003, 0x1002d,
};

}  // namespace

// ---------------------------------------------------------------------------
// ZmVector

ZmVector::ZmVector(int modulus, ZRowVector coords) : modulus_(modulus), coords_(std::move(coords)) {
  require_modulus(modulus);
  if (coords_.size() == 0) throw DimensionError("ZmVector must have positive length");
  coords_ = reduce_mod(coords_, modulus_);
}

ZmVector::ZmVector(int modulus, std::initializer_list<int> coords)
    : ZmVector(modulus, [&] {
        ZRowVector v(static_cast<Eigen::Index>(coords.size()));
        Eigen::Index i = 0;
        for (int c : coords) v(i++) = c;
        return v;
      }()) {}

ZmVector ZmVector::zero(int modulus, int n) { return {modulus, ZRowVector::Zero(n)}; }

ZmVector ZmVector::unit(int modulus, int n, int i) {
  ZRowVector v = ZRowVector::Zero(n);
  v(i) = 1;
  return {modulus, v};
}

ZmVector operator+(const ZmVector& a, const ZmVector& b) {
  if (a.modulus_ != b.modulus_ || a.size() != b.size()) throw DimensionError("ZmVector group mismatch");
  return {a.modulus_, a.coords_ + b.coords_};
}

ZmVector operator-(const ZmVector& a) { return {a.modulus_, -a.coords_}; }

bool operator==(const ZmVector& a, const ZmVector& b) {
  return a.modulus_ == b.modulus_ && a.coords_.size() == b.coords_.size() && a.coords_ == b.coords_;
}

bool operator<(const ZmVector& a, const ZmVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

std::string ZmVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << coords_(i);
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Matrices over Z_2 / Z_4

ZMatrix reduce_mod(const ZMatrix& a, int m) {
  return a.unaryExpr([m](int x) { return mod(x, m); });
}

ZRowVector reduce_mod(const ZRowVector& a, int m) {
  return a.unaryExpr([m](int x) { return mod(x, m); });
}

ZMatrix z4_identity(int n) { return ZMatrix::Identity(n, n); }

ZMatrix z4_mat_mul(const ZMatrix& a, const ZMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("z4_mat_mul: dimension mismatch");
  return reduce_mod(ZMatrix(a * b), 4);
}

ZMatrix z4_pow(const ZMatrix& a, std::uint64_t e) {
  require_square(a, "z4_pow");
  ZMatrix result = z4_identity(static_cast<int>(a.rows()));
  ZMatrix base = reduce_mod(a, 4);
  while (e != 0) {
    if (e & 1u) result = z4_mat_mul(result, base);
    base = z4_mat_mul(base, base);
    e >>= 1;
  }
  return result;
}

ZmVector z4_vec_mul(const ZmVector& v, const ZMatrix& a) {
  if (v.size() != a.rows()) throw DimensionError("z4_vec_mul: dimension mismatch");
  return {v.modulus(), ZRowVector(v.coords() * a)};
}

std::optional<std::uint64_t> matrix_order(const ZMatrix& a, int m, std::uint64_t limit) {
  require_square(a, "matrix_order");
  require_modulus(m);
  const ZMatrix id = z4_identity(static_cast<int>(a.rows()));
  const ZMatrix base = reduce_mod(a, m);
  ZMatrix power = base;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (power == id) return k;
    power = reduce_mod(ZMatrix(power * base), m);
  }
  return std::nullopt;
}

bool gf2_invertible(const ZMatrix& a) {
  require_square(a, "gf2_invertible");
  ZMatrix m = reduce_mod(a, 2);
  const Eigen::Index n = m.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return false;
    m.row(c).swap(m.row(pivot));
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r != c && m(r, c) != 0) m.row(r) = (m.row(r) + m.row(c)).unaryExpr([](int x) { return x & 1; });
    }
  }
  return true;
}

bool is_unit_z4(const ZMatrix& a) { return gf2_invertible(a); }

ZRowVector z4_linsolve(const ZMatrix& basis_rows, const ZRowVector& target) {
  require_square(basis_rows, "z4_linsolve");
  const Eigen::Index n = basis_rows.rows();
  if (target.size() != n) throw DimensionError("z4_linsolve: target length mismatch");

  // x * B = t  <=>  B^T x^T = t^T; eliminate on the augmented system.
  ZMatrix aug(n, n + 1);
  aug.leftCols(n) = reduce_mod(ZMatrix(basis_rows.transpose()), 4);
  aug.col(n) = reduce_mod(target, 4).transpose();

  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = c;
    while (pivot < n && (aug(pivot, c) & 1) == 0) ++pivot;
    if (pivot == n) throw SingularSystemError("z4_linsolve: coefficient matrix is not a unit mod 2");
    aug.row(c).swap(aug.row(pivot));
    // Units of Z_4 are 1 and 3, each its own inverse.
    aug.row(c) = reduce_mod(ZMatrix(aug.row(c) * aug(c, c)), 4);
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r != c && aug(r, c) != 0) aug.row(r) = reduce_mod(ZMatrix(aug.row(r) - aug(r, c) * aug.row(c)), 4);
    }
  }
  return aug.col(n).transpose();
}

// ---------------------------------------------------------------------------
// GF(2)[x] and GF(2^n)

int poly_degree(Gf2Poly p) {
  int d = -1;
  while (p != 0) {
    ++d;
    p >>= 1;
  }
  return d;
}

std::vector<int> poly_coefficients(Gf2Poly p) {
  std::vector<int> out;
  const int d = poly_degree(p);
  for (int i = 0; i <= d; ++i) out.push_back(static_cast<int>((p >> i) & 1u));
  return out;
}

Gf2Poly poly_from_coefficients(const std::vector<int>& coeffs) {
  if (coeffs.size() > 32) throw ConfigurationError("polynomial degree too large");
  Gf2Poly p = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0 && coeffs[i] != 1) throw ConfigurationError("polynomial coefficients must be 0 or 1");
    p |= static_cast<Gf2Poly>(coeffs[i]) << i;
  }
  return p;
}

bool is_primitive_poly(Gf2Poly p, int n) {
  if (n < 1 || n > kMaxFieldDegree || poly_degree(p) != n || (p & 1u) == 0) return false;
  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  const Gf2Poly x = n == 1 ? 1u : 2u;
  if (powmod_poly(x, order, p, n) != 1) return false;
  for (std::uint64_t q : prime_factors(order)) {
    if (powmod_poly(x, order / q, p, n) == 1) return false;
  }
  return true;
}

Gf2Poly builtin_primitive_poly(int n) {
  if (n < 1 || n > kMaxFieldDegree) {
    throw ConfigurationError("no primitive polynomial for degree " + std::to_string(n) + " (supported: 1.." +
                             std::to_string(kMaxFieldDegree) + ")");
  }
  return kPrimitiveTable[static_cast<std::size_t>(n)];
}

std::vector<std::pair<int, Gf2Poly>> parse_poly_table(const std::string& spec) {
  std::vector<std::pair<int, Gf2Poly>> out;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ConfigurationError("poly table entry '" + item + "' lacks ':'");
    int n = 0;
    unsigned long mask = 0;
    try {
      n = std::stoi(item.substr(0, colon));
      mask = std::stoul(item.substr(colon + 1), nullptr, 0);
    } catch (const std::exception&) {
      throw ConfigurationError("malformed poly table entry '" + item + "'");
    }
    const auto p = static_cast<Gf2Poly>(mask);
    if (!is_primitive_poly(p, n)) {
      throw ConfigurationError("poly table entry '" + item + "' is not a primitive polynomial of degree " +
                               std::to_string(n));
    }
    out.emplace_back(n, p);
  }
  return out;
}

Gf2Poly primitive_poly(int n) {
  Gf2Poly p = builtin_primitive_poly(n);
  if (const char* env = std::getenv("SCHURLAB_POLY_TABLE"); env != nullptr) {
    for (const auto& [deg, mask] : parse_poly_table(env)) {
      if (deg == n) p = mask;
    }
  }
  return p;
}

GF2n::GF2n(int n) : GF2n(n, primitive_poly(n)) {}

GF2n::GF2n(int n, Gf2Poly modulus) : n_(n), modulus_(modulus) {
  if (!is_primitive_poly(modulus, n)) {
    throw ConfigurationError("modulus is not a primitive polynomial of degree " + std::to_string(n));
  }
}

GF2n::Element GF2n::mul(Element a, Element b) const { return mulmod_poly(a, b, modulus_, n_); }

GF2n::Element GF2n::pow(Element a, std::uint64_t e) const { return powmod_poly(a, e, modulus_, n_); }

std::uint64_t GF2n::multiplicative_order(Element a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint64_t k = 1;
  for (Element x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

ZRowVector GF2n::coordinates(Element a) const {
  ZRowVector v(n_);
  for (int i = 0; i < n_; ++i) v(i) = static_cast<int>((a >> i) & 1u);
  return v;
}

GF2n::Element GF2n::from_coordinates(const ZRowVector& bits) const {
  if (bits.size() != n_) throw DimensionError("coordinate length does not match field degree");
  Element a = 0;
  for (int i = 0; i < n_; ++i) a |= static_cast<Element>(mod(bits(i), 2)) << i;
  return a;
}

ZMatrix GF2n::regular_representation(Element a) const {
  ZMatrix g(n_, n_);
  Element basis = 1;
  for (int i = 0; i < n_; ++i) {
    g.row(i) = coordinates(mul(basis, a));
    basis = mul(basis, n_ == 1 ? 1u : 2u);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Companion lift

ZMatrix companion_matrix(const ZRowVector& last_row) {
  const auto n = last_row.size();
  ZMatrix c = ZMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) c(i, i + 1) = 1;
  c.row(n - 1) = reduce_mod(last_row, 4);
  return c;
}

CompanionLift lift_primitive(int n) { return lift_primitive(n, primitive_poly(n)); }

CompanionLift lift_primitive(int n, Gf2Poly poly) {
  const GF2n field(n, poly);
  const std::uint64_t target = (std::uint64_t{1} << n) - 1;

  // Entrywise {0,1} lift of the companion matrix of poly.
  ZRowVector low(n);
  for (int i = 0; i < n; ++i) low(i) = static_cast<int>((poly >> i) & 1u);
  const ZMatrix Q = companion_matrix(low);

  CompanionLift lift;
  lift.primitive_poly = poly;
  lift.order = target;
  if (z4_pow(Q, target) == z4_identity(n)) {
    lift.P = Q;
    lift.direct = true;
    return lift;
  }

  // Q has order 2(2^n - 1); Q^2 has order 2^n - 1 and reduces to the
  // regular representation of a Galois conjugate of the root, which has the
  // same minimal polynomial. Rewrite Q^2 in companion form along the cyclic
  // vector e_0.
  const ZMatrix Q2 = z4_mat_mul(Q, Q);
  ZMatrix basis(n, n);
  ZRowVector v = ZRowVector::Zero(n);
  v(0) = 1;
  for (int i = 0; i < n; ++i) {
    basis.row(i) = v;
    v = reduce_mod(ZRowVector(v * Q2), 4);
  }
  const ZRowVector last = z4_linsolve(basis, v);
  lift.P = companion_matrix(last);
  lift.direct = false;

  if (z4_pow(lift.P, target) != z4_identity(n) || reduce_mod(lift.P, 2) != field.regular_representation(field.primitive_element())) {
    throw ConstructionError("lift_primitive: lifted companion matrix failed its order check");
  }
  return lift;
}

ZMatrix f_map(const ZMatrix& P, const ZmVector& b) {
  const auto n = P.rows();
  if (b.size() != n) throw DimensionError("f_map: vector length mismatch");
  ZMatrix acc = ZMatrix::Zero(n, n);
  ZMatrix power = z4_identity(static_cast<int>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    acc += b[static_cast<int>(i)] * power;
    power = z4_mat_mul(power, P);
  }
  return reduce_mod(acc, 4);
}

}  // namespace schurlab
