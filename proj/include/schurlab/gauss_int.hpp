#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <string>
#include <tuple>

namespace schurlab {

/// Exact Gaussian integer a + b*i. Character values of the fusion schemes of
/// Z_2^n and Z_4^n all live here.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(std::int64_t r) : re(r) {}  // NOLINT(google-explicit-constructor)
  constexpr GaussInt(std::int64_t r, std::int64_t i) : re(r), im(i) {}

  constexpr GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  constexpr GaussInt& operator-=(const GaussInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  constexpr GaussInt& operator*=(const GaussInt& o) {
    const std::int64_t r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }

  friend constexpr GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend constexpr GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend constexpr GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
  friend constexpr GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }

  friend constexpr bool operator==(const GaussInt&, const GaussInt&) = default;
  friend constexpr auto operator<=>(const GaussInt& a, const GaussInt& b) {
    return std::tie(a.re, a.im) <=> std::tie(b.re, b.im);
  }

  constexpr bool is_real() const { return im == 0; }
};

constexpr GaussInt conj(const GaussInt& z) { return {z.re, -z.im}; }

/// i^k for any integer k.
constexpr GaussInt i_pow(std::int64_t k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

/// Renders `a+bi`, dropping the imaginary part when it is zero.
std::string to_string(const GaussInt& z);
std::ostream& operator<<(std::ostream& os, const GaussInt& z);

using GaussMatrix = Eigen::Matrix<GaussInt, Eigen::Dynamic, Eigen::Dynamic>;
using GaussRowVector = Eigen::Matrix<GaussInt, 1, Eigen::Dynamic>;

}  // namespace schurlab

namespace Eigen {

template <>
struct NumTraits<schurlab::GaussInt> : GenericNumTraits<schurlab::GaussInt> {
  using Real = schurlab::GaussInt;
  using NonInteger = schurlab::GaussInt;
  using Nested = schurlab::GaussInt;
  using Literal = schurlab::GaussInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 2,
    AddCost = 2,
    MulCost = 6
  };
  static inline int digits10() { return 18; }
};

}  // namespace Eigen
