#pragma once

#include "schurlab/algebra.hpp"

#include <cstdint>

namespace schurlab {

/// The group (Z_m)^n with m in {2, 4}. Elements are indexed 0..m^n - 1 in
/// lexicographic order of their coordinate vectors (coordinate 0 most
/// significant), packed log2(m) bits per coordinate.
class AbelianGroup {
 public:
  using Element = std::uint32_t;

  AbelianGroup(int modulus, int rank);

  int modulus() const { return modulus_; }
  int rank() const { return rank_; }
  std::uint32_t order() const { return order_; }

  Element identity() const { return 0; }

  Element add(Element a, Element b) const {
    if (modulus_ == 2) return a ^ b;
    // Lane-wise addition of 2-bit digits mod 4.
    return ((a & low_mask_) + (b & low_mask_)) ^ ((a ^ b) & high_mask_);
  }
  Element neg(Element a) const {
    if (modulus_ == 2) return a;
    return add(~a & all_mask_, one_mask_);
  }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  /// Sum of coordinate products mod m (the pairing defining the dual group).
  int dot(Element a, Element b) const;

  Element encode(const ZmVector& v) const;
  ZmVector decode(Element e) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  int modulus_;
  int rank_;
  int bits_;
  std::uint32_t order_;
  std::uint32_t all_mask_;
  std::uint32_t low_mask_ = 0;   // lower bit of each 2-bit lane
  std::uint32_t high_mask_ = 0;  // upper bit of each 2-bit lane
  std::uint32_t one_mask_ = 0;   // digit 1 in every lane
};

}  // namespace schurlab
