#include "schurlab/group.hpp"

#include "schurlab/errors.hpp"

namespace schurlab {

AbelianGroup::AbelianGroup(int modulus, int rank) : modulus_(modulus), rank_(rank) {
  if (modulus != 2 && modulus != 4) throw ConfigurationError("group modulus must be 2 or 4");
  bits_ = modulus == 2 ? 1 : 2;
  if (rank < 1 || rank * bits_ > 24) throw ConfigurationError("group rank out of range");
  order_ = 1u << (rank * bits_);
  all_mask_ = order_ - 1;
  if (modulus == 4) {
    for (int i = 0; i < rank; ++i) {
      low_mask_ |= 1u << (2 * i);
      high_mask_ |= 2u << (2 * i);
    }
    one_mask_ = low_mask_;
  }
}

int AbelianGroup::dot(Element a, Element b) const {
  const std::uint32_t digit = static_cast<std::uint32_t>(modulus_ - 1);
  int acc = 0;
  for (int i = 0; i < rank_; ++i) {
    acc += static_cast<int>((a & digit) * (b & digit));
    a >>= bits_;
    b >>= bits_;
  }
  return acc % modulus_;
}

AbelianGroup::Element AbelianGroup::encode(const ZmVector& v) const {
  if (v.modulus() != modulus_ || v.size() != rank_) {
    throw DimensionError("vector " + v.to_string() + " is not an element of Z_" + std::to_string(modulus_) + "^" +
                         std::to_string(rank_));
  }
  Element e = 0;
  for (int i = 0; i < rank_; ++i) e = (e << bits_) | static_cast<Element>(v[i]);
  return e;
}

ZmVector AbelianGroup::decode(Element e) const {
  ZRowVector c(rank_);
  const std::uint32_t digit = static_cast<std::uint32_t>(modulus_ - 1);
  for (int i = rank_ - 1; i >= 0; --i) {
    c(i) = static_cast<int>(e & digit);
    e >>= bits_;
  }
  return {modulus_, c};
}

}  // namespace schurlab
