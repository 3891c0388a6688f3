#include "schurlab/gauss_int.hpp"

#include <sstream>

namespace schurlab {

std::string to_string(const GaussInt& z) {
  if (z.im == 0) return std::to_string(z.re);
  std::ostringstream os;
  if (z.re != 0) os << z.re << (z.im > 0 ? "+" : "-");
  else if (z.im < 0) os << '-';
  const std::int64_t mag = z.im < 0 ? -z.im : z.im;
  if (mag != 1) os << mag;
  os << 'i';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussInt& z) { return os << to_string(z); }

}  // namespace schurlab
