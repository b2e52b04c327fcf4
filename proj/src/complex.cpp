#include "dcn/complex.hpp"

#include <ostream>

namespace dcn {

std::ostream& operator<<(std::ostream& os, Complex z) {
  os << z.re() << (z.im() < 0 ? " - " : " + ") << std::abs(z.im()) << "i";
  return os;
}

}  // namespace dcn
