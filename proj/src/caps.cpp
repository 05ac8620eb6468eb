#include "medianlab/caps.hpp"

#include <cstdlib>
#include <string>

namespace medianlab {

Caps default_caps() {
  Caps caps;
  if (const char* v = std::getenv("MEDIAN_LAB_CAP")) {
    try {
      unsigned long long n = std::stoull(v);
      if (n > 0) caps.ball_cap = static_cast<std::size_t>(n);
    } catch (...) {
      // unparseable value: keep defaults
    }
  }
  return caps;
}

}  // namespace medianlab
