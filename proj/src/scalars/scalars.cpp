#include "g2/scalars/scalars.hpp"

namespace g2 {

bool coefficients_in_Z_half(const QPoly& f) {
  for (const auto& [m, c] : f.terms()) {
    if (!in_z_half(c)) return false;
  }
  return true;
}

}  // namespace g2
