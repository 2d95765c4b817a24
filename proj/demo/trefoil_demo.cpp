// Walks the surgeries on the left-handed trefoil along the line n = 1 and
// prints what each manifold is, then the orbifold angles inside the band.

#include <iostream>

#include "sfc/surgery.hpp"

int main() {
  using namespace sfc;
  const TorusKnot trefoil(3, 2, Handedness::Left);
  const XLimits lim = x_limits(trefoil);
  std::cout << trefoil.to_string() << ": spherical for " << lim.upper << " < x < " << lim.lower << "\n\n";

  for (Integer m = 1; m <= 9; ++m) {
    const SurgerySpec spec = surgery_of_line(trefoil, {m, 1});
    const SeifertSignature sig = surgery_signature(spec);
    std::cout << "  " << spec.slope() << "  " << normalize(sig) << "  e=" << euler_number(sig) << "  "
              << classify_surgery_cone(spec, PiRational::full_turn()) << "  " << to_string(identify_family(sig))
              << "\n";
  }

  std::cout << "\norbifold angles on the core:";
  for (const auto& oa : spherical_orbifold_angles(trefoil)) std::cout << " " << oa.angle;
  std::cout << "\n";
}
