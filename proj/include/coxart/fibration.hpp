#ifndef COXART_FIBRATION_HPP
#define COXART_FIBRATION_HPP

#include "coxart/arrangement.hpp"
#include "coxart/label.hpp"
#include "coxart/numeric.hpp"

#include <string>
#include <vector>

namespace coxart {

// True iff all coordinates are nonzero and pairwise distinct
// (membership in Z_n = PB_n(C^*)).
bool z_space_membership(const std::vector<Rational>& point);

struct FibrationReport {
  GroupLabel label;
  std::vector<Rational> point;
  bool in_complement = false;
  std::vector<std::string> vanishing_forms;  // defining forms that are zero
  std::vector<Rational> image;
  int z_index = 0;  // image checked against Z_{z_index}
  bool image_in_z = false;
};

// Evaluates the fibration map of the pure Artin space onto Z_k, exactly:
//   D_n: z_i = y_n^2 - y_i^2 (i < n),             PA_{D_n} -> Z_{n-1}
//   F4:  z_i = y1 y2 y3 y4 (y4^2 - y_i^2) (i<=3), PA_{F4}  -> Z_3
// Reports complement membership of the input, the image vector, and
// Z-membership of the image. Only D_n and F4 carry these maps.
FibrationReport fibration_map_eval(const GroupLabel& label,
                                   const std::vector<Rational>& point);

} // namespace coxart

#endif
