#include "coxart/fibration.hpp"

#include "coxart/errors.hpp"

namespace coxart {

bool z_space_membership(const std::vector<Rational>& point) {
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i] == 0) return false;
    for (std::size_t j = i + 1; j < point.size(); ++j)
      if (point[i] == point[j]) return false;
  }
  return true;
}

FibrationReport fibration_map_eval(const GroupLabel& label,
                                   const std::vector<Rational>& point) {
  if (label.family != Family::D && label.family != Family::F4)
    throw DomainError("fibration map is defined for D_n and F4 only, not " +
                      label.text());
  const int dim = label.family == Family::F4 ? 4 : label.n;
  if (static_cast<int>(point.size()) != dim)
    throw DomainError("point has " + std::to_string(point.size()) +
                      " coordinates, " + label.text() + " needs " +
                      std::to_string(dim));

  FibrationReport r;
  r.label = label;
  r.point = point;

  const Arrangement arr = reflection_arrangement(label);
  for (const Hyperplane& h : arr.hyperplanes)
    if (h.evaluate(point) == 0) r.vanishing_forms.push_back(h.to_text());
  r.in_complement = r.vanishing_forms.empty();

  if (label.family == Family::D) {
    const Rational last2 = point[dim - 1] * point[dim - 1];
    for (int i = 0; i + 1 < dim; ++i)
      r.image.push_back(last2 - point[i] * point[i]);
    r.z_index = dim - 1;
  } else {
    Rational prod = 1;
    for (const Rational& y : point) prod *= y;
    const Rational y4sq = point[3] * point[3];
    for (int i = 0; i < 3; ++i)
      r.image.push_back(prod * (y4sq - point[i] * point[i]));
    r.z_index = 3;
  }
  r.image_in_z = z_space_membership(r.image);
  return r;
}

} // namespace coxart
