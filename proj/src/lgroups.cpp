#include "coxart/lgroups.hpp"

#include "coxart/arrangement.hpp"
#include "coxart/errors.hpp"
#include "coxart/finite_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxart {

AbelianGroup AbelianGroup::cyclic(long long order) {
  if (order < 2) throw DomainError("cyclic torsion order must be >= 2");
  return {0, {order}};
}

AbelianGroup AbelianGroup::canonical() const {
  AbelianGroup g = *this;
  std::sort(g.torsion.begin(), g.torsion.end());
  return g;
}

std::string AbelianGroup::to_text() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank == 1)
    parts.push_back("Z");
  else if (free_rank > 1)
    parts.push_back("Z^" + std::to_string(free_rank));
  std::size_t i = 0;
  const AbelianGroup c = canonical();
  while (i < c.torsion.size()) {
    std::size_t j = i;
    while (j < c.torsion.size() && c.torsion[j] == c.torsion[i]) ++j;
    const std::string factor = "Z/" + std::to_string(c.torsion[i]);
    if (j - i == 1)
      parts.push_back(factor);
    else
      parts.push_back("(" + factor + ")^" + std::to_string(j - i));
    i = j;
  }
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += " (+) ";
    out += parts[k];
  }
  return out;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  AbelianGroup g;
  g.free_rank = a.free_rank + b.free_rank;
  g.torsion = a.torsion;
  g.torsion.insert(g.torsion.end(), b.torsion.begin(), b.torsion.end());
  return g.canonical();
}

AbelianGroup power(const AbelianGroup& g, long long count) {
  if (count < 0) throw DomainError("negative multiplicity");
  AbelianGroup out;
  out.free_rank = g.free_rank * count;
  out.torsion.reserve(g.torsion.size() * count);
  for (long long k = 0; k < count; ++k)
    out.torsion.insert(out.torsion.end(), g.torsion.begin(), g.torsion.end());
  return out.canonical();
}

AbelianGroup l_point(long long i) {
  switch (((i % 4) + 4) % 4) {
    case 0:
      return AbelianGroup::free_abelian(1);
    case 2:
      return AbelianGroup::cyclic(2);
    default:
      return AbelianGroup::trivial();
  }
}

AbelianGroup wedge_homology(const std::array<AbelianGroup, 4>& h_point,
                            long long wedge_count, long long i) {
  if (wedge_count < 0) throw DomainError("wedge count must be >= 0");
  auto at = [&](long long k) { return h_point[((k % 4) + 4) % 4]; };
  return direct_sum(at(i), power(at(i - 1), wedge_count));
}

LTable l_groups(const GroupLabel& label) {
  if (!label.is_finite_type())
    throw DomainError("no closed-form surgery groups for " + label.text() +
                      ": the table covers the finite types A, B, D, F4, G2, "
                      "I2(p) only");
  const long long n_formula = reflection_count_formula(label);
  const long long n_arrangement =
      reflection_arrangement(label).hyperplane_count();
  const long long n_enumerated = reflections(label).count();
  if (n_formula != n_arrangement || n_formula != n_enumerated)
    throw std::logic_error(
        "hyperplane count mismatch for " + label.text() + ": formula " +
        std::to_string(n_formula) + ", arrangement " +
        std::to_string(n_arrangement) + ", enumeration " +
        std::to_string(n_enumerated));

  LTable table;
  table.label = label;
  table.hyperplane_count = n_formula;
  table.groups[0] = AbelianGroup::free_abelian(1);
  table.groups[1] = AbelianGroup::free_abelian(n_formula);
  table.groups[2] = AbelianGroup::cyclic(2);
  table.groups[3] = power(AbelianGroup::cyclic(2), n_formula);
  return table;
}

KVanishingReport k_vanishing_report(const GroupLabel& label) {
  if (label.family == Family::AffD)
    throw DomainError("no vanishing statement for " + label.text() +
                      ": the affine type ~D_n is not covered");
  KVanishingReport r;
  r.label = label;
  r.holds = true;
  r.vanishing_groups = {"Wh", "K0~", "K_{-i}, i >= 1"};
  r.statement =
      "For every subgroup of the Artin group of type " + label.text() +
      ": the Whitehead group Wh, the reduced projective class group K0~ "
      "of the integral group ring, and the negative K-groups K_{-i} "
      "(i >= 1) all vanish.";
  return r;
}

} // namespace coxart
