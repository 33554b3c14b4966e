#ifndef COXART_LGROUPS_HPP
#define COXART_LGROUPS_HPP

#include "coxart/label.hpp"

#include <array>
#include <string>
#include <vector>

namespace coxart {

// A finitely generated abelian group as free rank plus a multiset of
// torsion orders; canonical form keeps the torsion sorted ascending.
struct AbelianGroup {
  long long free_rank = 0;
  std::vector<long long> torsion;  // entries >= 2, sorted

  static AbelianGroup trivial() { return {}; }
  static AbelianGroup free_abelian(long long rank) { return {rank, {}}; }
  static AbelianGroup cyclic(long long order);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  AbelianGroup canonical() const;

  bool operator==(const AbelianGroup& o) const = default;

  // "0", "Z", "Z^6", "Z/2", "(Z/2)^24", parts joined by " (+) "
  std::string to_text() const;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup power(const AbelianGroup& g, long long count);

// Surgery groups of the trivial group, 4-periodic:
// L_0 = Z, L_1 = 0, L_2 = Z/2, L_3 = 0. These constants are pinned by
// solving h_i = h_i(*) (+) h_{i-1}(*)^N against the closed-form table
// (Z, Z^N, Z/2, (Z/2)^N) with N generic.
AbelianGroup l_point(long long i);

// Homology of a space whose first suspension is a wedge of N two-spheres:
// the suspension isomorphism gives h_i(X) = h_i(*) (+) h_{i-1}(*)^N.
AbelianGroup wedge_homology(const std::array<AbelianGroup, 4>& h_point,
                            long long wedge_count, long long i);

struct LTable {
  GroupLabel label;
  long long hyperplane_count = 0;        // N
  std::array<AbelianGroup, 4> groups{};  // L_i for i mod 4
};

// The surgery groups of the finite-type pure Artin group: (Z, Z^N, Z/2,
// (Z/2)^N) with N the reflecting-hyperplane count. N comes from the closed
// form and is cross-checked against the arrangement hyperplane count and
// the reflection enumeration. Labels outside the finite types are
// rejected.
LTable l_groups(const GroupLabel& label);

struct KVanishingReport {
  GroupLabel label;
  bool holds = false;
  std::vector<std::string> vanishing_groups;
  std::string statement;
};

// Lower K-theory vanishing (Whitehead group, reduced projective class
// group, negative K-groups) for every subgroup of the Artin group of the
// given type. ~D_n is rejected: no vanishing statement is available there.
KVanishingReport k_vanishing_report(const GroupLabel& label);

} // namespace coxart

#endif
