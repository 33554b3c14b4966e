#ifndef COXART_ARRANGEMENT_HPP
#define COXART_ARRANGEMENT_HPP

#include "coxart/label.hpp"
#include "coxart/numeric.hpp"
#include "coxart/polynomial.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coxart {

// A central hyperplane: primitive integer normal, first nonzero entry
// positive.
struct Hyperplane {
  std::vector<long long> normal;

  // divides by the gcd and fixes the leading sign; rejects the zero vector
  static Hyperplane normalized(std::vector<long long> normal);

  bool operator==(const Hyperplane& o) const = default;
  auto operator<=>(const Hyperplane& o) const = default;

  // <x, normal> for a rational point
  Rational evaluate(const std::vector<Rational>& point) const;

  std::string to_text() const;  // e.g. "z1 - z2 = 0"
};

// Either an explicit list of central hyperplanes in C^dim, or the purely
// combinatorial rank-2 model used for I2(p) (p concurrent lines, whose
// normals are irrational; any p distinct concurrent lines share the
// lattice).
struct Arrangement {
  int dim = 0;
  std::vector<Hyperplane> hyperplanes;
  std::optional<int> rank2_atoms;

  bool is_combinatorial() const { return rank2_atoms.has_value(); }
  long long hyperplane_count() const {
    return is_combinatorial() ? *rank2_atoms
                              : static_cast<long long>(hyperplanes.size());
  }

  static Arrangement combinatorial_rank2(int atoms);
  // deduplicates after normalization
  static Arrangement from_normals(int dim,
                                  std::vector<std::vector<long long>> normals);
};

// Reflecting-hyperplane arrangements of the finite types: A_r as z_i = z_j
// in C^{r+1}; B_n as z_i = 0 and z_i = +-z_j; D_n as z_i = +-z_j; F4 with
// its 24 planes (4 coordinate, 12 of the form z_i +- z_j, 8 of the form
// z_1 +- z_2 +- z_3 +- z_4); G2/I2(p) as the combinatorial rank-2
// arrangement with p atoms.
Arrangement reflection_arrangement(const GroupLabel& label);

// File format: first line `dim <n>`, then one hyperplane per line as
// space-separated integer normal entries. `#` starts a comment line.
Arrangement read_arrangement(std::istream& in);
Arrangement read_arrangement_file(const std::string& path);
std::string write_arrangement(const Arrangement& a);

// ------------------------------------------------------------------
// Intersection lattice
// ------------------------------------------------------------------

struct Flat {
  std::uint64_t mask = 0;  // hyperplanes containing the flat
  int rank = 0;            // codimension
  long long mobius = 0;

  int dim(int ambient) const { return ambient - rank; }
};

struct IntersectionLattice {
  int ambient_dim = 0;
  long long atom_count = 0;
  std::vector<Flat> flats;  // ordered by (rank, mask)

  const Flat& bottom() const { return flats.front(); }
  // index of the unique maximal flat (nonempty central arrangements)
  int top_index() const;
};

inline constexpr int kDefaultHyperplaneBound = 64;

// All distinct intersections ordered by reverse inclusion, with Mobius
// values computed recursively from the bottom. Throws DomainError when the
// arrangement exceeds the hyperplane bound.
IntersectionLattice intersection_lattice(const Arrangement& a,
                                         int bound = kDefaultHyperplaneBound);

// chi(t) = sum over flats of mobius(X) t^{dim X}
IntPolynomial characteristic_polynomial(const Arrangement& a);
IntPolynomial characteristic_polynomial(const IntersectionLattice& l);

// pi(t) = sum over flats of |mobius(X)| t^{codim X}; checked against the
// (-t)^n chi(-1/t) substitution identity.
IntPolynomial poincare_polynomial(const Arrangement& a);
IntPolynomial poincare_polynomial(const IntersectionLattice& l);

// coefficients of pi(t); b_0 = 1
std::vector<long long> betti_numbers(const Arrangement& a);

// The H_1 shadow of the suspension statement: the first suspension of the
// complement is a wedge of |A| two-spheres, so b_1 must equal |A|.
struct SuspensionReport {
  long long hyperplanes = 0;
  long long b1 = 0;
  bool pass = false;
};

SuspensionReport suspension_check(const Arrangement& a);

// Supersolvability (a maximal chain of modular flats), the decidable
// criterion for fiber-type.
bool is_fiber_type(const Arrangement& a);

} // namespace coxart

#endif
