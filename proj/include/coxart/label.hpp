#ifndef COXART_LABEL_HPP
#define COXART_LABEL_HPP

#include <string>

namespace coxart {

// Family tags for the supported (real and complex) reflection group types.
// C_n inputs are canonicalized to B_n at parse time.
enum class Family { A, B, D, F4, G2, I2, AffA, AffB, AffC, AffD, Gder };

struct GroupLabel {
  Family family = Family::A;
  // A/B/D and affine families: rank n. I2: the bond order p.
  int n = 0;
  // G(de,e,r) only.
  int de = 0, e = 0, r = 0;

  bool operator==(const GroupLabel& o) const = default;

  bool is_finite_type() const;  // A, B, D, F4, G2, I2
  bool is_affine() const;
  int rank() const;  // number of Coxeter generators (Gder: r)

  std::string text() const;  // grammar form, e.g. "B4", "I2(7)", "~C3"
};

// Parses `A5 | B4 | C4 | D6 | F4 | G2 | I2(7) | ~A4 | ~B4 | ~C4 | ~D4 |
// G(4,2,3)`. C_n canonicalizes to B_n. Throws ParseError on syntax errors
// and DomainError on violated rank bounds (with the bound in the message).
GroupLabel parse_label(const std::string& text);

// Number of reflecting hyperplanes of the finite type, by closed form:
// A_r: r(r+1)/2, B_n: n^2, D_n: n(n-1), F4: 24, G2: 6, I2(p): p.
// Throws DomainError for non-finite types.
long long reflection_count_formula(const GroupLabel& label);

// |W| for finite types: (n+1)!, 2^n n!, 2^(n-1) n!, 1152, 12, 2p.
long long coxeter_order_formula(const GroupLabel& label);

} // namespace coxart

#endif
