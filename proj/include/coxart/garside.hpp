#ifndef COXART_GARSIDE_HPP
#define COXART_GARSIDE_HPP

#include "coxart/word.hpp"

#include <string>
#include <vector>

namespace coxart {

// A permutation braid on n strands, stored as the underlying permutation
// in one-line form (0-indexed images, position at the top -> position at
// the bottom). Strands i < j cross iff p[i] > p[j].
using StrandPerm = std::vector<int>;

StrandPerm strand_identity(int n);
StrandPerm strand_half_twist(int n);  // the permutation of Delta
// apply a, then b
StrandPerm strand_mul(const StrandPerm& a, const StrandPerm& b);
int strand_length(const StrandPerm& p);  // inversion count
// flip conjugation by Delta: tau(p) = w0 p w0
StrandPerm strand_tau(const StrandPerm& p);
// starting set: generators sigma_j that begin some positive word for p
std::vector<int> starting_set(const StrandPerm& p);
// finishing set: generators sigma_j that end some positive word for p
std::vector<int> finishing_set(const StrandPerm& p);
// canonical positive word (1-based generator indices, lowest letter first)
std::vector<int> strand_word(StrandPerm p);

// Left-greedy normal form Delta^inf p_1 ... p_l with each factor a
// permutation braid that is neither trivial nor Delta, and every adjacent
// pair left-weighted. Equal braid words yield identical forms.
struct GarsideNF {
  int n = 2;
  long long inf = 0;
  std::vector<StrandPerm> factors;

  bool trivial() const { return inf == 0 && factors.empty(); }
  int canonical_length() const { return static_cast<int>(factors.size()); }

  bool operator==(const GarsideNF& o) const = default;

  // adjacent factors left-weighted, no trivial or Delta factor
  bool well_formed() const;

  Word to_word() const;         // over Alphabet::braid(n)
  std::string to_text() const;  // e.g. "D^-1 . (a2 a1) (a1)"
};

// Computes the normal form of a word over generators a1..a_{n-1}; letters
// with indices outside that range are rejected. Words over any alphabet
// whose letters are named a<i> are accepted.
GarsideNF garside_nf(const Word& w, int n);

// Equality in the braid group on n strands.
bool braid_equal(const Word& u, const Word& v, int n);

} // namespace coxart

#endif
