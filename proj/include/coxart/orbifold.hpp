#ifndef COXART_ORBIFOLD_HPP
#define COXART_ORBIFOLD_HPP

#include "coxart/presentation.hpp"
#include "coxart/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coxart {

// The two orbifold braid groups carried by this artifact:
//   Source(n,q): n strands on the plane with one puncture and one cone
//                point of order q; generators x, a1..a_{n-1}, p.
//   Target(n,q): n strands on the plane with one cone point of order q;
//                generators x, a1..a_{n-1}.
enum class OrbifoldKind { Source, Target };

struct OrbifoldRelation {
  std::string family;  // torsion | x-braid | a-braid | a-commute | p-braid
  Word lhs, rhs;
};

struct OrbifoldPresentation {
  OrbifoldKind kind = OrbifoldKind::Source;
  int strands = 0;
  int cone_order = 0;
  Alphabet alphabet;
  std::vector<OrbifoldRelation> relations;

  // named-generator form (x carries torsion order cone_order)
  Presentation presentation() const;
};

// Relation families:
//   source: x^q = 1; x a1 x a1 = a1 x a1 x; a_i a_{i+1} a_i = a_{i+1} a_i
//   a_{i+1}; a_i a_j = a_j a_i for |i-j| > 1; p a_{n-1} p a_{n-1} =
//   a_{n-1} p a_{n-1} p.
//   target: the first four families only.
// Requires n >= 2, q >= 2.
OrbifoldPresentation orbifold_presentation(OrbifoldKind kind, int n, int q);

// Letterwise substitution x -> x, a_i -> a_i, p -> a_n^2 (p^{-1} -> a_n^-2)
// from words over Source(n,q) to words over Target(n+1,q).
Word embed(const Word& w, int n);

// One certified relator of the embedding check.
struct RelatorCertificate {
  std::string family;
  Word source_lhs, source_rhs;
  Word image_lhs, image_rhs;
  std::string certificate;  // "syntactic" or "garside-b3"
  std::optional<std::pair<Word, Word>> b3_pair;  // for garside-b3
  bool pass = false;
};

struct EmbeddingReport {
  int strands = 0;
  int cone_order = 0;
  bool pass = false;
  std::vector<RelatorCertificate> relators;
};

// Certifies that the generator map sends every defining relation of
// Source(n,q) to an identity of Target(n+1,q): relation families 1-4 must
// match a target relation verbatim after free/torsion reduction, and the
// p-relation image (words in a_{n-1}, a_n only) is settled by Garside
// equality in the braid group on those two letters, which maps onto the
// subgroup they generate.
EmbeddingReport verify_embedding_relators(int n, int q);

// Tower metadata for the point-forgetting fibrations of a configuration
// space: level 1 is the surface itself, level i >= 2 fibers over the
// (i-1)-point space with fiber the surface minus i-1 points.
struct FadellNeuwirthLevel {
  int index = 0;
  std::string space;
  std::string base;   // empty at level 1
  std::string fiber;  // empty at level 1
  bool is_fibration = false;
};

std::vector<FadellNeuwirthLevel> fadell_neuwirth_tower(
    int n, const std::string& surface);

} // namespace coxart

#endif
