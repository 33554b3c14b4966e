#ifndef COXART_PRESENTATION_HPP
#define COXART_PRESENTATION_HPP

#include "coxart/coxeter.hpp"

#include <string>
#include <vector>

namespace coxart {

// A finitely presented group. Relation words are sequences of signed
// 1-based generator indices (+i a generator, -i its inverse); the empty
// word is the identity. Relator-style relations have an empty right side.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;

  // every index in every relation names a listed generator
  bool well_formed() const;

  // `<g1,g2 | w1 = w2, ...>`; the empty word prints as "1"
  std::string to_text() const;

  std::string word_text(const std::vector<int>& word) const;
};

// Generators s1..sk; relations s_i^2 = 1 and (s_i s_j)^m(i,j) = 1 for each
// pair with finite bond order.
Presentation coxeter_presentation(const CoxeterMatrix& m);

// Generators a1..ak; for each pair with finite m the two alternating words
// of length m(i,j) set equal; no generator-square relations.
Presentation artin_presentation(const CoxeterMatrix& m);

// The alternating word g h g h ... of the given length (1-based indices).
std::vector<int> alternating_word(int g, int h, int length);

} // namespace coxart

#endif
