#ifndef COXART_WORD_HPP
#define COXART_WORD_HPP

#include <string>
#include <vector>

namespace coxart {

// A named generating set. Torsion order 0 means infinite order; the only
// torsion generator in this artifact is the cone-point letter x.
struct Alphabet {
  std::string name;
  std::vector<std::string> letters;
  std::vector<int> torsion;  // parallel to letters; 0 = infinite

  static Alphabet artin(int k);  // a1..ak
  static Alphabet braid(int n);  // a1..a_{n-1} for the braid group on n strands
  // x (order q), a1..a_{n-1}, p: the n-strand group of the once-punctured
  // plane with one cone point of order q
  static Alphabet orbifold_source(int n, int q);
  // x (order q), a1..a_{n-1}: the n-strand group of the plane with one cone
  // point of order q
  static Alphabet orbifold_target(int n, int q);

  int index_of(const std::string& letter) const;  // -1 if absent
  bool operator==(const Alphabet& o) const = default;
};

struct Letter {
  int index = 0;  // position in the alphabet
  int sign = 1;   // +1 or -1

  auto operator<=>(const Letter& o) const = default;
};

struct Word {
  Alphabet alphabet;
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }

  Word inverse() const;
  Word concat(const Word& other) const;  // alphabets must match
  void append(int index, int sign, int count = 1);

  bool same_letters(const Word& o) const { return letters == o.letters; }
  bool operator==(const Word& o) const = default;

  std::string to_text() const;  // runs compressed, e.g. "a1^2 x^-1 p"
};

// Tokens: `a3`, `a3^-1`, `x`, `p`, `s2^4`; an exponent expands to repeated
// letters. Throws ParseError on unknown tokens or malformed exponents.
Word parse_word(const std::string& text, const Alphabet& alphabet);

// Cancels adjacent inverse pairs until none remain; the result is
// independent of cancellation order.
Word free_reduce(Word w);

// Reduces maximal runs of each torsion generator modulo its order
// (exponents normalized into 0..q-1), then free-reduces; iterated to a
// fixed point, so the operation is idempotent.
Word torsion_reduce(Word w);

} // namespace coxart

#endif
