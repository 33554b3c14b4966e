#include "coxart/word.hpp"

#include "coxart/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace coxart {

namespace {

std::vector<std::string> a_names(int count) {
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

} // namespace

Alphabet Alphabet::artin(int k) {
  if (k < 1) throw DomainError("alphabet needs at least one generator");
  return Alphabet{"artin(" + std::to_string(k) + ")", a_names(k),
                  std::vector<int>(k, 0)};
}

Alphabet Alphabet::braid(int n) {
  if (n < 2) throw DomainError("braid index must be at least 2");
  return Alphabet{"braid(" + std::to_string(n) + ")", a_names(n - 1),
                  std::vector<int>(n - 1, 0)};
}

Alphabet Alphabet::orbifold_source(int n, int q) {
  if (n < 2) throw DomainError("orbifold braid group needs n >= 2 strands");
  if (q < 2) throw DomainError("cone point order must be q >= 2");
  Alphabet a;
  a.name = "orbifold-source(" + std::to_string(n) + "," + std::to_string(q) + ")";
  a.letters.push_back("x");
  a.torsion.push_back(q);
  for (const auto& s : a_names(n - 1)) {
    a.letters.push_back(s);
    a.torsion.push_back(0);
  }
  a.letters.push_back("p");
  a.torsion.push_back(0);
  return a;
}

Alphabet Alphabet::orbifold_target(int n, int q) {
  if (n < 2) throw DomainError("orbifold braid group needs n >= 2 strands");
  if (q < 2) throw DomainError("cone point order must be q >= 2");
  Alphabet a;
  a.name = "orbifold-target(" + std::to_string(n) + "," + std::to_string(q) + ")";
  a.letters.push_back("x");
  a.torsion.push_back(q);
  for (const auto& s : a_names(n - 1)) {
    a.letters.push_back(s);
    a.torsion.push_back(0);
  }
  return a;
}

int Alphabet::index_of(const std::string& letter) const {
  auto it = std::find(letters.begin(), letters.end(), letter);
  return it == letters.end() ? -1
                             : static_cast<int>(it - letters.begin());
}

Word Word::inverse() const {
  Word w{alphabet, {}};
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back({it->index, -it->sign});
  return w;
}

Word Word::concat(const Word& other) const {
  if (!(alphabet == other.alphabet))
    throw DomainError("cannot concatenate words over different alphabets");
  Word w = *this;
  w.letters.insert(w.letters.end(), other.letters.begin(),
                   other.letters.end());
  return w;
}

void Word::append(int index, int sign, int count) {
  for (int i = 0; i < count; ++i) letters.push_back({index, sign});
}

std::string Word::to_text() const {
  if (letters.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long long exp =
        static_cast<long long>(j - i) * letters[i].sign;
    if (!first) out << ' ';
    first = false;
    out << alphabet.letters[letters[i].index];
    if (exp != 1) out << '^' << exp;
    i = j;
  }
  return out.str();
}

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  Word w{alphabet, {}};
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;  // the identity word prints as "1"
    std::string name = tok;
    long long exp = 1;
    const auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      const std::string etext = tok.substr(caret + 1);
      try {
        std::size_t used = 0;
        exp = std::stoll(etext, &used);
        if (used != etext.size()) throw std::invalid_argument(etext);
      } catch (const std::exception&) {
        throw ParseError("malformed exponent in token '" + tok + "'");
      }
      if (std::llabs(exp) > 4096)
        throw ParseError("exponent out of range in token '" + tok + "'");
    }
    const int idx = alphabet.index_of(name);
    if (idx < 0)
      throw ParseError("unknown generator '" + name + "' in alphabet " +
                       alphabet.name);
    w.append(idx, exp >= 0 ? 1 : -1, static_cast<int>(std::llabs(exp)));
  }
  return w;
}

Word free_reduce(Word w) {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (const Letter& l : w.letters) {
    if (!out.empty() && out.back().index == l.index &&
        out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  w.letters = std::move(out);
  return w;
}

namespace {

// one pass of run-collapsing: maximal runs of each torsion generator get
// their exponent sum reduced into 0..q-1
Word collapse_torsion_runs(const Word& w) {
  Word out{w.alphabet, {}};
  std::size_t i = 0;
  while (i < w.letters.size()) {
    const int idx = w.letters[i].index;
    const int q = w.alphabet.torsion[idx];
    if (q == 0) {
      out.letters.push_back(w.letters[i]);
      ++i;
      continue;
    }
    long long exp = 0;
    while (i < w.letters.size() && w.letters[i].index == idx) {
      exp += w.letters[i].sign;
      ++i;
    }
    exp %= q;
    if (exp < 0) exp += q;
    out.append(idx, 1, static_cast<int>(exp));
  }
  return out;
}

} // namespace

Word torsion_reduce(Word w) {
  for (;;) {
    Word next = free_reduce(collapse_torsion_runs(w));
    if (next == w) return w;
    w = std::move(next);
  }
}

} // namespace coxart
