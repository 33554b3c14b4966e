#include "coxart/garside.hpp"

#include "coxart/errors.hpp"

#include <algorithm>
#include <sstream>

namespace coxart {

StrandPerm strand_identity(int n) {
  StrandPerm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

StrandPerm strand_half_twist(int n) {
  StrandPerm p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

StrandPerm strand_mul(const StrandPerm& a, const StrandPerm& b) {
  StrandPerm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

int strand_length(const StrandPerm& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

StrandPerm strand_tau(const StrandPerm& p) {
  const int n = static_cast<int>(p.size());
  StrandPerm c(n);
  for (int i = 0; i < n; ++i) c[i] = n - 1 - p[n - 1 - i];
  return c;
}

std::vector<int> starting_set(const StrandPerm& p) {
  std::vector<int> s;
  for (std::size_t j = 0; j + 1 < p.size(); ++j)
    if (p[j] > p[j + 1]) s.push_back(static_cast<int>(j));
  return s;
}

std::vector<int> finishing_set(const StrandPerm& p) {
  const int n = static_cast<int>(p.size());
  StrandPerm inv(n);
  for (int i = 0; i < n; ++i) inv[p[i]] = i;
  return starting_set(inv);
}

std::vector<int> strand_word(StrandPerm p) {
  std::vector<int> word;
  for (;;) {
    int j = -1;
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
      if (p[k] > p[k + 1]) {
        j = static_cast<int>(k);
        break;
      }
    if (j < 0) break;
    word.push_back(j + 1);
    std::swap(p[j], p[j + 1]);  // strip sigma_j off the top
  }
  return word;
}

namespace {

// is sigma_j in the finishing set of p, i.e. p^{-1}(j) > p^{-1}(j+1)
bool finishes_with(const StrandPerm& p, int j) {
  int pos_j = 0, pos_j1 = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == j) pos_j = static_cast<int>(i);
    if (p[i] == j + 1) pos_j1 = static_cast<int>(i);
  }
  return pos_j > pos_j1;
}

bool left_weighted(const StrandPerm& a, const StrandPerm& b) {
  for (std::size_t j = 0; j + 1 < b.size(); ++j)
    if (b[j] > b[j + 1] && !finishes_with(a, static_cast<int>(j)))
      return false;
  return true;
}

// slides head crossings of b into a until the pair is left-weighted
void fix_pair(StrandPerm& a, StrandPerm& b) {
  for (;;) {
    int move = -1;
    for (std::size_t j = 0; j + 1 < b.size(); ++j)
      if (b[j] > b[j + 1] && !finishes_with(a, static_cast<int>(j))) {
        move = static_cast<int>(j);
        break;
      }
    if (move < 0) return;
    // a <- a sigma_j : swap the values move, move+1 in a
    for (auto& v : a)
      if (v == move)
        v = move + 1;
      else if (v == move + 1)
        v = move;
    std::swap(b[move], b[move + 1]);  // b <- sigma_j^{-1} b
  }
}

} // namespace

bool GarsideNF::well_formed() const {
  const StrandPerm id = strand_identity(n);
  const StrandPerm w0 = strand_half_twist(n);
  for (const auto& f : factors)
    if (f == id || f == w0) return false;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i)
    if (!left_weighted(factors[i], factors[i + 1])) return false;
  return true;
}

Word GarsideNF::to_word() const {
  Word w{Alphabet::braid(n), {}};
  std::vector<int> delta = strand_word(strand_half_twist(n));
  if (inf >= 0) {
    for (long long k = 0; k < inf; ++k)
      for (int g : delta) w.append(g - 1, 1);
  } else {
    for (long long k = 0; k < -inf; ++k)
      for (auto it = delta.rbegin(); it != delta.rend(); ++it)
        w.append(*it - 1, -1);
  }
  for (const auto& f : factors)
    for (int g : strand_word(f)) w.append(g - 1, 1);
  return w;
}

std::string GarsideNF::to_text() const {
  std::ostringstream out;
  if (trivial()) return "1";
  bool first = true;
  if (inf != 0) {
    out << "D";
    if (inf != 1) out << "^" << inf;
    first = false;
  }
  const Alphabet alpha = Alphabet::braid(n);
  for (const auto& f : factors) {
    if (!first) out << " . ";
    first = false;
    out << "(";
    const auto word = strand_word(f);
    for (std::size_t i = 0; i < word.size(); ++i)
      out << (i ? " " : "") << alpha.letters[word[i] - 1];
    out << ")";
  }
  return out.str();
}

GarsideNF garside_nf(const Word& w, int n) {
  if (n < 2) throw DomainError("braid index must be at least 2");
  GarsideNF nf;
  nf.n = n;
  const StrandPerm id = strand_identity(n);
  const StrandPerm w0 = strand_half_twist(n);

  // each letter index must name a generator a<j> with j <= n-1
  auto strand_gen = [&](const Letter& l) {
    const std::string& name = w.alphabet.letters[l.index];
    int j = 0;
    if (name.size() >= 2 && name[0] == 'a') {
      try {
        j = std::stoi(name.substr(1));
      } catch (const std::exception&) {
        j = 0;
      }
    }
    if (j < 1 || j > n - 1)
      throw DomainError("letter '" + name + "' is outside the braid alphabet a1..a" +
                        std::to_string(n - 1));
    return j - 1;  // 0-based
  };

  for (const Letter& l : w.letters) {
    const int j = strand_gen(l);
    if (l.sign > 0) {
      StrandPerm t = id;
      std::swap(t[j], t[j + 1]);
      nf.factors.push_back(std::move(t));
    } else {
      // sigma_j^{-1} = Delta^{-1} X_j with X_j = w0 followed by sigma_j
      nf.inf -= 1;
      for (auto& f : nf.factors) f = strand_tau(f);
      StrandPerm x(n);
      for (int i = 0; i < n; ++i) {
        int v = n - 1 - i;
        if (v == j)
          v = j + 1;
        else if (v == j + 1)
          v = j;
        x[i] = v;
      }
      nf.factors.push_back(std::move(x));
    }
  }

  // left-justify: slide weight left, absorb Delta factors, drop identities
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < nf.factors.size();) {
      if (nf.factors[i] == id) {
        nf.factors.erase(nf.factors.begin() + static_cast<long>(i));
        changed = true;
        continue;
      }
      if (nf.factors[i] == w0) {
        nf.inf += 1;
        for (std::size_t k = 0; k < i; ++k)
          nf.factors[k] = strand_tau(nf.factors[k]);
        nf.factors.erase(nf.factors.begin() + static_cast<long>(i));
        changed = true;
        continue;
      }
      ++i;
    }
    for (std::size_t i = 0; i + 1 < nf.factors.size(); ++i) {
      if (nf.factors[i] == id || nf.factors[i + 1] == id) continue;
      if (!left_weighted(nf.factors[i], nf.factors[i + 1])) {
        fix_pair(nf.factors[i], nf.factors[i + 1]);
        changed = true;
      }
    }
  }
  return nf;
}

bool braid_equal(const Word& u, const Word& v, int n) {
  return garside_nf(u, n) == garside_nf(v, n);
}

} // namespace coxart
