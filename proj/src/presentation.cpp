#include "coxart/presentation.hpp"

#include <cstdlib>

namespace coxart {

bool Presentation::well_formed() const {
  const int k = static_cast<int>(generators.size());
  auto ok_word = [k](const std::vector<int>& w) {
    for (int x : w)
      if (x == 0 || std::abs(x) > k) return false;
    return true;
  };
  for (const auto& [lhs, rhs] : relations)
    if (!ok_word(lhs) || !ok_word(rhs)) return false;
  return true;
}

std::string Presentation::word_text(const std::vector<int>& word) const {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += generators[std::abs(word[i]) - 1];
    if (word[i] < 0) out += "^-1";
  }
  return out;
}

std::string Presentation::to_text() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ',';
    out += generators[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (i) out += ", ";
    out += word_text(relations[i].first);
    out += " = ";
    out += word_text(relations[i].second);
  }
  out += ">";
  return out;
}

std::vector<int> alternating_word(int g, int h, int length) {
  std::vector<int> w;
  w.reserve(length);
  for (int i = 0; i < length; ++i) w.push_back(i % 2 == 0 ? g : h);
  return w;
}

namespace {

std::vector<std::string> indexed_names(const char* stem, int k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (int i = 1; i <= k; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

} // namespace

Presentation coxeter_presentation(const CoxeterMatrix& m) {
  Presentation p;
  const int k = m.size();
  p.generators = indexed_names("s", k);
  for (int i = 1; i <= k; ++i)
    p.relations.push_back({{i, i}, {}});
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const int mij = m.at(i - 1, j - 1);
      if (mij == CoxeterMatrix::kInfinity) continue;
      p.relations.push_back({alternating_word(i, j, 2 * mij), {}});
    }
  return p;
}

Presentation artin_presentation(const CoxeterMatrix& m) {
  Presentation p;
  const int k = m.size();
  p.generators = indexed_names("a", k);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const int mij = m.at(i - 1, j - 1);
      if (mij == CoxeterMatrix::kInfinity) continue;
      p.relations.push_back(
          {alternating_word(i, j, mij), alternating_word(j, i, mij)});
    }
  return p;
}

} // namespace coxart
