#include "support/oracles.hpp"

#include "coxart/errors.hpp"
#include "coxart/garside.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace coxart::testing {

namespace {

// textbook Bareiss elimination on a copy of the selected rows
int bareiss_rank(std::vector<std::vector<long long>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  long long prev = 1;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t i = row + 1; i < m.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * m[row][col] - m[i][col] * m[row][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[row][col];
    ++row;
  }
  return static_cast<int>(row);
}

long long binomial(int n, int k) {
  long long b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

} // namespace

IntPolynomial whitney_characteristic(const Arrangement& a) {
  if (a.is_combinatorial()) {
    // rank of a subset of concurrent lines is min(|S|, 2)
    const int p = *a.rank2_atoms;
    IntPolynomial chi;
    for (int k = 0; k <= p; ++k) {
      const long long c = (k % 2 == 0 ? 1 : -1) * binomial(p, k);
      chi.add_term(c, 2 - std::min(k, 2));
    }
    return chi;
  }
  const int m = static_cast<int>(a.hyperplanes.size());
  if (m > 20) throw std::invalid_argument("Whitney oracle capped at 20");
  IntPolynomial chi;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::vector<long long>> rows;
    for (int h = 0; h < m; ++h)
      if (mask >> h & 1) rows.push_back(a.hyperplanes[h].normal);
    const int sign = __builtin_popcount(mask) % 2 == 0 ? 1 : -1;
    chi.add_term(sign, a.dim - bareiss_rank(std::move(rows)));
  }
  return chi;
}

namespace {

std::vector<Letter> key_of(const Word& w) { return w.letters; }

// the two sides of every rewrite pattern, as signed letter sequences over
// generator indices 0..n-2
struct Rewrite {
  std::vector<Letter> from, to;
};

std::vector<Rewrite> braid_rewrites(int n) {
  std::vector<Rewrite> rules;
  auto letter = [](int g, int s) { return Letter{g, s}; };
  for (int i = 0; i + 1 <= n - 2; ++i) {
    const int j = i + 1;
    for (int s : {1, -1}) {
      std::vector<Letter> lhs{letter(i, s), letter(j, s), letter(i, s)};
      std::vector<Letter> rhs{letter(j, s), letter(i, s), letter(j, s)};
      if (s < 0) {
        std::reverse(lhs.begin(), lhs.end());
        std::reverse(rhs.begin(), rhs.end());
      }
      rules.push_back({lhs, rhs});
      rules.push_back({rhs, lhs});
    }
  }
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 2; j < n - 1; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          std::vector<Letter> lhs{letter(i, si), letter(j, sj)};
          std::vector<Letter> rhs{letter(j, sj), letter(i, si)};
          rules.push_back({lhs, rhs});
          rules.push_back({rhs, lhs});
        }
  return rules;
}

} // namespace

bool rewrite_connected(const Word& u, const Word& v, int n,
                       std::size_t max_len, std::size_t node_budget) {
  const Alphabet alpha = Alphabet::braid(n);
  auto reduce = [&](std::vector<Letter> letters) {
    return free_reduce(Word{alpha, std::move(letters)}).letters;
  };
  const auto start = reduce(u.letters);
  const auto target = reduce(v.letters);
  if (start == target) return true;

  const auto rules = braid_rewrites(n);
  std::set<std::vector<Letter>> seen{start};
  std::deque<std::vector<Letter>> queue{start};
  while (!queue.empty() && seen.size() < node_budget) {
    const auto word = queue.front();
    queue.pop_front();
    std::vector<std::vector<Letter>> nexts;
    for (const Rewrite& rule : rules) {
      if (word.size() < rule.from.size()) continue;
      for (std::size_t at = 0; at + rule.from.size() <= word.size(); ++at) {
        if (!std::equal(rule.from.begin(), rule.from.end(),
                        word.begin() + static_cast<long>(at)))
          continue;
        std::vector<Letter> next(word.begin(),
                                 word.begin() + static_cast<long>(at));
        next.insert(next.end(), rule.to.begin(), rule.to.end());
        next.insert(next.end(),
                    word.begin() + static_cast<long>(at + rule.from.size()),
                    word.end());
        nexts.push_back(reduce(std::move(next)));
      }
    }
    if (word.size() + 2 <= max_len) {
      for (int g = 0; g < n - 1; ++g)
        for (int s : {1, -1})
          for (std::size_t at = 0; at <= word.size(); ++at) {
            std::vector<Letter> next = word;
            next.insert(next.begin() + static_cast<long>(at),
                        {Letter{g, s}, Letter{g, -s}});
            nexts.push_back(std::move(next));
          }
    }
    for (auto& next : nexts) {
      if (next == target) return true;
      if (next.size() > max_len) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

namespace {

Laurent lmul(const Laurent& a, const Laurent& b) {
  Laurent c;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) c[da + db] += ca * cb;
  std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
  return c;
}

void ladd_into(Laurent& a, const Laurent& b) {
  for (const auto& [d, c] : b) {
    a[d] += c;
    if (a[d] == 0) a.erase(d);
  }
}

BurauMatrix bmat_identity(int n) {
  BurauMatrix m(n, std::vector<Laurent>(n));
  for (int i = 0; i < n; ++i) m[i][i] = Laurent{{0, 1}};
  return m;
}

BurauMatrix bmat_mul(const BurauMatrix& a, const BurauMatrix& b) {
  const int n = static_cast<int>(a.size());
  BurauMatrix c(n, std::vector<Laurent>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].empty()) continue;
      for (int j = 0; j < n; ++j) {
        if (b[k][j].empty()) continue;
        ladd_into(c[i][j], lmul(a[i][k], b[k][j]));
      }
    }
  return c;
}

// generator blocks: sigma_i -> [[1-t, t], [1, 0]] on rows/cols i, i+1;
// the inverse block is [[0, 1], [1/t, 1 - 1/t]]
BurauMatrix bmat_generator(int n, int i, int sign) {
  BurauMatrix m = bmat_identity(n);
  if (sign > 0) {
    m[i][i] = Laurent{{0, 1}, {1, -1}};
    m[i][i + 1] = Laurent{{1, 1}};
    m[i + 1][i] = Laurent{{0, 1}};
    m[i + 1][i + 1] = {};
  } else {
    m[i][i] = {};
    m[i][i + 1] = Laurent{{0, 1}};
    m[i + 1][i] = Laurent{{-1, 1}};
    m[i + 1][i + 1] = Laurent{{0, 1}, {-1, -1}};
  }
  return m;
}

} // namespace

BurauMatrix burau_image(const Word& w, int n) {
  BurauMatrix acc = bmat_identity(n);
  for (const Letter& l : w.letters) {
    const std::string& name = w.alphabet.letters[l.index];
    const int gen = std::stoi(name.substr(1)) - 1;
    acc = bmat_mul(acc, bmat_generator(n, gen, l.sign));
  }
  return acc;
}

Word random_braid_word(std::mt19937& rng, int n, int len) {
  Word w{Alphabet::braid(n), {}};
  std::uniform_int_distribution<int> gen(0, n - 2);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < len; ++i)
    w.append(gen(rng), sign(rng) ? 1 : -1);
  return w;
}

} // namespace coxart::testing
