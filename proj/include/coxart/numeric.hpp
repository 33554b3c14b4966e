#ifndef COXART_NUMERIC_HPP
#define COXART_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace coxart {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "7", "-3/4". Throws ParseError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

// Parses a comma- or whitespace-separated list of rationals.
std::vector<Rational> parse_point(const std::string& text);

std::string to_string(const Rational& r);

namespace detail {

// int64 arithmetic overflowed; redo the computation over BigInt.
struct ArithmeticOverflow {};

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}
inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }

inline long long abs_gcd(long long a, long long b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}
inline BigInt abs_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

} // namespace detail

// Incremental exact rank tracker: maintains an integer echelon basis via
// cross-multiplication, rows divided by their content to limit growth.
// Z = long long throws detail::ArithmeticOverflow on overflow; callers
// retry with Z = BigInt.
template <class Z>
class RankTracker {
public:
  explicit RankTracker(int cols) : cols_(cols) {}

  int rank() const { return static_cast<int>(basis_.size()); }
  int cols() const { return cols_; }

  // True iff |row| lies in the span of the rows added so far.
  bool in_span(const std::vector<long long>& row) const {
    std::vector<Z> v(row.begin(), row.end());
    return reduce(v) < 0;
  }

  // Adds |row|; returns true if the rank increased.
  bool add(const std::vector<long long>& row) {
    std::vector<Z> v(row.begin(), row.end());
    int col = reduce(v);
    if (col < 0) return false;
    normalize(v);
    basis_.push_back(std::move(v));
    pivot_col_.push_back(col);
    return true;
  }

private:
  // Eliminates v against the basis; returns its pivot column, or -1 if zero.
  int reduce(std::vector<Z>& v) const {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const Z& p = basis_[b][pivot_col_[b]];
      Z& x = v[pivot_col_[b]];
      if (x == 0) continue;
      const Z f = x;
      for (int j = 0; j < cols_; ++j)
        v[j] = detail::checked_sub(detail::checked_mul(v[j], p),
                                   detail::checked_mul(basis_[b][j], f));
    }
    for (int j = 0; j < cols_; ++j)
      if (v[j] != 0) return j;
    return -1;
  }

  void normalize(std::vector<Z>& v) const {
    Z g = 0;
    for (const Z& x : v) g = detail::abs_gcd(g, x);
    if (g > 1)
      for (Z& x : v) x /= g;
  }

  int cols_;
  std::vector<std::vector<Z>> basis_;
  std::vector<int> pivot_col_;
};

// Exact rank of the row span of an integer matrix.
int integer_rank(const std::vector<std::vector<long long>>& rows, int cols);

} // namespace coxart

#endif
