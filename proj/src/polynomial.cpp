#include "coxart/polynomial.hpp"

#include <cstdlib>

namespace coxart {

IntPolynomial IntPolynomial::monomial(long long c, int degree) {
  std::vector<long long> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

long long IntPolynomial::evaluate(long long t) const {
  long long v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
  return v;
}

void IntPolynomial::add_term(long long c, int degree) {
  if (degree >= static_cast<int>(coeffs_.size())) coeffs_.resize(degree + 1, 0);
  coeffs_[degree] += c;
  trim();
}

std::string IntPolynomial::to_text(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const long long c = coeffs_[d];
    if (c == 0) continue;
    if (!out.empty())
      out += c > 0 ? " + " : " - ";
    else if (c < 0)
      out += "-";
    const long long a = std::llabs(c);
    if (a != 1 || d == 0) out += std::to_string(a);
    if (d >= 1) {
      out += var;
      if (d >= 2) out += "^" + std::to_string(d);
    }
  }
  return out;
}

} // namespace coxart
