#ifndef COXART_POLYNOMIAL_HPP
#define COXART_POLYNOMIAL_HPP

#include <string>
#include <vector>

namespace coxart {

// Exact integer polynomial; coefficient index = degree.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<long long> coeffs)
      : coeffs_(std::move(coeffs)) {
    trim();
  }

  static IntPolynomial monomial(long long c, int degree);

  const std::vector<long long>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  long long coefficient(int degree) const {
    return degree >= 0 && degree < static_cast<int>(coeffs_.size())
               ? coeffs_[degree]
               : 0;
  }

  long long evaluate(long long t) const;
  void add_term(long long c, int degree);

  bool operator==(const IntPolynomial& o) const = default;

  std::string to_text(const std::string& var = "t") const;

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<long long> coeffs_;
};

} // namespace coxart

#endif
