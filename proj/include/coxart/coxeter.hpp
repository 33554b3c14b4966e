#ifndef COXART_COXETER_HPP
#define COXART_COXETER_HPP

#include "coxart/label.hpp"

#include <vector>

namespace coxart {

// Symmetric bond-order matrix: m(i,i) = 1, m(i,j) >= 2 off the diagonal,
// kInfinity for unbonded pairs of an affine diagram with an infinite bond.
class CoxeterMatrix {
public:
  static constexpr int kInfinity = 0;  // stored sentinel for m = infinity

  CoxeterMatrix() = default;
  explicit CoxeterMatrix(int size);

  int size() const { return size_; }
  int at(int i, int j) const { return m_[i * size_ + j]; }
  void set(int i, int j, int value);  // keeps the matrix symmetric

  bool operator==(const CoxeterMatrix& o) const = default;

  // symmetric, unit diagonal, off-diagonal entries >= 2 or infinity
  bool well_formed() const;

private:
  int size_ = 0;
  std::vector<int> m_;
};

// Standard diagram data for the named types: linear chain for A, chain with
// one 4-bond for B, fork for D, the 3-4-3 chain for F4, a single 6-bond for
// G2, a single p-bond for I2(p), a cycle for ~A (infinite bond at ~A1), and
// the usual affine diagrams for ~B, ~C, ~D. Throws DomainError for G(de,e,r).
CoxeterMatrix coxeter_matrix(const GroupLabel& label);

} // namespace coxart

#endif
