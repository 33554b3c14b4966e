#include "coxart/coxeter.hpp"

#include "coxart/errors.hpp"

namespace coxart {

CoxeterMatrix::CoxeterMatrix(int size) : size_(size), m_(size * size, 2) {
  for (int i = 0; i < size; ++i) m_[i * size_ + i] = 1;
}

void CoxeterMatrix::set(int i, int j, int value) {
  m_[i * size_ + j] = value;
  m_[j * size_ + i] = value;
}

bool CoxeterMatrix::well_formed() const {
  for (int i = 0; i < size_; ++i) {
    if (at(i, i) != 1) return false;
    for (int j = 0; j < size_; ++j) {
      if (at(i, j) != at(j, i)) return false;
      if (i != j && at(i, j) != kInfinity && at(i, j) < 2) return false;
    }
  }
  return true;
}

namespace {

CoxeterMatrix chain(int k, int last_bond = 3) {
  CoxeterMatrix m(k);
  for (int i = 0; i + 1 < k; ++i) m.set(i, i + 1, 3);
  if (k >= 2) m.set(k - 2, k - 1, last_bond);
  return m;
}

} // namespace

CoxeterMatrix coxeter_matrix(const GroupLabel& label) {
  const int n = label.n;
  switch (label.family) {
    case Family::A:
      return chain(n);
    case Family::B:
      return chain(n, 4);
    case Family::D: {
      // fork: chain on 1..n-1 with node n attached to node n-2
      CoxeterMatrix m(n);
      for (int i = 0; i + 1 < n - 1; ++i) m.set(i, i + 1, 3);
      if (n >= 3) m.set(n - 3, n - 1, 3);
      return m;
    }
    case Family::F4: {
      CoxeterMatrix m(4);
      m.set(0, 1, 3);
      m.set(1, 2, 4);
      m.set(2, 3, 3);
      return m;
    }
    case Family::G2: {
      CoxeterMatrix m(2);
      m.set(0, 1, 6);
      return m;
    }
    case Family::I2: {
      CoxeterMatrix m(2);
      m.set(0, 1, n);
      return m;
    }
    case Family::AffA: {
      if (n == 1) {
        CoxeterMatrix m(2);
        m.set(0, 1, CoxeterMatrix::kInfinity);
        return m;
      }
      CoxeterMatrix m(n + 1);  // cycle on n+1 nodes
      for (int i = 0; i < n; ++i) m.set(i, i + 1, 3);
      m.set(0, n, 3);
      return m;
    }
    case Family::AffB: {
      // fork 0,1 -> 2, chain 2..n-1, 4-bond (n-1,n); n >= 3
      CoxeterMatrix m(n + 1);
      m.set(0, 2, 3);
      m.set(1, 2, 3);
      for (int i = 2; i + 1 < n; ++i) m.set(i, i + 1, 3);
      m.set(n - 1, n, 4);
      return m;
    }
    case Family::AffC: {
      // chain with 4-bonds at both ends; n >= 2
      CoxeterMatrix m(n + 1);
      m.set(0, 1, 4);
      for (int i = 1; i + 1 < n; ++i) m.set(i, i + 1, 3);
      m.set(n - 1, n, 4);
      return m;
    }
    case Family::AffD: {
      // ~D3 coincides with ~A3 (the 4-cycle)
      if (n == 3) return coxeter_matrix({Family::AffA, 3});
      // forks at both ends of the chain 2..n-2; n >= 4
      CoxeterMatrix m(n + 1);
      m.set(0, 2, 3);
      m.set(1, 2, 3);
      for (int i = 2; i + 1 < n - 1; ++i) m.set(i, i + 1, 3);
      m.set(n - 2, n - 1, 3);
      m.set(n - 2, n, 3);
      return m;
    }
    case Family::Gder:
      throw DomainError("complex reflection type " + label.text() +
                        " has no Coxeter matrix");
  }
  throw DomainError("unsupported label");
}

} // namespace coxart
