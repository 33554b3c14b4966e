#ifndef COXART_FINITE_GROUP_HPP
#define COXART_FINITE_GROUP_HPP

#include "coxart/label.hpp"

#include <string>
#include <vector>

namespace coxart {

// Concrete faithful models of the finite reflection groups, all over exact
// integer data:
//   A_n  -- permutations of {1..n+1}
//   B_n  -- signed permutations of {1..n}
//   D_n  -- even-sign signed permutations
//   F4   -- 4x4 orthogonal matrices with entries in (1/2)Z, stored doubled
//   G2, I2(p) -- dihedral pairs (rotation index mod p, flip bit)
enum class ModelKind {
  Permutation,
  SignedPermutation,
  EvenSignedPermutation,
  HalfIntegerMatrix,
  Dihedral
};

// An element is its canonical key: the image tuple (permutations), the
// doubled matrix entries row-major (F4), or the (rotation, flip) pair.
using GroupElement = std::vector<int>;

class FiniteGroupModel {
public:
  // Builds the model for a finite-type label without enumerating it.
  // Throws DomainError for affine or G(de,e,r) labels.
  explicit FiniteGroupModel(const GroupLabel& label);

  const GroupLabel& label() const { return label_; }
  ModelKind kind() const { return kind_; }
  const std::vector<GroupElement>& generators() const { return generators_; }

  GroupElement identity() const;
  // The map "apply a, then b".
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;

  std::string model_description() const;
  std::string element_text(const GroupElement& e) const;

private:
  GroupLabel label_;
  ModelKind kind_;
  int degree_ = 0;  // permutation degree / matrix size / p for dihedral
  std::vector<GroupElement> generators_;
};

// BFS closure from the generators; elements returned sorted by image tuple.
// The sizes must land exactly on the standard order formulas.
struct EnumeratedGroup {
  FiniteGroupModel model;
  std::vector<GroupElement> elements;  // sorted, deterministic

  long long order() const { return static_cast<long long>(elements.size()); }
};

EnumeratedGroup enumerate_group(const GroupLabel& label);

// All conjugates of the Coxeter generators, closed under conjugation by
// generators; the count equals the closed-form hyperplane count.
struct ReflectionSet {
  FiniteGroupModel model;
  std::vector<GroupElement> elements;  // sorted, deterministic

  long long count() const { return static_cast<long long>(elements.size()); }
};

ReflectionSet reflections(const GroupLabel& label);

// Image of an Artin word under a_i -> s_i (inverse letters hit the same
// involution). Letters are signed 1-based generator indices.
GroupElement coxeter_image(const std::vector<int>& word,
                           const FiniteGroupModel& model);

// True iff the word maps to the identity of the Coxeter group.
bool is_pure(const std::vector<int>& word, const FiniteGroupModel& model);

} // namespace coxart

#endif
