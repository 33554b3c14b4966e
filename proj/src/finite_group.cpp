#include "coxart/finite_group.hpp"

#include "coxart/errors.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

namespace coxart {
namespace {

GroupElement identity_perm(int degree) {
  GroupElement e(degree);
  for (int i = 0; i < degree; ++i) e[i] = i;
  return e;
}

GroupElement identity_signed(int degree) {
  GroupElement e(degree);
  for (int i = 0; i < degree; ++i) e[i] = i + 1;
  return e;
}

GroupElement transposition_signed(int degree, int i) {
  GroupElement e = identity_signed(degree);
  std::swap(e[i], e[i + 1]);
  return e;
}

// doubled 4x4 matrix of the reflection in v/2, v an integer vector with
// v.v = 4: M = I - (v v^T)/2, doubled: 2I - v v^T
GroupElement doubled_reflection(const std::array<int, 4>& v) {
  GroupElement m(16, 0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i * 4 + j] = (i == j ? 2 : 0) - v[i] * v[j];
  return m;
}

// doubled permutation/sign matrices for the integer-root reflections
GroupElement doubled_swap(int a, int b) {
  GroupElement m(16, 0);
  for (int i = 0; i < 4; ++i) m[i * 4 + i] = 2;
  m[a * 4 + a] = m[b * 4 + b] = 0;
  m[a * 4 + b] = m[b * 4 + a] = 2;
  return m;
}

GroupElement doubled_negate(int a) {
  GroupElement m(16, 0);
  for (int i = 0; i < 4; ++i) m[i * 4 + i] = (i == a ? -2 : 2);
  return m;
}

} // namespace

FiniteGroupModel::FiniteGroupModel(const GroupLabel& label) : label_(label) {
  if (!label.is_finite_type())
    throw DomainError("cannot enumerate " + label.text() +
                      ": not a finite type");
  switch (label.family) {
    case Family::A: {
      kind_ = ModelKind::Permutation;
      degree_ = label.n + 1;
      for (int i = 0; i + 1 < degree_; ++i) {
        GroupElement g = identity_perm(degree_);
        std::swap(g[i], g[i + 1]);
        generators_.push_back(std::move(g));
      }
      break;
    }
    case Family::B: {
      kind_ = ModelKind::SignedPermutation;
      degree_ = label.n;
      for (int i = 0; i + 1 < degree_; ++i)
        generators_.push_back(transposition_signed(degree_, i));
      GroupElement g = identity_signed(degree_);
      g[degree_ - 1] = -degree_;  // sign flip on the last coordinate
      generators_.push_back(std::move(g));
      break;
    }
    case Family::D: {
      kind_ = ModelKind::EvenSignedPermutation;
      degree_ = label.n;
      for (int i = 0; i + 1 < degree_; ++i)
        generators_.push_back(transposition_signed(degree_, i));
      // e_{n-1} -> -e_n, e_n -> -e_{n-1}
      GroupElement g = identity_signed(degree_);
      g[degree_ - 2] = -degree_;
      g[degree_ - 1] = -(degree_ - 1);
      generators_.push_back(std::move(g));
      break;
    }
    case Family::F4: {
      kind_ = ModelKind::HalfIntegerMatrix;
      degree_ = 4;
      // simple roots e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2
      generators_.push_back(doubled_swap(1, 2));
      generators_.push_back(doubled_swap(2, 3));
      generators_.push_back(doubled_negate(3));
      generators_.push_back(doubled_reflection({1, -1, -1, -1}));
      break;
    }
    case Family::G2:
    case Family::I2: {
      kind_ = ModelKind::Dihedral;
      degree_ = label.n;  // p (6 for G2)
      generators_.push_back({0, 1});
      generators_.push_back({1, 1});
      break;
    }
    default:
      throw DomainError("unsupported finite type");
  }
}

GroupElement FiniteGroupModel::identity() const {
  switch (kind_) {
    case ModelKind::Permutation:
      return identity_perm(degree_);
    case ModelKind::SignedPermutation:
    case ModelKind::EvenSignedPermutation:
      return identity_signed(degree_);
    case ModelKind::HalfIntegerMatrix: {
      GroupElement m(16, 0);
      for (int i = 0; i < 4; ++i) m[i * 4 + i] = 2;
      return m;
    }
    case ModelKind::Dihedral:
      return {0, 0};
  }
  return {};
}

GroupElement FiniteGroupModel::multiply(const GroupElement& a,
                                        const GroupElement& b) const {
  switch (kind_) {
    case ModelKind::Permutation: {
      GroupElement c(degree_);
      for (int i = 0; i < degree_; ++i) c[i] = b[a[i]];
      return c;
    }
    case ModelKind::SignedPermutation:
    case ModelKind::EvenSignedPermutation: {
      GroupElement c(degree_);
      for (int i = 0; i < degree_; ++i) {
        const int img = b[std::abs(a[i]) - 1];
        c[i] = a[i] < 0 ? -img : img;
      }
      return c;
    }
    case ModelKind::HalfIntegerMatrix: {
      // composite map x -> b(a(x)) has matrix B*A; entries stay in (1/2)Z
      GroupElement c(16, 0);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          int s = 0;
          for (int k = 0; k < 4; ++k) s += b[i * 4 + k] * a[k * 4 + j];
          assert(s % 2 == 0);
          c[i * 4 + j] = s / 2;
        }
      return c;
    }
    case ModelKind::Dihedral: {
      // x -> a then b: r = b.r + (-1)^{b.f} a.r, f = a.f xor b.f
      const int p = degree_;
      int r = b[0] + (b[1] ? -a[0] : a[0]);
      r %= p;
      if (r < 0) r += p;
      return {r, a[1] ^ b[1]};
    }
  }
  return {};
}

GroupElement FiniteGroupModel::inverse(const GroupElement& a) const {
  switch (kind_) {
    case ModelKind::Permutation: {
      GroupElement c(degree_);
      for (int i = 0; i < degree_; ++i) c[a[i]] = i;
      return c;
    }
    case ModelKind::SignedPermutation:
    case ModelKind::EvenSignedPermutation: {
      GroupElement c(degree_);
      for (int i = 0; i < degree_; ++i) {
        const int j = std::abs(a[i]) - 1;
        c[j] = a[i] < 0 ? -(i + 1) : (i + 1);
      }
      return c;
    }
    case ModelKind::HalfIntegerMatrix: {
      // orthogonal, so the inverse is the transpose
      GroupElement c(16);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c[i * 4 + j] = a[j * 4 + i];
      return c;
    }
    case ModelKind::Dihedral: {
      if (a[1]) return a;  // reflections are involutions
      const int p = degree_;
      return {a[0] == 0 ? 0 : p - a[0], 0};
    }
  }
  return {};
}

std::string FiniteGroupModel::model_description() const {
  switch (kind_) {
    case ModelKind::Permutation:
      return "permutations of {1.." + std::to_string(degree_) + "}";
    case ModelKind::SignedPermutation:
      return "signed permutations of {1.." + std::to_string(degree_) + "}";
    case ModelKind::EvenSignedPermutation:
      return "even-sign signed permutations of {1.." +
             std::to_string(degree_) + "}";
    case ModelKind::HalfIntegerMatrix:
      return "4x4 orthogonal matrices over (1/2)Z (entries stored doubled)";
    case ModelKind::Dihedral:
      return "dihedral pairs (rotation mod " + std::to_string(degree_) +
             ", flip)";
  }
  return "";
}

std::string FiniteGroupModel::element_text(const GroupElement& e) const {
  std::ostringstream out;
  if (kind_ == ModelKind::HalfIntegerMatrix) {
    out << "[";
    for (int i = 0; i < 4; ++i) {
      if (i) out << "; ";
      for (int j = 0; j < 4; ++j) {
        if (j) out << " ";
        const int v = e[i * 4 + j];
        if (v % 2 == 0)
          out << v / 2;
        else
          out << v << "/2";
      }
    }
    out << "]";
    return out.str();
  }
  if (kind_ == ModelKind::Dihedral) {
    out << (e[1] ? "flip" : "rot") << "(" << e[0] << ")";
    return out.str();
  }
  out << "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out << " ";
    out << (kind_ == ModelKind::Permutation ? e[i] + 1 : e[i]);
  }
  out << "]";
  return out.str();
}

EnumeratedGroup enumerate_group(const GroupLabel& label) {
  FiniteGroupModel model(label);
  std::set<GroupElement> seen;
  std::deque<GroupElement> queue;
  seen.insert(model.identity());
  queue.push_back(model.identity());
  while (!queue.empty()) {
    GroupElement e = std::move(queue.front());
    queue.pop_front();
    for (const GroupElement& g : model.generators()) {
      GroupElement f = model.multiply(e, g);
      if (seen.insert(f).second) queue.push_back(std::move(f));
    }
  }
  EnumeratedGroup out{std::move(model), {seen.begin(), seen.end()}};
  return out;
}

ReflectionSet reflections(const GroupLabel& label) {
  FiniteGroupModel model(label);
  std::set<GroupElement> seen(model.generators().begin(),
                              model.generators().end());
  std::deque<GroupElement> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    GroupElement t = std::move(queue.front());
    queue.pop_front();
    for (const GroupElement& g : model.generators()) {
      // generators are involutions, so g t g is the conjugate
      GroupElement c = model.multiply(model.multiply(g, t), g);
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
  }
  ReflectionSet out{std::move(model), {seen.begin(), seen.end()}};
  return out;
}

GroupElement coxeter_image(const std::vector<int>& word,
                           const FiniteGroupModel& model) {
  const int k = static_cast<int>(model.generators().size());
  GroupElement acc = model.identity();
  for (int letter : word) {
    const int idx = std::abs(letter);
    if (idx < 1 || idx > k)
      throw DomainError("letter index " + std::to_string(idx) +
                        " outside the rank-" + std::to_string(k) +
                        " alphabet of " + model.label().text());
    acc = model.multiply(acc, model.generators()[idx - 1]);
  }
  return acc;
}

bool is_pure(const std::vector<int>& word, const FiniteGroupModel& model) {
  return coxeter_image(word, model) == model.identity();
}

} // namespace coxart
