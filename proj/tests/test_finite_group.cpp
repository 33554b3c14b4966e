#include "coxart/coxeter.hpp"
#include "coxart/errors.hpp"
#include "coxart/finite_group.hpp"
#include "coxart/presentation.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace coxart;

namespace {

std::vector<GroupLabel> finite_labels() {
  std::vector<GroupLabel> all;
  for (int n = 1; n <= 5; ++n) all.push_back({Family::A, n});
  for (int n = 2; n <= 5; ++n) all.push_back({Family::B, n});
  for (int n = 2; n <= 5; ++n) all.push_back({Family::D, n});
  all.push_back({Family::F4, 4});
  all.push_back({Family::G2, 6});
  for (int p : {3, 4, 5, 8}) all.push_back({Family::I2, p});
  return all;
}

std::vector<int> random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> w;
  for (int i = 0; i < len; ++i) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return w;
}

} // namespace

TEST_SUITE_BEGIN("finite_group");

TEST_CASE("enumeration sizes match the order formulas") {
  CHECK(enumerate_group(parse_label("A2")).order() == 6);
  CHECK(enumerate_group(parse_label("I2(5)")).order() == 10);
  for (const GroupLabel& l : finite_labels()) {
    INFO(l.text());
    CHECK(enumerate_group(l).order() == coxeter_order_formula(l));
  }
}

TEST_CASE("F4 closure lands on 1152 elements over (1/2)Z") {
  const EnumeratedGroup g = enumerate_group(parse_label("F4"));
  CHECK(g.order() == 1152);
  CHECK(g.model.kind() == ModelKind::HalfIntegerMatrix);
}

TEST_CASE("enumeration rejects infinite and complex types") {
  CHECK_THROWS_AS(enumerate_group(parse_label("~A2")), DomainError);
  CHECK_THROWS_AS(enumerate_group(parse_label("~C3")), DomainError);
  CHECK_THROWS_AS(enumerate_group(parse_label("G(4,2,3)")), DomainError);
}

TEST_CASE("element list is sorted, closed under product and inverse") {
  for (const char* text : {"A3", "B3", "D3", "I2(7)", "G2"}) {
    INFO(text);
    const EnumeratedGroup g = enumerate_group(parse_label(text));
    CHECK(std::is_sorted(g.elements.begin(), g.elements.end()));
    const std::set<GroupElement> all(g.elements.begin(), g.elements.end());
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<std::size_t> pick(0, g.elements.size() - 1);
    for (int t = 0; t < 50; ++t) {
      const GroupElement& a = g.elements[pick(rng)];
      const GroupElement& b = g.elements[pick(rng)];
      CHECK(all.count(g.model.multiply(a, b)) == 1);
      CHECK(all.count(g.model.inverse(a)) == 1);
      CHECK(g.model.multiply(a, g.model.inverse(a)) == g.model.identity());
    }
  }
}

TEST_CASE("generator images satisfy the Coxeter matrix relations") {
  for (const GroupLabel& l : finite_labels()) {
    INFO(l.text());
    const FiniteGroupModel model(l);
    const CoxeterMatrix m = coxeter_matrix(l);
    const auto& gens = model.generators();
    REQUIRE(static_cast<int>(gens.size()) == m.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const int mij = m.at(static_cast<int>(i), static_cast<int>(j));
        GroupElement prod = model.identity();
        for (int k = 0; k < mij; ++k) {
          prod = model.multiply(prod, gens[i]);
          prod = model.multiply(prod, gens[j]);
        }
        CHECK(prod == model.identity());
        // and no smaller power of the pair product is trivial
        if (i != j) {
          GroupElement partial = model.multiply(gens[i], gens[j]);
          int order = 1;
          while (!(partial == model.identity())) {
            partial = model.multiply(partial,
                                     model.multiply(gens[i], gens[j]));
            ++order;
          }
          CHECK(order == mij);
        }
      }
  }
}

TEST_CASE("reflection counts match the closed forms") {
  CHECK(reflections(parse_label("F4")).count() == 24);
  CHECK(reflections(parse_label("A3")).count() == 6);
  CHECK(reflections(parse_label("B3")).count() == 9);
  for (const GroupLabel& l : finite_labels()) {
    INFO(l.text());
    CHECK(reflections(l).count() == reflection_count_formula(l));
  }
}

TEST_CASE("reflections are involutions closed under conjugation") {
  for (const char* text : {"A3", "B3", "D4", "I2(5)"}) {
    INFO(text);
    const ReflectionSet r = reflections(parse_label(text));
    const std::set<GroupElement> all(r.elements.begin(), r.elements.end());
    for (const GroupElement& t : r.elements) {
      CHECK(r.model.multiply(t, t) == r.model.identity());
      for (const GroupElement& g : r.model.generators())
        CHECK(all.count(r.model.multiply(r.model.multiply(g, t), g)) == 1);
    }
  }
}

TEST_CASE("coxeter_image basics") {
  const FiniteGroupModel a2(parse_label("A2"));
  CHECK(coxeter_image({}, a2) == a2.identity());
  CHECK(coxeter_image({1, 1}, a2) == a2.identity());
  CHECK(coxeter_image({1, 2, 1, 2, 1, 2}, a2) == a2.identity());
  CHECK(coxeter_image({1}, a2) != a2.identity());
  // inverse letters hit the same involution
  CHECK(coxeter_image({-1}, a2) == coxeter_image({1}, a2));
  CHECK_THROWS_AS(coxeter_image({3}, a2), DomainError);
}

TEST_CASE("coxeter_image is a homomorphism on random words") {
  std::mt19937 rng(77001);
  for (const char* text : {"A3", "B3", "I2(6)"}) {
    const FiniteGroupModel model(parse_label(text));
    const int rank = static_cast<int>(model.generators().size());
    for (int t = 0; t < 60; ++t) {
      std::vector<int> u = random_word(rng, rank, t % 9);
      std::vector<int> v = random_word(rng, rank, (t * 7) % 11);
      std::vector<int> uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      CHECK(coxeter_image(uv, model) ==
            model.multiply(coxeter_image(u, model), coxeter_image(v, model)));
    }
  }
}

TEST_CASE("is_pure recognizes kernel elements") {
  const FiniteGroupModel a2(parse_label("A2"));
  CHECK(is_pure({1, 1}, a2));
  CHECK(!is_pure({1}, a2));
  // a1 a2 a1 a2^-1 a1^-1 a2^-1 maps to (s1 s2)^3 = 1 in S_3
  CHECK(is_pure({1, 2, 1, -2, -1, -2}, a2));
}

TEST_SUITE_END();
