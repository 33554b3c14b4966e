#include "coxart/errors.hpp"
#include "coxart/lgroups.hpp"

#include <doctest.h>

#include <random>

using namespace coxart;

TEST_SUITE_BEGIN("ltheory");

TEST_CASE("l_point is 4-periodic: Z, 0, Z/2, 0") {
  CHECK(l_point(0) == AbelianGroup::free_abelian(1));
  CHECK(l_point(1) == AbelianGroup::trivial());
  CHECK(l_point(2) == AbelianGroup::cyclic(2));
  CHECK(l_point(3) == AbelianGroup::trivial());
  CHECK(l_point(5) == AbelianGroup::trivial());
  CHECK(l_point(6) == l_point(2));
  CHECK(l_point(-2) == AbelianGroup::cyclic(2));
  CHECK(l_point(-1) == AbelianGroup::trivial());
}

TEST_CASE("descriptor serialization") {
  CHECK(AbelianGroup::trivial().to_text() == "0");
  CHECK(AbelianGroup::free_abelian(1).to_text() == "Z");
  CHECK(AbelianGroup::free_abelian(6).to_text() == "Z^6");
  CHECK(AbelianGroup::cyclic(2).to_text() == "Z/2");
  CHECK(power(AbelianGroup::cyclic(2), 24).to_text() == "(Z/2)^24");
  CHECK(direct_sum(AbelianGroup::free_abelian(2), AbelianGroup::cyclic(4))
            .to_text() == "Z^2 (+) Z/4");
}

TEST_CASE("descriptor algebra: canonical, commutative, associative") {
  const AbelianGroup a{1, {4, 2}};
  CHECK(a.canonical().torsion == std::vector<long long>{2, 4});
  CHECK(a.canonical().canonical() == a.canonical());

  std::mt19937 rng(8181);
  std::uniform_int_distribution<long long> rank(0, 3), ord(2, 5);
  auto random_group = [&] {
    AbelianGroup g{rank(rng), {}};
    const long long k = rank(rng);
    for (long long i = 0; i < k; ++i) g.torsion.push_back(ord(rng));
    return g.canonical();
  };
  for (int t = 0; t < 100; ++t) {
    const AbelianGroup x = random_group(), y = random_group(),
                       z = random_group();
    CHECK(direct_sum(x, y) == direct_sum(y, x));
    CHECK(direct_sum(direct_sum(x, y), z) == direct_sum(x, direct_sum(y, z)));
    CHECK(direct_sum(x, AbelianGroup::trivial()) == x);
  }
}

TEST_CASE("wedge_homology adds h_{i-1} in N copies") {
  const std::array<AbelianGroup, 4> lpt{l_point(0), l_point(1), l_point(2),
                                        l_point(3)};
  CHECK(wedge_homology(lpt, 0, 2) == l_point(2));
  CHECK(wedge_homology(lpt, 6, 1) == AbelianGroup::free_abelian(6));
  CHECK(wedge_homology(lpt, 24, 3) == power(AbelianGroup::cyclic(2), 24));
  CHECK(wedge_homology(lpt, 5, 0) == AbelianGroup::free_abelian(1));
  CHECK(wedge_homology(lpt, 5, 2) == AbelianGroup::cyclic(2));
}

TEST_CASE("l_groups tables") {
  const LTable d5 = l_groups(parse_label("D5"));
  CHECK(d5.hyperplane_count == 20);
  CHECK(d5.groups[1] == AbelianGroup::free_abelian(20));

  const LTable i27 = l_groups(parse_label("I2(7)"));
  CHECK(i27.hyperplane_count == 7);
  CHECK(i27.groups[3] == power(AbelianGroup::cyclic(2), 7));

  const LTable a1 = l_groups(parse_label("A1"));
  CHECK(a1.hyperplane_count == 1);
  CHECK(a1.groups[1] == AbelianGroup::free_abelian(1));

  for (const char* text : {"A4", "B3", "D4", "F4", "G2", "I2(11)"}) {
    INFO(text);
    const LTable t = l_groups(parse_label(text));
    CHECK(t.groups[0] == AbelianGroup::free_abelian(1));
    CHECK(t.groups[2] == AbelianGroup::cyclic(2));
    CHECK(t.groups[1].torsion.empty());
    CHECK(t.groups[3].free_rank == 0);
  }
}

TEST_CASE("l_groups equals the wedge formula over a full period") {
  const std::array<AbelianGroup, 4> lpt{l_point(0), l_point(1), l_point(2),
                                        l_point(3)};
  for (const char* text : {"A2", "B4", "D3", "F4", "G2", "I2(5)"}) {
    INFO(text);
    const LTable t = l_groups(parse_label(text));
    for (long long i = 0; i <= 7; ++i)
      CHECK(t.groups[i % 4] == wedge_homology(lpt, t.hyperplane_count, i));
  }
}

TEST_CASE("l_groups rejects labels outside the finite-type table") {
  CHECK_THROWS_WITH_AS(l_groups(parse_label("~C3")),
                       doctest::Contains("finite types"), DomainError);
  CHECK_THROWS_AS(l_groups(parse_label("~A2")), DomainError);
  CHECK_THROWS_AS(l_groups(parse_label("G(4,2,3)")), DomainError);
}

TEST_CASE("k-vanishing reports") {
  const KVanishingReport b4 = k_vanishing_report(parse_label("B4"));
  CHECK(b4.holds);
  CHECK(b4.vanishing_groups.size() == 3);

  const KVanishingReport c3 = k_vanishing_report(parse_label("~C3"));
  CHECK(c3.holds);

  const KVanishingReport g = k_vanishing_report(parse_label("G(4,2,3)"));
  CHECK(g.holds);

  CHECK_THROWS_AS(k_vanishing_report(parse_label("~D4")), DomainError);
}

TEST_SUITE_END();
