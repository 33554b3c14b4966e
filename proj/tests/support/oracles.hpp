#ifndef COXART_TESTS_ORACLES_HPP
#define COXART_TESTS_ORACLES_HPP

#include "coxart/arrangement.hpp"
#include "coxart/polynomial.hpp"
#include "coxart/word.hpp"

#include <cstddef>
#include <map>
#include <random>

namespace coxart::testing {

// Whitney subset-rank expansion of the characteristic polynomial:
// sum over subsets S of (-1)^{|S|} t^{n - rank(S)}. Deliberately does not
// share any code with the lattice route: ranks come from a local Bareiss
// elimination. Requires |hyperplanes| <= 20.
IntPolynomial whitney_characteristic(const Arrangement& a);

// Bounded BFS over free-reduced words: can |u| be turned into |v| using
// braid-relator subword replacements and cancelling-pair insertions?
// A positive answer certifies equality in the braid group on n strands
// without touching the normal-form engine.
bool rewrite_connected(const Word& u, const Word& v, int n,
                       std::size_t max_len, std::size_t node_budget);

// Unreduced Burau matrix of a braid word, exact over Z[t, t^-1].
// Faithful for n = 3, so equal images there certify equality and distinct
// images certify inequality; for larger n equal images of equal braids is
// still a necessary condition.
using Laurent = std::map<int, long long>;  // degree -> coefficient
using BurauMatrix = std::vector<std::vector<Laurent>>;

BurauMatrix burau_image(const Word& w, int n);

Word random_braid_word(std::mt19937& rng, int n, int len);

} // namespace coxart::testing

#endif
