#include "coxart/arrangement.hpp"

#include "coxart/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coxart {

Hyperplane Hyperplane::normalized(std::vector<long long> normal) {
  long long g = 0;
  for (long long x : normal) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) throw DomainError("hyperplane normal must be nonzero");
  for (long long& x : normal) x /= g;
  for (long long x : normal) {
    if (x == 0) continue;
    if (x < 0)
      for (long long& y : normal) y = -y;
    break;
  }
  return Hyperplane{std::move(normal)};
}

Rational Hyperplane::evaluate(const std::vector<Rational>& point) const {
  Rational s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i)
    s += Rational(normal[i]) * point[i];
  return s;
}

std::string Hyperplane::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    const long long c = normal[i];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c > 0 ? " + " : " - ";
    }
    const long long a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += "z" + std::to_string(i + 1);
  }
  if (out.empty()) out = "0";
  return out + " = 0";
}

Arrangement Arrangement::combinatorial_rank2(int atoms) {
  if (atoms < 0) throw DomainError("negative atom count");
  Arrangement a;
  a.dim = 2;
  a.rank2_atoms = atoms;
  return a;
}

Arrangement Arrangement::from_normals(
    int dim, std::vector<std::vector<long long>> normals) {
  Arrangement a;
  a.dim = dim;
  for (auto& v : normals) {
    if (static_cast<int>(v.size()) != dim)
      throw DomainError("normal vector length does not match ambient dim " +
                        std::to_string(dim));
    a.hyperplanes.push_back(Hyperplane::normalized(std::move(v)));
  }
  std::sort(a.hyperplanes.begin(), a.hyperplanes.end());
  a.hyperplanes.erase(std::unique(a.hyperplanes.begin(), a.hyperplanes.end()),
                      a.hyperplanes.end());
  return a;
}

Arrangement reflection_arrangement(const GroupLabel& label) {
  if (!label.is_finite_type())
    throw DomainError("no reflection arrangement for " + label.text() +
                      ": not a finite type");
  std::vector<std::vector<long long>> normals;
  auto unit = [](int dim, int i, long long c) {
    std::vector<long long> v(dim, 0);
    v[i] = c;
    return v;
  };
  switch (label.family) {
    case Family::A: {
      const int dim = label.n + 1;
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
          auto v = unit(dim, i, 1);
          v[j] = -1;
          normals.push_back(std::move(v));
        }
      return Arrangement::from_normals(dim, std::move(normals));
    }
    case Family::B: {
      const int dim = label.n;
      for (int i = 0; i < dim; ++i) normals.push_back(unit(dim, i, 1));
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
          for (int s : {1, -1}) {
            auto v = unit(dim, i, 1);
            v[j] = s;
            normals.push_back(std::move(v));
          }
      return Arrangement::from_normals(dim, std::move(normals));
    }
    case Family::D: {
      const int dim = label.n;
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
          for (int s : {1, -1}) {
            auto v = unit(dim, i, 1);
            v[j] = s;
            normals.push_back(std::move(v));
          }
      return Arrangement::from_normals(dim, std::move(normals));
    }
    case Family::F4: {
      for (int i = 0; i < 4; ++i) normals.push_back(unit(4, i, 1));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          for (int s : {1, -1}) {
            auto v = unit(4, i, 1);
            v[j] = s;
            normals.push_back(std::move(v));
          }
      for (int s2 : {1, -1})
        for (int s3 : {1, -1})
          for (int s4 : {1, -1})
            normals.push_back({1, s2, s3, s4});
      return Arrangement::from_normals(4, std::move(normals));
    }
    case Family::G2:
    case Family::I2:
      return Arrangement::combinatorial_rank2(label.n);
    default:
      throw DomainError("unsupported label");
  }
}

Arrangement read_arrangement(std::istream& in) {
  std::string line;
  int dim = -1;
  std::vector<std::vector<long long>> normals;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (dim < 0) {
      std::string kw;
      if (!(ls >> kw)) continue;  // skip leading blank lines
      if (kw != "dim" || !(ls >> dim) || dim < 1)
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected header `dim <n>`");
      continue;
    }
    std::vector<long long> v;
    long long x;
    while (ls >> x) v.push_back(x);
    if (!ls.eof())
      throw ParseError("line " + std::to_string(lineno) +
                       ": malformed integer entry");
    if (v.empty()) continue;
    if (static_cast<int>(v.size()) != dim)
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(dim) + " entries, got " +
                       std::to_string(v.size()));
    normals.push_back(std::move(v));
  }
  if (dim < 0) throw ParseError("missing `dim <n>` header");
  return Arrangement::from_normals(dim, std::move(normals));
}

Arrangement read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open arrangement file '" + path + "'");
  return read_arrangement(in);
}

std::string write_arrangement(const Arrangement& a) {
  if (a.is_combinatorial())
    throw DomainError("combinatorial rank-2 arrangements have no normal-"
                      "vector file form");
  std::ostringstream out;
  out << "dim " << a.dim << "\n";
  for (const auto& h : a.hyperplanes) {
    for (std::size_t i = 0; i < h.normal.size(); ++i)
      out << (i ? " " : "") << h.normal[i];
    out << "\n";
  }
  return out.str();
}

// ------------------------------------------------------------------
// Intersection lattice
// ------------------------------------------------------------------

int IntersectionLattice::top_index() const {
  int best = 0;
  for (std::size_t i = 1; i < flats.size(); ++i)
    if (flats[i].rank > flats[best].rank ||
        (flats[i].rank == flats[best].rank &&
         flats[i].mask > flats[best].mask))
      best = static_cast<int>(i);
  return best;
}

namespace {

void compute_mobius(std::vector<Flat>& flats) {
  std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.mask < b.mask;
  });
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (i == 0) {
      flats[i].mobius = 1;
      continue;
    }
    long long s = 0;
    for (std::size_t j = 0; j < i; ++j)
      if ((flats[j].mask & flats[i].mask) == flats[j].mask) s += flats[j].mobius;
    flats[i].mobius = -s;
  }
}

template <class Z>
IntersectionLattice build_lattice(const Arrangement& a) {
  const int m = static_cast<int>(a.hyperplanes.size());
  IntersectionLattice lat;
  lat.ambient_dim = a.dim;
  lat.atom_count = m;

  std::map<std::uint64_t, int> rank_of;
  struct Node {
    std::uint64_t mask;
    RankTracker<Z> basis;
  };
  std::vector<Node> frontier;
  rank_of[0] = 0;
  frontier.push_back({0, RankTracker<Z>(a.dim)});

  int level = 0;
  while (!frontier.empty()) {
    ++level;
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (int h = 0; h < m; ++h) {
        if (node.mask >> h & 1) continue;
        RankTracker<Z> basis = node.basis;
        basis.add(a.hyperplanes[h].normal);
        std::uint64_t cmask = node.mask | (1ULL << h);
        for (int h2 = 0; h2 < m; ++h2)
          if (!(cmask >> h2 & 1) && basis.in_span(a.hyperplanes[h2].normal))
            cmask |= 1ULL << h2;
        if (rank_of.emplace(cmask, level).second)
          next.push_back({cmask, std::move(basis)});
      }
    }
    frontier = std::move(next);
  }

  for (const auto& [mask, rank] : rank_of)
    lat.flats.push_back(Flat{mask, rank, 0});
  compute_mobius(lat.flats);
  return lat;
}

IntersectionLattice rank2_lattice(int atoms) {
  IntersectionLattice lat;
  lat.ambient_dim = 2;
  lat.atom_count = atoms;
  lat.flats.push_back(Flat{0, 0, 1});
  if (atoms == 1) {
    lat.flats.push_back(Flat{1, 1, -1});
    return lat;
  }
  for (int i = 0; i < atoms; ++i)
    lat.flats.push_back(Flat{1ULL << i, 1, -1});
  if (atoms >= 2) {
    std::uint64_t all = atoms == 64 ? ~0ULL : (1ULL << atoms) - 1;
    lat.flats.push_back(Flat{all, 2, atoms - 1});
  }
  return lat;
}

} // namespace

IntersectionLattice intersection_lattice(const Arrangement& a, int bound) {
  const long long count = a.hyperplane_count();
  const long long cap = std::min<long long>(bound, 64);
  if (count > cap)
    throw DomainError("arrangement has " + std::to_string(count) +
                      " hyperplanes, above the lattice bound " +
                      std::to_string(cap));
  if (a.is_combinatorial()) return rank2_lattice(*a.rank2_atoms);
  try {
    return build_lattice<long long>(a);
  } catch (const detail::ArithmeticOverflow&) {
    return build_lattice<BigInt>(a);
  }
}

IntPolynomial characteristic_polynomial(const IntersectionLattice& l) {
  IntPolynomial chi;
  for (const Flat& f : l.flats) chi.add_term(f.mobius, f.dim(l.ambient_dim));
  return chi;
}

IntPolynomial characteristic_polynomial(const Arrangement& a) {
  return characteristic_polynomial(intersection_lattice(a));
}

IntPolynomial poincare_polynomial(const IntersectionLattice& l) {
  IntPolynomial pi;
  for (const Flat& f : l.flats)
    pi.add_term(f.mobius < 0 ? -f.mobius : f.mobius, f.rank);

  // cross-check against (-t)^n chi(-1/t)
  const IntPolynomial chi = characteristic_polynomial(l);
  IntPolynomial sub;
  for (int k = 0; k <= l.ambient_dim; ++k) {
    const long long c = chi.coefficient(l.ambient_dim - k);
    sub.add_term(k % 2 == 0 ? c : -c, k);
  }
  if (!(pi == sub))
    throw std::logic_error("Poincare polynomial routes disagree");
  return pi;
}

IntPolynomial poincare_polynomial(const Arrangement& a) {
  return poincare_polynomial(intersection_lattice(a));
}

std::vector<long long> betti_numbers(const Arrangement& a) {
  return poincare_polynomial(a).coefficients();
}

SuspensionReport suspension_check(const Arrangement& a) {
  SuspensionReport r;
  r.hyperplanes = a.hyperplane_count();
  r.b1 = poincare_polynomial(a).coefficient(1);
  r.pass = r.b1 == r.hyperplanes;
  return r;
}

// ------------------------------------------------------------------
// Supersolvability
// ------------------------------------------------------------------

namespace {

class ModularChainSearch {
public:
  explicit ModularChainSearch(const IntersectionLattice& lat) : lat_(lat) {
    for (std::size_t i = 0; i < lat.flats.size(); ++i)
      index_of_[lat.flats[i].mask] = static_cast<int>(i);
    top_rank_ = lat.flats[lat.top_index()].rank;
    modular_.assign(lat.flats.size(), -1);
  }

  bool run() { return chain_from(0); }

private:
  int join(int i, int j) const {
    const std::uint64_t u = lat_.flats[i].mask | lat_.flats[j].mask;
    for (std::size_t k = 0; k < lat_.flats.size(); ++k)
      if ((lat_.flats[k].mask & u) == u) return static_cast<int>(k);
    throw std::logic_error("lattice join not found");
  }

  int meet(int i, int j) const {
    const std::uint64_t u = lat_.flats[i].mask & lat_.flats[j].mask;
    auto it = index_of_.find(u);
    if (it == index_of_.end())
      throw std::logic_error("lattice meet not found");
    return it->second;
  }

  bool modular(int i) {
    if (modular_[i] >= 0) return modular_[i] == 1;
    bool ok = true;
    for (std::size_t j = 0; j < lat_.flats.size() && ok; ++j)
      ok = lat_.flats[i].rank + lat_.flats[j].rank ==
           lat_.flats[join(i, static_cast<int>(j))].rank +
               lat_.flats[meet(i, static_cast<int>(j))].rank;
    modular_[i] = ok ? 1 : 0;
    return ok;
  }

  bool chain_from(int i) {
    const int r = lat_.flats[i].rank;
    if (r == top_rank_) return true;
    if (dead_.count(i)) return false;
    for (std::size_t j = 0; j < lat_.flats.size(); ++j) {
      if (lat_.flats[j].rank != r + 1) continue;
      if ((lat_.flats[j].mask & lat_.flats[i].mask) != lat_.flats[i].mask)
        continue;
      if (!modular(static_cast<int>(j))) continue;
      if (chain_from(static_cast<int>(j))) return true;
    }
    dead_.insert(i);
    return false;
  }

  const IntersectionLattice& lat_;
  std::map<std::uint64_t, int> index_of_;
  std::vector<signed char> modular_;
  std::set<int> dead_;
  int top_rank_ = 0;
};

} // namespace

bool is_fiber_type(const Arrangement& a) {
  IntersectionLattice lat = intersection_lattice(a);
  return ModularChainSearch(lat).run();
}

} // namespace coxart
