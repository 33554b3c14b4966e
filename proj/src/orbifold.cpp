#include "coxart/orbifold.hpp"

#include "coxart/errors.hpp"
#include "coxart/garside.hpp"

#include <algorithm>
#include <set>

namespace coxart {

Presentation OrbifoldPresentation::presentation() const {
  Presentation p;
  p.generators = alphabet.letters;
  for (const auto& rel : relations) {
    std::vector<int> lhs, rhs;
    for (const Letter& l : rel.lhs.letters)
      lhs.push_back((l.index + 1) * l.sign);
    for (const Letter& l : rel.rhs.letters)
      rhs.push_back((l.index + 1) * l.sign);
    p.relations.push_back({std::move(lhs), std::move(rhs)});
  }
  return p;
}

OrbifoldPresentation orbifold_presentation(OrbifoldKind kind, int n, int q) {
  if (n < 2) throw DomainError("orbifold braid group needs n >= 2 strands");
  if (q < 2) throw DomainError("cone point order must be q >= 2");

  OrbifoldPresentation out;
  out.kind = kind;
  out.strands = n;
  out.cone_order = q;
  out.alphabet = kind == OrbifoldKind::Source
                     ? Alphabet::orbifold_source(n, q)
                     : Alphabet::orbifold_target(n, q);

  const Alphabet& al = out.alphabet;
  const int x = al.index_of("x");
  auto a = [&](int i) { return al.index_of("a" + std::to_string(i)); };
  auto word = [&](std::initializer_list<int> idx) {
    Word w{al, {}};
    for (int i : idx) w.append(i, 1);
    return w;
  };

  // x^q = 1
  Word xq{al, {}};
  xq.append(x, 1, q);
  out.relations.push_back({"torsion", std::move(xq), Word{al, {}}});

  // x a1 x a1 = a1 x a1 x
  out.relations.push_back(
      {"x-braid", word({x, a(1), x, a(1)}), word({a(1), x, a(1), x})});

  // a_i a_{i+1} a_i = a_{i+1} a_i a_{i+1}
  for (int i = 1; i + 1 <= n - 1; ++i)
    out.relations.push_back({"a-braid",
                             word({a(i), a(i + 1), a(i)}),
                             word({a(i + 1), a(i), a(i + 1)})});

  // a_i a_j = a_j a_i for |i-j| > 1
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      out.relations.push_back(
          {"a-commute", word({a(i), a(j)}), word({a(j), a(i)})});

  if (kind == OrbifoldKind::Source) {
    const int p = al.index_of("p");
    out.relations.push_back({"p-braid",
                             word({p, a(n - 1), p, a(n - 1)}),
                             word({a(n - 1), p, a(n - 1), p})});
  }
  return out;
}

Word embed(const Word& w, int n) {
  const Alphabet expect_any = Alphabet::orbifold_source(n, 2);
  if (w.alphabet.letters != expect_any.letters)
    throw DomainError("word is not over the source alphabet x,a1..a" +
                      std::to_string(n - 1) + ",p");
  const int q = w.alphabet.torsion[w.alphabet.index_of("x")];
  const Alphabet target = Alphabet::orbifold_target(n + 1, q);

  Word out{target, {}};
  const int an = target.index_of("a" + std::to_string(n));
  for (const Letter& l : w.letters) {
    const std::string& name = w.alphabet.letters[l.index];
    if (name == "p") {
      out.append(an, l.sign, 2);
    } else {
      out.append(target.index_of(name), l.sign);
    }
  }
  return out;
}

namespace {

// maps a two-adjacent-generator word a_k, a_{k+1} into B_3 as a1, a2
Word to_b3(const Word& w, int low_index_1based) {
  const Alphabet b3 = Alphabet::braid(3);
  Word out{b3, {}};
  for (const Letter& l : w.letters) {
    const std::string& name = w.alphabet.letters[l.index];
    const int j = std::stoi(name.substr(1));
    out.append(j - low_index_1based, l.sign);
  }
  return out;
}

} // namespace

EmbeddingReport verify_embedding_relators(int n, int q) {
  EmbeddingReport report;
  report.strands = n;
  report.cone_order = q;

  const OrbifoldPresentation source =
      orbifold_presentation(OrbifoldKind::Source, n, q);
  const OrbifoldPresentation target =
      orbifold_presentation(OrbifoldKind::Target, n + 1, q);

  report.pass = true;
  for (const OrbifoldRelation& rel : source.relations) {
    RelatorCertificate cert;
    cert.family = rel.family;
    cert.source_lhs = rel.lhs;
    cert.source_rhs = rel.rhs;
    cert.image_lhs = embed(rel.lhs, n);
    cert.image_rhs = embed(rel.rhs, n);
    cert.pass = false;

    // certificate 1: the image pair is a target relation verbatim, or the
    // relator image collapses under free/torsion reduction
    bool syntactic = false;
    for (const OrbifoldRelation& trel : target.relations) {
      if ((cert.image_lhs.same_letters(trel.lhs) &&
           cert.image_rhs.same_letters(trel.rhs)) ||
          (cert.image_lhs.same_letters(trel.rhs) &&
           cert.image_rhs.same_letters(trel.lhs))) {
        syntactic = true;
        break;
      }
    }
    if (!syntactic &&
        torsion_reduce(cert.image_lhs.concat(cert.image_rhs.inverse()))
            .empty())
      syntactic = true;

    if (syntactic) {
      cert.certificate = "syntactic";
      cert.pass = true;
    } else {
      // certificate 2: x-free words in two adjacent a-generators are
      // decided in B_3, which maps onto the subgroup they generate
      std::set<int> indices;
      bool x_free = true;
      for (const Word* w : {&cert.image_lhs, &cert.image_rhs})
        for (const Letter& l : w->letters) {
          const std::string& name = w->alphabet.letters[l.index];
          if (name[0] != 'a') {
            x_free = false;
          } else {
            indices.insert(std::stoi(name.substr(1)));
          }
        }
      if (x_free && !indices.empty() &&
          *indices.rbegin() - *indices.begin() <= 1) {
        const int low = *indices.begin();
        Word u = to_b3(cert.image_lhs, low);
        Word v = to_b3(cert.image_rhs, low);
        cert.certificate = "garside-b3";
        cert.pass = braid_equal(u, v, 3);
        cert.b3_pair = {std::move(u), std::move(v)};
      } else {
        cert.certificate = "none";
      }
    }
    report.pass = report.pass && cert.pass;
    report.relators.push_back(std::move(cert));
  }
  return report;
}

std::vector<FadellNeuwirthLevel> fadell_neuwirth_tower(
    int n, const std::string& surface) {
  if (n < 1) throw DomainError("tower needs n >= 1 strands");
  std::vector<FadellNeuwirthLevel> levels;
  for (int i = 1; i <= n; ++i) {
    FadellNeuwirthLevel level;
    level.index = i;
    if (i == 1) {
      level.space = "PB_1(" + surface + ") = " + surface;
    } else {
      level.space = "PB_" + std::to_string(i) + "(" + surface + ")";
      level.base = "PB_" + std::to_string(i - 1) + "(" + surface + ")";
      level.fiber = surface + " minus " + std::to_string(i - 1) +
                    (i == 2 ? " point" : " points");
      level.is_fibration = true;
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

} // namespace coxart
