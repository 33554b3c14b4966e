#include "coxart/jsonio.hpp"

namespace coxart {

using nlohmann::json;

namespace {

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::I2: return "I2";
    case Family::AffA: return "~A";
    case Family::AffB: return "~B";
    case Family::AffC: return "~C";
    case Family::AffD: return "~D";
    case Family::Gder: return "G(de,e,r)";
  }
  return "?";
}

json signed_indices(const Word& w) {
  json arr = json::array();
  for (const Letter& l : w.letters) arr.push_back((l.index + 1) * l.sign);
  return arr;
}

json word_doc(const Word& w) {
  return json{{"alphabet", w.alphabet.name},
              {"letters", signed_indices(w)},
              {"text", w.to_text()}};
}

} // namespace

json json_of(const GroupLabel& label) {
  json j{{"family", family_name(label.family)}, {"text", label.text()}};
  if (label.family == Family::Gder) {
    j["de"] = label.de;
    j["e"] = label.e;
    j["r"] = label.r;
  } else if (label.family == Family::I2) {
    j["p"] = label.n;
  } else if (label.family != Family::F4 && label.family != Family::G2) {
    j["n"] = label.n;
  }
  return j;
}

json json_of(const CoxeterMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) {
      if (m.at(i, j) == CoxeterMatrix::kInfinity)
        row.push_back(nullptr);
      else
        row.push_back(m.at(i, j));
    }
    rows.push_back(std::move(row));
  }
  return json{{"size", m.size()}, {"entries", std::move(rows)}};
}

json json_of(const Presentation& p) {
  json rels = json::array();
  for (const auto& [lhs, rhs] : p.relations)
    rels.push_back(json::array({lhs, rhs}));
  return json{{"generators", p.generators},
              {"relations", std::move(rels)},
              {"text", p.to_text()}};
}

json json_of(const Word& w) { return word_doc(w); }

json json_of(const Hyperplane& h) {
  return json{{"normal", h.normal}, {"text", h.to_text()}};
}

json json_of(const Arrangement& a) {
  json j{{"dim", a.dim}, {"hyperplane_count", a.hyperplane_count()}};
  if (a.is_combinatorial()) {
    j["rank2_atoms"] = *a.rank2_atoms;
  } else {
    json hs = json::array();
    for (const auto& h : a.hyperplanes) hs.push_back(json_of(h));
    j["hyperplanes"] = std::move(hs);
  }
  return j;
}

json json_of(const IntPolynomial& p) {
  return json{{"coefficients", p.coefficients()}, {"text", p.to_text()}};
}

json json_of(const IntersectionLattice& l) {
  json flats = json::array();
  for (const Flat& f : l.flats) {
    json atoms = json::array();
    for (int h = 0; h < 64; ++h)
      if (f.mask >> h & 1) atoms.push_back(h);
    flats.push_back(json{{"hyperplanes", std::move(atoms)},
                         {"rank", f.rank},
                         {"dim", f.dim(l.ambient_dim)},
                         {"mobius", f.mobius}});
  }
  return json{{"ambient_dim", l.ambient_dim},
              {"atom_count", l.atom_count},
              {"flats", std::move(flats)}};
}

json json_of(const SuspensionReport& r) {
  return json{{"hyperplanes", r.hyperplanes}, {"b1", r.b1}, {"pass", r.pass}};
}

json json_of(const FibrationReport& r) {
  json point = json::array(), image = json::array();
  for (const auto& c : r.point) point.push_back(to_string(c));
  for (const auto& c : r.image) image.push_back(to_string(c));
  return json{{"label", json_of(r.label)},
              {"point", std::move(point)},
              {"in_complement", r.in_complement},
              {"vanishing_forms", r.vanishing_forms},
              {"image", std::move(image)},
              {"z_index", r.z_index},
              {"image_in_z", r.image_in_z}};
}

json json_of(const GarsideNF& nf) {
  json factors = json::array(), words = json::array();
  for (const auto& f : nf.factors) {
    factors.push_back(f);
    words.push_back(strand_word(f));
  }
  return json{{"n", nf.n},
              {"inf", nf.inf},
              {"canonical_length", nf.canonical_length()},
              {"factors", std::move(factors)},
              {"factor_words", std::move(words)},
              {"trivial", nf.trivial()},
              {"text", nf.to_text()}};
}

json json_of(const OrbifoldPresentation& p) {
  json rels = json::array();
  for (const auto& rel : p.relations)
    rels.push_back(json{{"family", rel.family},
                        {"lhs", signed_indices(rel.lhs)},
                        {"rhs", signed_indices(rel.rhs)},
                        {"text", rel.lhs.to_text() + " = " + rel.rhs.to_text()}});
  json torsion = json::object();
  for (std::size_t i = 0; i < p.alphabet.letters.size(); ++i)
    if (p.alphabet.torsion[i] != 0)
      torsion[p.alphabet.letters[i]] = p.alphabet.torsion[i];
  return json{{"kind", p.kind == OrbifoldKind::Source ? "source" : "target"},
              {"strands", p.strands},
              {"cone_order", p.cone_order},
              {"generators", p.alphabet.letters},
              {"torsion", std::move(torsion)},
              {"relations", std::move(rels)},
              {"text", p.presentation().to_text()}};
}

json json_of(const RelatorCertificate& c) {
  json j{{"family", c.family},
         {"source", c.source_lhs.to_text() + " = " + c.source_rhs.to_text()},
         {"image", c.image_lhs.to_text() + " = " + c.image_rhs.to_text()},
         {"image_lhs", signed_indices(c.image_lhs)},
         {"image_rhs", signed_indices(c.image_rhs)},
         {"certificate", c.certificate},
         {"pass", c.pass}};
  if (c.b3_pair)
    j["b3_pair"] = json::array(
        {c.b3_pair->first.to_text(), c.b3_pair->second.to_text()});
  return j;
}

json json_of(const EmbeddingReport& r) {
  json rels = json::array();
  for (const auto& c : r.relators) rels.push_back(json_of(c));
  return json{{"strands", r.strands},
              {"cone_order", r.cone_order},
              {"pass", r.pass},
              {"relators", std::move(rels)}};
}

json json_of(const FadellNeuwirthLevel& level) {
  json j{{"index", level.index},
         {"space", level.space},
         {"is_fibration", level.is_fibration}};
  if (level.is_fibration) {
    j["base"] = level.base;
    j["fiber"] = level.fiber;
  }
  return j;
}

json json_of(const AbelianGroup& g) {
  const AbelianGroup c = g.canonical();
  return json{{"free_rank", c.free_rank},
              {"torsion", c.torsion},
              {"text", c.to_text()}};
}

json json_of(const LTable& t) {
  json groups = json::array();
  for (const auto& g : t.groups) groups.push_back(json_of(g));
  return json{{"label", json_of(t.label)},
              {"N", t.hyperplane_count},
              {"L", std::move(groups)}};
}

json json_of(const KVanishingReport& r) {
  return json{{"label", json_of(r.label)},
              {"holds", r.holds},
              {"vanishing_groups", r.vanishing_groups},
              {"statement", r.statement}};
}

json json_of(const EnumeratedGroup& g) {
  return json{{"label", json_of(g.model.label())},
              {"order", g.order()},
              {"model", g.model.model_description()}};
}

json json_of(const ReflectionSet& r) {
  json elems = json::array();
  for (const auto& e : r.elements)
    elems.push_back(json{{"key", e}, {"text", r.model.element_text(e)}});
  return json{{"label", json_of(r.model.label())},
              {"count", r.count()},
              {"model", r.model.model_description()},
              {"elements", std::move(elems)}};
}

} // namespace coxart
