#include "coxart/cli.hpp"

#include "coxart/errors.hpp"
#include "coxart/jsonio.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <sstream>

namespace coxart::cli {

namespace {

using nlohmann::json;

struct Output {
  std::ostream& out;
  bool as_json = false;

  // text mode prints |text| (already newline-terminated by the caller
  // adding lines); json mode prints the document
  void emit(const json& doc, const std::string& text) {
    if (as_json)
      out << doc.dump(2) << "\n";
    else
      out << text;
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// label text or a path to an arrangement file
Arrangement arrangement_from(const std::string& spec) {
  if (std::filesystem::exists(spec)) return read_arrangement_file(spec);
  return reflection_arrangement(parse_label(spec));
}

std::string point_text(const std::vector<Rational>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += to_string(p[i]);
  }
  return s + ")";
}

std::string matrix_text(const CoxeterMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (j) out << " ";
      if (m.at(i, j) == CoxeterMatrix::kInfinity)
        out << "inf";
      else
        out << m.at(i, j);
    }
    out << "\n";
  }
  return out.str();
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OrbifoldKind parse_kind(const std::string& s) {
  if (s == "source") return OrbifoldKind::Source;
  if (s == "target") return OrbifoldKind::Target;
  throw UsageError("kind must be `source` or `target`, got `" + s + "`");
}

void cmd_present(Output& o, const std::string& label_text, bool artin) {
  const GroupLabel label = parse_label(label_text);
  const CoxeterMatrix m = coxeter_matrix(label);
  const Presentation p = artin ? artin_presentation(m) : coxeter_presentation(m);
  json doc = json_of(p);
  doc["label"] = json_of(label);
  o.emit(doc, p.to_text() + "\n");
}

void cmd_matrix(Output& o, const std::string& label_text) {
  const GroupLabel label = parse_label(label_text);
  const CoxeterMatrix m = coxeter_matrix(label);
  json doc = json_of(m);
  doc["label"] = json_of(label);
  o.emit(doc, matrix_text(m));
}

void cmd_order(Output& o, const std::string& label_text) {
  const GroupLabel label = parse_label(label_text);
  const EnumeratedGroup g = enumerate_group(label);
  o.emit(json_of(g), label.text() + ": order " + std::to_string(g.order()) +
                         " (" + g.model.model_description() + ")\n");
}

void cmd_reflections(Output& o, const std::string& label_text) {
  const GroupLabel label = parse_label(label_text);
  const ReflectionSet r = reflections(label);
  std::ostringstream text;
  text << label.text() << ": " << r.count() << " reflections ("
       << r.model.model_description() << ")\n";
  for (const auto& e : r.elements) text << r.model.element_text(e) << "\n";
  o.emit(json_of(r), text.str());
}

void cmd_pure(Output& o, const std::string& label_text,
              const std::string& word_text) {
  const GroupLabel label = parse_label(label_text);
  const FiniteGroupModel model(label);
  const Word w =
      parse_word(word_text, Alphabet::artin(label.rank()));
  std::vector<int> letters;
  for (const Letter& l : w.letters) letters.push_back((l.index + 1) * l.sign);
  const GroupElement image = coxeter_image(letters, model);
  const bool pure = image == model.identity();
  json doc{{"label", json_of(label)},
           {"word", json_of(w)},
           {"image", image},
           {"image_text", model.element_text(image)},
           {"pure", pure}};
  std::ostringstream text;
  text << "word: " << w.to_text() << "\n"
       << "image: " << model.element_text(image) << "\n"
       << "pure: " << yes_no(pure) << "\n";
  o.emit(doc, text.str());
}

void cmd_arrangement(Output& o, const std::string& what,
                     const std::string& spec) {
  const Arrangement a = arrangement_from(spec);
  if (what == "list") {
    std::ostringstream text;
    if (a.is_combinatorial()) {
      text << "combinatorial rank-2 arrangement, " << *a.rank2_atoms
           << " lines\n";
    } else {
      text << "dim " << a.dim << ", " << a.hyperplanes.size()
           << " hyperplanes\n";
      for (const auto& h : a.hyperplanes) text << h.to_text() << "\n";
    }
    o.emit(json_of(a), text.str());
    return;
  }
  if (what == "lattice") {
    const IntersectionLattice lat = intersection_lattice(a);
    std::ostringstream text;
    text << lat.flats.size() << " flats, ambient dim " << lat.ambient_dim
         << "\n";
    for (const Flat& f : lat.flats) {
      text << "rank " << f.rank << " dim " << f.dim(lat.ambient_dim)
           << " mobius " << f.mobius << " hyperplanes {";
      bool first = true;
      for (int h = 0; h < 64; ++h)
        if (f.mask >> h & 1) {
          if (!first) text << ",";
          first = false;
          text << h;
        }
      text << "}\n";
    }
    o.emit(json_of(lat), text.str());
    return;
  }
  if (what == "chi" || what == "poincare") {
    const IntPolynomial p = what == "chi" ? characteristic_polynomial(a)
                                          : poincare_polynomial(a);
    o.emit(json_of(p), (what == "chi" ? "chi(t) = " : "pi(t) = ") +
                           p.to_text() + "\n");
    return;
  }
  if (what == "betti") {
    const auto b = betti_numbers(a);
    json doc{{"betti", b}};
    std::string text = "b =";
    for (long long x : b) text += " " + std::to_string(x);
    o.emit(doc, text + "\n");
    return;
  }
  if (what == "suspension-check") {
    const SuspensionReport r = suspension_check(a);
    std::ostringstream text;
    text << "hyperplanes N = " << r.hyperplanes << "\n"
         << "b_1 = " << r.b1 << "\n"
         << "pass: " << yes_no(r.pass) << "\n";
    o.emit(json_of(r), text.str());
    return;
  }
  if (what == "fibertype") {
    const bool ft = is_fiber_type(a);
    o.emit(json{{"fiber_type", ft}},
           "fiber-type (supersolvable): " + yes_no(ft) + "\n");
    return;
  }
  throw std::logic_error("unknown arrangement action " + what);
}

void cmd_fibration(Output& o, const std::string& label_text,
                   const std::string& point_spec) {
  const FibrationReport r =
      fibration_map_eval(parse_label(label_text), parse_point(point_spec));
  std::ostringstream text;
  text << "label: " << r.label.text() << "\n"
       << "point: " << point_text(r.point) << "\n"
       << "in complement: " << yes_no(r.in_complement) << "\n";
  for (const auto& f : r.vanishing_forms) text << "  vanishing: " << f << "\n";
  text << "image: " << point_text(r.image) << "\n"
       << "image in Z_" << r.z_index << ": " << yes_no(r.image_in_z) << "\n";
  o.emit(json_of(r), text.str());
}

void cmd_zspace(Output& o, const std::string& point_spec) {
  const auto p = parse_point(point_spec);
  const bool member = z_space_membership(p);
  json doc{{"point", json::array()}, {"member", member}};
  for (const auto& c : p) doc["point"].push_back(to_string(c));
  o.emit(doc, "in Z_" + std::to_string(p.size()) + ": " + yes_no(member) +
                  "\n");
}

void cmd_braid_nf(Output& o, int n, const std::string& word_text) {
  const Word w = parse_word(word_text, Alphabet::braid(n));
  const GarsideNF nf = garside_nf(w, n);
  std::ostringstream text;
  text << "nf: " << nf.to_text() << "\n"
       << "inf: " << nf.inf << "\n"
       << "canonical length: " << nf.canonical_length() << "\n"
       << "trivial: " << yes_no(nf.trivial()) << "\n";
  o.emit(json_of(nf), text.str());
}

void cmd_braid_eq(Output& o, int n, const std::string& u_text,
                  const std::string& v_text) {
  const Alphabet alpha = Alphabet::braid(n);
  const bool equal =
      braid_equal(parse_word(u_text, alpha), parse_word(v_text, alpha), n);
  o.emit(json{{"equal", equal}}, "equal: " + yes_no(equal) + "\n");
}

void cmd_orb_present(Output& o, const std::string& kind, int n, int q) {
  const OrbifoldPresentation p =
      orbifold_presentation(parse_kind(kind), n, q);
  std::ostringstream text;
  text << p.presentation().to_text() << "\n"
       << "torsion: x has order " << q << "\n";
  o.emit(json_of(p), text.str());
}

void cmd_orb_reduce(Output& o, const std::string& kind, int n, int q,
                    const std::string& word_text) {
  const Alphabet alpha = parse_kind(kind) == OrbifoldKind::Source
                             ? Alphabet::orbifold_source(n, q)
                             : Alphabet::orbifold_target(n, q);
  const Word w = parse_word(word_text, alpha);
  const Word reduced = torsion_reduce(w);
  json doc{{"input", json_of(w)}, {"reduced", json_of(reduced)}};
  o.emit(doc, reduced.to_text() + "\n");
}

void cmd_embed_map(Output& o, int n, const std::string& word_text) {
  // the generator map is the same for every cone order
  const Word w = parse_word(word_text, Alphabet::orbifold_source(n, 2));
  const Word image = embed(w, n);
  auto letters = [](const Word& word) {
    json arr = json::array();
    for (const Letter& l : word.letters)
      arr.push_back(word.alphabet.letters[l.index] +
                    (l.sign < 0 ? "^-1" : ""));
    return arr;
  };
  json doc{{"strands", n},
           {"input", json{{"letters", letters(w)}, {"text", w.to_text()}}},
           {"image",
            json{{"letters", letters(image)}, {"text", image.to_text()}}}};
  o.emit(doc, image.to_text() + "\n");
}

void cmd_embed_verify(Output& o, int n, int q) {
  const EmbeddingReport r = verify_embedding_relators(n, q);
  std::ostringstream text;
  text << "n=" << n << " q=" << q << ": " << (r.pass ? "PASS" : "FAIL")
       << " (" << r.relators.size() << " relators)\n";
  for (const auto& c : r.relators) {
    text << c.family << ": " << c.source_lhs.to_text() << " = "
         << c.source_rhs.to_text() << "  ->  " << c.image_lhs.to_text()
         << " = " << c.image_rhs.to_text() << "  [" << c.certificate << "] "
         << (c.pass ? "ok" : "FAIL") << "\n";
  }
  o.emit(json_of(r), text.str());
}

void cmd_fntower(Output& o, int n, const std::string& surface) {
  const auto levels = fadell_neuwirth_tower(n, surface);
  json doc = json::array();
  std::ostringstream text;
  for (const auto& level : levels) {
    doc.push_back(json_of(level));
    text << "level " << level.index << ": " << level.space;
    if (level.is_fibration)
      text << "  base " << level.base << "  fiber " << level.fiber;
    text << "\n";
  }
  o.emit(json{{"levels", doc}}, text.str());
}

void cmd_ltheory(Output& o, const std::string& label_text) {
  const LTable t = l_groups(parse_label(label_text));
  std::ostringstream text;
  text << "pure Artin group of type " << t.label.text() << ": N = "
       << t.hyperplane_count << " reflecting hyperplanes\n";
  for (int i = 0; i < 4; ++i)
    text << "L_" << i << " = " << t.groups[i].to_text() << "\n";
  o.emit(json_of(t), text.str());
}

void cmd_kvanish(Output& o, const std::string& label_text) {
  const KVanishingReport r = k_vanishing_report(parse_label(label_text));
  std::ostringstream text;
  text << r.statement << "\n";
  o.emit(json_of(r), text.str());
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Coxeter/Artin group calculator: presentations, reflection "
               "arrangements, braid normal forms, orbifold braid "
               "embeddings, and surgery-group tables"};
  app.name("coxart");
  app.fallthrough();
  app.require_subcommand(1);

  Output output{out};
  app.add_flag("--json", output.as_json, "emit structured JSON output");

  std::function<void()> action;

  // shared argument slots; exactly one leaf subcommand fills them
  std::string s1, s2;
  int i1 = 0, i2 = 0;

  auto* coxeter = app.add_subcommand("coxeter", "Coxeter group presentations");
  auto* cox_present = coxeter->add_subcommand("present", "Coxeter presentation");
  cox_present->add_option("label", s1, "group label, e.g. A3, B4, I2(7), ~C3")
      ->required();
  cox_present->callback([&] { action = [&] { cmd_present(output, s1, false); }; });
  auto* cox_matrix = coxeter->add_subcommand("matrix", "Coxeter matrix");
  cox_matrix->add_option("label", s1, "group label")->required();
  cox_matrix->callback([&] { action = [&] { cmd_matrix(output, s1); }; });

  auto* artin = app.add_subcommand("artin", "Artin group presentations");
  auto* artin_present = artin->add_subcommand("present", "Artin presentation");
  artin_present->add_option("label", s1, "group label")->required();
  artin_present->callback([&] { action = [&] { cmd_present(output, s1, true); }; });

  auto* group = app.add_subcommand("group", "finite Coxeter group enumeration");
  auto* group_order = group->add_subcommand("order", "order by BFS closure");
  group_order->add_option("label", s1, "finite type label")->required();
  group_order->callback([&] { action = [&] { cmd_order(output, s1); }; });

  auto* refl = app.add_subcommand("reflections",
                                  "all reflections of a finite Coxeter group");
  refl->add_option("label", s1, "finite type label")->required();
  refl->callback([&] { action = [&] { cmd_reflections(output, s1); }; });

  auto* pure = app.add_subcommand(
      "pure", "evaluate an Artin word in the Coxeter group");
  pure->add_option("label", s1, "finite type label")->required();
  pure->add_option("word", s2, "word over a1..ak, e.g. \"a1 a2^-1\"")
      ->required();
  pure->callback([&] { action = [&] { cmd_pure(output, s1, s2); }; });

  auto* arr = app.add_subcommand("arrangement",
                                 "reflection arrangements and their lattice "
                                 "invariants");
  for (const char* what :
       {"list", "lattice", "chi", "poincare", "betti", "suspension-check",
        "fibertype"}) {
    auto* sub = arr->add_subcommand(what);
    sub->add_option("spec", s1, "group label or arrangement file")->required();
    std::string w = what;
    sub->callback([&, w] { action = [&, w] { cmd_arrangement(output, w, s1); }; });
  }

  auto* fib = app.add_subcommand("fibration", "the fibration maps onto Z_k");
  auto* fib_eval = fib->add_subcommand("eval", "evaluate at a rational point");
  fib_eval->add_option("label", s1, "D<n> or F4")->required();
  fib_eval->add_option("point", s2, "rational coordinates, e.g. \"1,2,5\"")
      ->required();
  fib_eval->callback([&] { action = [&] { cmd_fibration(output, s1, s2); }; });

  auto* zspace = app.add_subcommand(
      "zspace", "membership in Z_n (nonzero, pairwise distinct)");
  zspace->add_option("point", s1, "rational coordinates")->required();
  zspace->callback([&] { action = [&] { cmd_zspace(output, s1); }; });

  auto* braid = app.add_subcommand("braid", "braid group word problem");
  auto* braid_nf = braid->add_subcommand("nf", "Garside left normal form");
  braid_nf->add_option("n", i1, "braid index")->required();
  braid_nf->add_option("word", s1, "word over a1..a(n-1)")->required();
  braid_nf->callback([&] { action = [&] { cmd_braid_nf(output, i1, s1); }; });
  auto* braid_eq = braid->add_subcommand("eq", "equality of braid words");
  braid_eq->add_option("n", i1, "braid index")->required();
  braid_eq->add_option("word1", s1)->required();
  braid_eq->add_option("word2", s2)->required();
  braid_eq->callback([&] { action = [&] { cmd_braid_eq(output, i1, s1, s2); }; });

  auto* orb = app.add_subcommand("orb", "orbifold braid group presentations");
  auto* orb_present = orb->add_subcommand("present", "relation list");
  orb_present->add_option("kind", s1, "source | target")->required();
  orb_present->add_option("n", i1, "strand count")->required();
  orb_present->add_option("q", i2, "cone point order")->required();
  orb_present->callback(
      [&] { action = [&] { cmd_orb_present(output, s1, i1, i2); }; });
  auto* orb_reduce = orb->add_subcommand(
      "reduce", "free + torsion reduction of a word");
  orb_reduce->add_option("kind", s1, "source | target")->required();
  orb_reduce->add_option("n", i1, "strand count")->required();
  orb_reduce->add_option("q", i2, "cone point order")->required();
  orb_reduce->add_option("word", s2, "word to reduce")->required();
  orb_reduce->callback(
      [&] { action = [&] { cmd_orb_reduce(output, s1, i1, i2, s2); }; });

  auto* emb = app.add_subcommand("embed",
                                 "the puncture-filling embedding of orbifold "
                                 "braid groups");
  auto* emb_map = emb->add_subcommand("map", "apply the generator map");
  emb_map->add_option("n", i1, "source strand count")->required();
  emb_map->add_option("word", s1, "word over x,a1..a(n-1),p")->required();
  emb_map->callback([&] { action = [&] { cmd_embed_map(output, i1, s1); }; });
  auto* emb_verify = emb->add_subcommand("verify", "certify all relators");
  emb_verify->add_option("n", i1, "source strand count")->required();
  emb_verify->add_option("q", i2, "cone point order")->required();
  emb_verify->callback(
      [&] { action = [&] { cmd_embed_verify(output, i1, i2); }; });

  auto* fnt = app.add_subcommand("fntower",
                                 "point-forgetting fibration tower metadata");
  fnt->add_option("n", i1, "strand count")->required();
  fnt->add_option("surface", s1, "surface name, e.g. plane")->required();
  fnt->callback([&] { action = [&] { cmd_fntower(output, i1, s1); }; });

  auto* lth = app.add_subcommand(
      "ltheory", "surgery groups of the finite-type pure Artin group");
  lth->add_option("label", s1, "finite type label")->required();
  lth->callback([&] { action = [&] { cmd_ltheory(output, s1); }; });

  auto* kv = app.add_subcommand("kvanish", "lower K-theory vanishing report");
  kv->add_option("label", s1, "label from the supported list")->required();
  kv->callback([&] { action = [&] { cmd_kvanish(output, s1); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (action) action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace coxart::cli
