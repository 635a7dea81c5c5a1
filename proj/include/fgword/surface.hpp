// Word-level encodings of point-push automorphisms on the four-punctured
// torus and the forgetful maps down to the twice-punctured torus.
//
// The push table lists six moves: pushes of each of the two marked points
// p1, p2 along loops realizing the three Schreier generators a, b, c of the
// even subgroup of the base surface group (the same basis the covers module
// rewrites onto).  The p2 loops are the deck images of the p1 loops, so the
// deck renaming swaps move names verbatim.  Tables are derived from the
// planar model in planar.hpp and shipped as a versioned fixture; loading a
// fixture re-checks the named invariants below.

#pragma once

#include <array>
#include <map>
#include <set>

#include "covers.hpp"
#include "planar.hpp"

namespace fg {

struct PushMove {
  std::string name;   // "p1:a" .. "p2:c"
  std::string point;  // "p1" or "p2"
  std::string loop;   // "a", "b" or "c"
  GenMap map;
  GenMap inverse;
};

// A mapping class that permutes the marked points, with the renaming it
// induces on push-generator names.
struct Renaming {
  std::string name;
  GenMap map;
  GenMap inverse;
  std::map<std::string, std::string> move_renaming;
};

struct PushTable {
  AlphabetRef alphabet;  // rank 5: x, y, s, t, u
  std::map<std::string, Word> puncture_loops;  // p1, q1, p2, q2
  std::vector<PushMove> moves;
  std::vector<Renaming> renamings;
  std::vector<Word> test_curves;

  const PushMove& move(const std::string& name) const {
    for (const auto& m : moves)
      if (m.name == name) return m;
    throw Error("unknown push move '" + name + "'");
  }
  const Renaming& renaming(const std::string& name) const {
    for (const auto& r : renamings)
      if (r.name == name) return r;
    throw Error("unknown renaming '" + name + "'");
  }
};

struct PathStep {
  std::string move;
  int sign = +1;
};
using PushPath = std::vector<PathStep>;

inline PushPath inverse_path(const PushPath& p) {
  PushPath out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back({it->move, -it->sign});
  return out;
}

// Spells a word over the rank-3 subgroup basis as a path of pushes of one
// marked point.
inline PushPath spell_path(const Word& w, const std::string& point) {
  static const char* names[3] = {"a", "b", "c"};
  PushPath out;
  for (Letter l : w.letters()) {
    if (l.gen() >= 3) throw Error("path word must be over the rank-3 basis");
    out.push_back({point + ":" + names[l.gen()], l.sign()});
  }
  return out;
}

// "p1:a p2:b^-1 ..." with whitespace or commas between steps.
inline PushPath parse_path(const std::string& text) {
  PushPath out;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    PathStep step;
    step.sign = +1;
    std::string t = token;
    if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
      step.sign = -1;
      t = t.substr(0, t.size() - 3);
    }
    step.move = t;
    out.push_back(step);
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',')
      flush();
    else
      token += c;
  }
  flush();
  return out;
}

// Composition of the named moves; the first step acts first.
inline GenMap push_along(const PushPath& path, const PushTable& table) {
  GenMap result = GenMap::identity(table.alphabet);
  for (const auto& step : path) {
    const PushMove& m = table.move(step.move);
    result = compose(step.sign > 0 ? m.map : m.inverse, result);
  }
  return result;
}

inline PushPath rename_path(const PushPath& path, const Renaming& r) {
  PushPath out;
  for (const auto& step : path) {
    auto it = r.move_renaming.find(step.move);
    if (it == r.move_renaming.end())
      throw Error("inconsistent renaming: no image for move '" + step.move + "'");
    out.push_back({it->second, step.sign});
  }
  return out;
}

// Generator-image conjugacy comparison of two endomorphisms.
inline bool conjugacy_equal_maps(const GenMap& f, const GenMap& g) {
  if (!same_alphabet(f.source(), g.source())) return false;
  for (size_t i = 0; i < f.source()->rank(); ++i)
    if (!conjugate_equal(f.image(i), g.image(i))) return false;
  return true;
}

// phi Push(l) phi^-1 = Push(phi(l)), compared on generator images up to
// conjugacy.
inline bool lemma21_check(const Renaming& r, const PushPath& path, const PushTable& table) {
  GenMap lhs = compose(r.map, compose(push_along(path, table), r.inverse));
  GenMap rhs = push_along(rename_path(path, r), table);
  return conjugacy_equal_maps(lhs, rhs);
}

// --- forgetful maps ----------------------------------------------------------

struct KeepMap {
  std::array<std::string, 2> kept;  // point names, in puncture order
  GenMap map;                       // rank 5 -> rank 3 (x, y, z)
  Word section_z;                   // source word the target letter z lifts to
};

struct KeepTable {
  AlphabetRef source;
  AlphabetRef target;
  std::vector<KeepMap> keeps;

  const KeepMap& keep_of(const std::string& a, const std::string& b) const {
    for (const auto& k : keeps)
      if ((k.kept[0] == a && k.kept[1] == b) || (k.kept[0] == b && k.kept[1] == a)) return k;
    throw Error("unknown keep configuration {" + a + "," + b + "}");
  }
};

// The induced endomorphism downstairs: k.map after m along the obvious
// section x -> x, y -> y, z -> section_z.
inline GenMap keep(const GenMap& m, const KeepMap& k) {
  if (!same_alphabet(m.source(), k.map.source()) || !same_alphabet(m.target(), k.map.source()))
    throw AlphabetMismatch();
  const AlphabetRef& target = k.map.target();
  std::vector<Word> sect;
  sect.emplace_back(m.source(), std::vector<Letter>{Letter::make(0, +1)});
  sect.emplace_back(m.source(), std::vector<Letter>{Letter::make(1, +1)});
  sect.push_back(k.section_z);
  std::vector<Word> images;
  for (const Word& s : sect) images.push_back(apply(k.map, apply(m, s)));
  return GenMap(target, target, std::move(images));
}

// Class-level action on a test curve after forgetting: the image of the
// curve under m, pushed down by k, compared as cyclic words.
inline bool keep_acts_trivially_on(const GenMap& m, const KeepMap& k, const Word& curve) {
  return conjugate_equal(apply(k.map, apply(m, curve)), apply(k.map, curve));
}

// --- construction ------------------------------------------------------------

namespace detail {

inline const std::array<std::string, 4>& puncture_names() {
  static const std::array<std::string, 4> names = {"p1", "q1", "p2", "q2"};
  return names;
}

inline GenMap fill_puncture(const AlphabetRef& alphabet, size_t gen) {
  std::vector<Word> images;
  for (size_t g = 0; g < alphabet->rank(); ++g) {
    if (g == gen)
      images.emplace_back(alphabet);
    else
      images.emplace_back(alphabet, std::vector<Letter>{Letter::make(g, +1)});
  }
  return GenMap(alphabet, alphabet, std::move(images));
}

}  // namespace detail

// Derives the six push moves, the deck renaming, the puncture loop words and
// the designated test curves from the planar torus model.
inline PushTable derive_push_table() {
  using planar::Curve;
  planar::TorusModel model;
  PushTable table;
  table.alphabet = model.group();

  auto basis_word = [&](size_t g) {
    return Word(table.alphabet, std::vector<Letter>{Letter::make(g, +1)});
  };
  table.puncture_loops["p1"] = basis_word(2);
  table.puncture_loops["q1"] = basis_word(3);
  table.puncture_loops["p2"] = basis_word(4);
  table.puncture_loops["q2"] = model.fourth_puncture_loop();

  const Curve p1_loops[3] = {planar::loop_p1_a(), planar::loop_p1_b(), planar::loop_p1_c()};
  const char* letters[3] = {"a", "b", "c"};
  planar::Rat d(1, 64);
  for (int point = 0; point < 2; ++point) {
    for (int i = 0; i < 3; ++i) {
      Curve loop = point == 0 ? p1_loops[i] : p1_loops[i].deck_image();
      PushMove m;
      m.point = point == 0 ? "p1" : "p2";
      m.loop = letters[i];
      m.name = m.point + ":" + m.loop;
      GenMap left = model.twist(model.offset(loop, +1, d), +1);
      GenMap right = model.twist(model.offset(loop, -1, d), +1);
      // Filling the pushed point makes the two push-offs isotopic, so the
      // two twists must agree exactly on the filled group.
      GenMap fill = detail::fill_puncture(table.alphabet, point == 0 ? 2 : 4);
      GenMap fl = compose(fill, left), fr = compose(fill, right);
      for (size_t g = 0; g < 5; ++g)
        if (g != (point == 0 ? 2u : 4u) && fl.image(g) != fr.image(g))
          throw FixtureError("pushoff_twists_agree_when_filled",
                             "twist tables disagree after filling " + m.point);
      m.map = model.push(loop);
      m.inverse = model.push_inverse(loop);
      if (!compose(m.inverse, m.map).is_identity() || !compose(m.map, m.inverse).is_identity())
        throw FixtureError("move_inverse", "derived push tables do not invert");
      table.moves.push_back(std::move(m));
    }
  }

  // Renamings: the identity, and the deck transformation (which swaps the
  // two sheets; p2 loops are its images of the p1 loops by construction).
  Renaming ident;
  ident.name = "identity";
  ident.map = GenMap::identity(table.alphabet);
  ident.inverse = ident.map;
  for (const auto& m : table.moves) ident.move_renaming[m.name] = m.name;
  table.renamings.push_back(std::move(ident));

  Renaming deck;
  deck.name = "deck";
  {
    std::vector<Word> images;
    for (size_t g = 0; g < 5; ++g)
      images.push_back(
          model.read_based(planar::deck_connector(), model.generator_curve(g).deck_image()));
    deck.map = GenMap(table.alphabet, table.alphabet, std::move(images));
    // The deck map squares to conjugation by the reading of the connector
    // followed by its own deck image; invert through that inner factor.
    Curve square_loop;
    square_loop.pts = planar::deck_connector().pts;
    Curve second = planar::deck_connector().deck_image();
    square_loop.pts.insert(square_loop.pts.end(), second.pts.begin() + 1, second.pts.end());
    Word c = model.read(square_loop);
    bool found = false;
    for (const Word& conj : {c, invert(c)}) {
      std::vector<Word> inv_images;
      for (size_t g = 0; g < 5; ++g)
        inv_images.push_back(
            apply(deck.map, conjugate(invert(conj), basis_word(g))));
      GenMap candidate(table.alphabet, table.alphabet, std::move(inv_images));
      if (compose(candidate, deck.map).is_identity() &&
          compose(deck.map, candidate).is_identity()) {
        deck.inverse = candidate;
        found = true;
        break;
      }
    }
    if (!found)
      throw FixtureError("deck_inverse", "could not invert the deck transformation table");
  }
  deck.move_renaming = {{"p1:a", "p2:a"}, {"p1:b", "p2:b"}, {"p1:c", "p2:c"},
                        {"p2:a", "p1:a"}, {"p2:b", "p1:b"}, {"p2:c", "p1:c"}};
  table.renamings.push_back(std::move(deck));

  for (const char* s : {"x", "y", "s", "t", "u", "x y", "x s", "y t", "x y^-1 t"})
    table.test_curves.push_back(parse_word(s, table.alphabet));
  return table;
}

inline KeepTable standard_keep_maps() {
  KeepTable kt;
  kt.source = make_alphabet({"x", "y", "s", "t", "u"});
  kt.target = make_alphabet({"x", "y", "z"});
  const auto& names = detail::puncture_names();
  Word q2_loop = parse_word("x y x^-1 y^-1 s^-1 t^-1 u^-1", kt.source);
  auto source_loop = [&](int i) {
    if (i == 3) return q2_loop;
    return Word(kt.source, std::vector<Letter>{Letter::make(2 + i, +1)});
  };
  Word commutator_z = parse_word("x y x^-1 y^-1 z^-1", kt.target);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      KeepMap k;
      k.kept = {names[i], names[j]};
      k.section_z = source_loop(i);
      std::vector<Word> images;
      images.push_back(parse_word("x", kt.target));
      images.push_back(parse_word("y", kt.target));
      for (int loop = 0; loop < 3; ++loop) {
        if (loop == i)
          images.push_back(parse_word("z", kt.target));
        else if (loop == j)
          images.push_back(commutator_z);
        else
          images.emplace_back(kt.target);
      }
      k.map = GenMap(kt.source, kt.target, std::move(images));
      kt.keeps.push_back(std::move(k));
    }
  return kt;
}

// --- fixture validation ------------------------------------------------------

inline void validate_push_table(const PushTable& t) {
  if (!t.alphabet || t.alphabet->rank() != 5)
    throw FixtureError("alphabet_rank", "push table alphabet must have rank 5");
  if (t.moves.size() != 6) throw FixtureError("move_count", "expected six push moves");
  for (const auto& name : detail::puncture_names())
    if (!t.puncture_loops.count(name))
      throw FixtureError("puncture_loops", "missing loop for " + name);
  for (const auto& m : t.moves) {
    if (!compose(m.inverse, m.map).is_identity() || !compose(m.map, m.inverse).is_identity())
      throw FixtureError("move_inverse", "move " + m.name + " has a broken inverse table");
    for (const auto& [pname, loop] : t.puncture_loops)
      if (!conjugate_equal(apply(m.map, loop), loop))
        throw FixtureError("preserves_puncture_loops",
                           "move " + m.name + " moves the class of the " + pname + " loop");
  }
  for (const auto& r : t.renamings) {
    if (!compose(r.inverse, r.map).is_identity() || !compose(r.map, r.inverse).is_identity())
      throw FixtureError("renaming_inverse", "renaming " + r.name + " has a broken inverse");
    std::set<std::string> seen;
    for (const auto& m : t.moves) {
      auto it = r.move_renaming.find(m.name);
      if (it == r.move_renaming.end())
        throw FixtureError("renaming_bijection", "renaming misses move " + m.name);
      if (!seen.insert(it->second).second)
        throw FixtureError("renaming_bijection", "renaming repeats " + it->second);
    }
    for (const auto& m : t.moves)
      if (!lemma21_check(r, {{m.name, +1}}, t))
        throw FixtureError("push_conjugation_rule",
                           "renaming " + r.name + " fails on move " + m.name);
  }
  if (t.test_curves.empty()) throw FixtureError("test_curves", "no designated test curves");
}

inline void validate_keep_table(const KeepTable& kt) {
  if (!kt.source || kt.source->rank() != 5 || !kt.target || kt.target->rank() != 3)
    throw FixtureError("alphabet_rank", "keep maps must go from rank 5 to rank 3");
  if (kt.keeps.size() != 6) throw FixtureError("keep_count", "expected six keep maps");
  Word q2_loop = parse_word("x y x^-1 y^-1 s^-1 t^-1 u^-1", kt.source);
  const auto& names = detail::puncture_names();
  for (const auto& k : kt.keeps) {
    for (size_t g = 0; g < 2; ++g) {
      const auto& img = k.map.image(g).letters();
      if (img.size() != 1 || img[0] != Letter::make(g, +1))
        throw FixtureError("keep_shape", "keep maps must fix the handle generators");
    }
    for (int i = 0; i < 4; ++i) {
      bool kept = (names[i] == k.kept[0] || names[i] == k.kept[1]);
      Word loop = i == 3 ? q2_loop
                         : Word(kt.source, std::vector<Letter>{Letter::make(2 + i, +1)});
      Word img = apply(k.map, loop);
      if (!kept && !img.empty())
        throw FixtureError("keep_kills_forgotten",
                           "keep {" + k.kept[0] + "," + k.kept[1] + "} keeps the " +
                               names[i] + " loop alive");
      if (kept && img.empty())
        throw FixtureError("keep_preserves_kept",
                           "keep {" + k.kept[0] + "," + k.kept[1] + "} kills the " +
                               names[i] + " loop");
    }
    if (apply(k.map, k.section_z) != parse_word("z", kt.target))
      throw FixtureError("keep_section", "section does not lift the z generator");
  }
}

// --- JSON forms --------------------------------------------------------------

inline json push_table_to_json(const PushTable& t) {
  json moves = json::array();
  for (const auto& m : t.moves)
    moves.push_back(json{{"name", m.name},
                         {"point", m.point},
                         {"loop", m.loop},
                         {"map", genmap_to_json(m.map)},
                         {"inverse", genmap_to_json(m.inverse)}});
  json loops = json::object();
  for (const auto& [name, w] : t.puncture_loops) loops[name] = format_word(w);
  json renamings = json::array();
  for (const auto& r : t.renamings)
    renamings.push_back(json{{"name", r.name},
                             {"map", genmap_to_json(r.map)},
                             {"inverse", genmap_to_json(r.inverse)},
                             {"moves", r.move_renaming}});
  json curves = json::array();
  for (const auto& w : t.test_curves) curves.push_back(format_word(w));
  return json{{"schema", 1},
              {"alphabet", alphabet_to_json(t.alphabet)},
              {"puncture_loops", loops},
              {"moves", moves},
              {"renamings", renamings},
              {"test_curves", curves}};
}

inline PushTable push_table_from_json(const json& j) {
  PushTable t;
  t.alphabet = alphabet_from_json(j.at("alphabet"));
  for (const auto& [key, val] : j.at("puncture_loops").items())
    t.puncture_loops[key] = parse_word(val.get<std::string>(), t.alphabet);
  for (const auto& jm : j.at("moves")) {
    PushMove m;
    m.name = jm.at("name");
    m.point = jm.at("point");
    m.loop = jm.at("loop");
    m.map = genmap_from_json(jm.at("map"), t.alphabet, t.alphabet);
    m.inverse = genmap_from_json(jm.at("inverse"), t.alphabet, t.alphabet);
    t.moves.push_back(std::move(m));
  }
  for (const auto& jr : j.at("renamings")) {
    Renaming r;
    r.name = jr.at("name");
    r.map = genmap_from_json(jr.at("map"), t.alphabet, t.alphabet);
    r.inverse = genmap_from_json(jr.at("inverse"), t.alphabet, t.alphabet);
    for (const auto& [k, v] : jr.at("moves").items()) r.move_renaming[k] = v;
    t.renamings.push_back(std::move(r));
  }
  for (const auto& s : j.at("test_curves"))
    t.test_curves.push_back(parse_word(s.get<std::string>(), t.alphabet));
  validate_push_table(t);
  return t;
}

inline json keep_table_to_json(const KeepTable& kt) {
  json keeps = json::array();
  for (const auto& k : kt.keeps)
    keeps.push_back(json{{"kept", json::array({k.kept[0], k.kept[1]})},
                         {"map", genmap_to_json(k.map)},
                         {"section_z", format_word(k.section_z)}});
  return json{{"schema", 1},
              {"source", alphabet_to_json(kt.source)},
              {"target", alphabet_to_json(kt.target)},
              {"keeps", keeps}};
}

inline KeepTable keep_table_from_json(const json& j) {
  KeepTable kt;
  kt.source = alphabet_from_json(j.at("source"));
  kt.target = alphabet_from_json(j.at("target"));
  for (const auto& jk : j.at("keeps")) {
    KeepMap k;
    k.kept = {jk.at("kept")[0].get<std::string>(), jk.at("kept")[1].get<std::string>()};
    k.map = genmap_from_json(jk.at("map"), kt.source, kt.target);
    k.section_z = parse_word(jk.at("section_z").get<std::string>(), kt.source);
    kt.keeps.push_back(std::move(k));
  }
  validate_keep_table(kt);
  return kt;
}

}  // namespace fg
