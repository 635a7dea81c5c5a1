// One-command reproduction of the bundled computational claims, emitting a
// machine-readable report.  Each claim carries an anchor string stating
// exactly what is being checked; the report hash excludes witnesses and
// timing so reruns and thread counts can be compared.

#pragma once

#include <chrono>
#include <fstream>
#include <random>

#include "surface.hpp"
#include "whitehead.hpp"

namespace fg {

struct ClaimResult {
  std::string id;
  std::string anchor;
  bool pass = false;
  json data;
};

struct VerifyOptions {
  size_t budget = 5000000;
  unsigned threads = 1;
};

struct Fixtures {
  CoverData cover;
  PushTable pushes;
  KeepTable keeps;
  std::string origin;  // "builtin" or the directory loaded from
};

inline Fixtures builtin_fixtures() {
  return Fixtures{klein_cover(), derive_push_table(), standard_keep_maps(), "builtin"};
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("fixture_missing", "cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline Fixtures load_fixtures(const std::string& dir) {
  Fixtures f;
  f.cover = cover_from_json(load_json_file(dir + "/klein_cover.json"));
  f.pushes = push_table_from_json(load_json_file(dir + "/push_tables.json"));
  f.keeps = keep_table_from_json(load_json_file(dir + "/keep_maps.json"));
  f.origin = dir;
  return f;
}

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// The candidate word and the loop it lifts, fixed throughout.
inline Word candidate_word(const AlphabetRef& f3) { return parse_word("a^2 c^2 a c^-1", f3); }
inline Word source_word(const AlphabetRef& ambient) {
  return parse_word("a^4 ab^-1 ab^-1 a^2 b a^-1", ambient);
}

inline PushPath lifted_push_path(const Word& lift) {
  PushPath path = spell_path(lift, "p1");
  PushPath second = spell_path(lift, "p2");
  path.insert(path.end(), second.begin(), second.end());
  return path;
}

}  // namespace detail

// The headline claim: the candidate word is not automorphism-equivalent to
// its inverse.  `subject` defaults to the candidate; substituting another
// word is how the mutation controls flip the verdict.
inline ClaimResult verify_inverse_equivalence(const VerifyOptions& options = {},
                                              std::optional<Word> subject = std::nullopt) {
  auto t0 = std::chrono::steady_clock::now();
  AlphabetRef f3 = make_alphabet({"a", "b", "c"});
  Word w = subject ? *subject : detail::candidate_word(f3);
  ClaimResult claim;
  claim.id = "candidate_not_inverse_equivalent";
  claim.anchor = "the word " + format_word(w) +
                 " in the rank-3 free group is not automorphism-equivalent to its inverse";
  OrbitOptions orbit_options{options.budget, OrbitStrategy::TwoPhase, options.threads};
  auto mr = minimize(w);
  auto inv = inverse_equivalent(w, orbit_options);

  // Positive controls: a single generator is equivalent to its inverse, and
  // the image of w under a pinned automorphism is equivalent to w.
  bool control_generator =
      inverse_equivalent(parse_word("a", w.alphabet()), orbit_options).equivalent;
  GenMap pinned = compose(
      enumerate_type_i(w.alphabet())[8].map,  // first non-trivial signed permutation block
      type_ii_genmap(w.alphabet(), Letter::make(0, +1),
                     {Letter::make(0, +1), Letter::make(2, +1)}));
  auto pinned_result = equivalent(w, apply(pinned, w), orbit_options);

  claim.pass = !inv.equivalent && mr.minimal.length() == 6 && control_generator &&
               pinned_result.equivalent;
  claim.data = json{{"word", format_word(w)},
                    {"min_length", mr.minimal.length()},
                    {"minimal_form", format_word(mr.minimal)},
                    {"orbit_size", inv.orbit_size},
                    {"inverse_equivalent", inv.equivalent},
                    {"controls",
                     json{{"generator_inverse_equivalent", control_generator},
                          {"pinned_image_equivalent", pinned_result.equivalent},
                          {"witness", witness_to_json(pinned_result.witness)}}},
                    {"wall_seconds", detail::seconds_since(t0)}};
  return claim;
}

// The lift claim: the loop downstairs lies in the even subgroup, rewrites to
// a word equivalent to the candidate, and that lift is still not equivalent
// to its own inverse.  Whether some signed renaming of the basis makes the
// lift equal the candidate letter for letter is reported, not asserted.
inline ClaimResult verify_lift(const CoverData& cover, const VerifyOptions& options = {}) {
  auto t0 = std::chrono::steady_clock::now();
  ClaimResult claim;
  claim.id = "lift_correspondence";
  claim.anchor =
      "the loop a^4 (a b^-1)^2 a^2 b a^-1 downstairs lifts to a word "
      "automorphism-equivalent to the candidate and not to its own inverse";
  Word v = detail::source_word(cover.ambient);
  bool member = in_subgroup(v, cover);
  OrbitOptions orbit_options{options.budget, OrbitStrategy::TwoPhase, options.threads};
  json data{{"source_word", format_word(v)}, {"in_subgroup", member}};
  if (!member) {
    claim.pass = false;
    claim.data = data;
    return claim;
  }
  Word lift = rewrite(v, cover);
  Word w = detail::candidate_word(cover.subgroup);
  auto equiv = equivalent(lift, w, orbit_options);
  auto inv = inverse_equivalent(lift, orbit_options);
  data["lift_word"] = format_word(lift);
  data["lift_cyclic_length"] = cyclic_reduce(lift).first.length();
  data["equivalent_to_candidate"] = equiv.equivalent;
  data["witness"] = witness_to_json(equiv.witness);
  data["lift_inverse_equivalent"] = inv.equivalent;
  // Letter-level dictionary search over all signed renamings of the basis.
  json dictionary{{"found", false}};
  for (const auto& sigma : enumerate_type_i(cover.subgroup)) {
    if (apply(sigma.map, lift) == w) {
      dictionary["found"] = true;
      dictionary["renaming"] = move_to_json(sigma);
      break;
    }
  }
  data["letter_dictionary"] = dictionary;
  claim.pass = member && equiv.equivalent && !inv.equivalent;
  data["wall_seconds"] = detail::seconds_since(t0);
  claim.data = data;
  return claim;
}

// The forgetful checks: pushing both marked points along the lifted loop is
// invisible once both pushed points are forgotten, and visible on some test
// curve in every other configuration.
inline ClaimResult verify_keep_checks(const PushTable& pushes, const KeepTable& keeps,
                                      const CoverData& cover) {
  auto t0 = std::chrono::steady_clock::now();
  ClaimResult claim;
  claim.id = "keep_checks";
  claim.anchor =
      "forgetting both pushed points trivializes the lifted push on every test curve; "
      "keeping either pushed point detects it on some test curve";
  Word lift = rewrite(detail::source_word(cover.ambient), cover);
  GenMap push_inv = push_along(inverse_path(detail::lifted_push_path(lift)), pushes);
  GenMap ident = GenMap::identity(pushes.alphabet);

  json configs = json::array();
  bool ok = true;
  for (const auto& k : keeps.keeps) {
    bool is_both_forgotten = (k.kept[0] == "q1" && k.kept[1] == "q2");
    json nontrivial_on = json::array();
    bool identity_trivial = true;
    for (const auto& c : pushes.test_curves) {
      if (!keep_acts_trivially_on(push_inv, k, c)) nontrivial_on.push_back(format_word(c));
      if (!keep_acts_trivially_on(ident, k, c)) identity_trivial = false;
    }
    bool expected = is_both_forgotten ? nontrivial_on.empty() : !nontrivial_on.empty();
    ok = ok && expected && identity_trivial;
    configs.push_back(json{{"kept", json::array({k.kept[0], k.kept[1]})},
                           {"expected", is_both_forgotten ? "trivial" : "nontrivial"},
                           {"nontrivial_on", nontrivial_on},
                           {"identity_control_trivial", identity_trivial},
                           {"pass", expected}});
  }
  claim.pass = ok;
  claim.data = json{{"lift_word", format_word(lift)},
                    {"configurations", configs},
                    {"wall_seconds", detail::seconds_since(t0)}};
  return claim;
}

// The conjugation rule for pushes, checked over the fixture renamings on
// every single move and on the lifted path, plus seeded random short paths.
inline ClaimResult verify_push_conjugation(const PushTable& pushes, const CoverData& cover,
                                           uint64_t seed = 1) {
  auto t0 = std::chrono::steady_clock::now();
  ClaimResult claim;
  claim.id = "push_conjugation_rule";
  claim.anchor =
      "conjugating a push by a marked-point symmetry equals the push along the renamed path";
  bool ok = true;
  json failures = json::array();
  for (const auto& r : pushes.renamings)
    for (const auto& m : pushes.moves)
      for (int sign : {+1, -1})
        if (!lemma21_check(r, {{m.name, sign}}, pushes)) {
          ok = false;
          failures.push_back(r.name + " on " + m.name);
        }
  Word lift = rewrite(detail::source_word(cover.ambient), cover);
  PushPath vhat = detail::lifted_push_path(lift);
  const Renaming& deck = pushes.renaming("deck");
  bool deck_vhat = lemma21_check(deck, vhat, pushes) &&
                   lemma21_check(deck, inverse_path(vhat), pushes);
  ok = ok && deck_vhat;
  std::mt19937_64 rng(seed);
  bool random_paths = true;
  for (int i = 0; i < 20; ++i) {
    PushPath path;
    for (int k = 0; k < static_cast<int>(rng() % 4) + 1; ++k)
      path.push_back({pushes.moves[rng() % pushes.moves.size()].name, rng() % 2 ? +1 : -1});
    for (const auto& r : pushes.renamings)
      if (!lemma21_check(r, path, pushes)) random_paths = false;
  }
  ok = ok && random_paths;
  claim.pass = ok;
  claim.data = json{{"single_move_failures", failures},
                    {"deck_on_lifted_path", deck_vhat},
                    {"random_short_paths", random_paths},
                    {"seed", seed},
                    {"wall_seconds", detail::seconds_since(t0)}};
  return claim;
}

struct Report {
  std::vector<ClaimResult> claims;
  json fixture_info;
  double seconds = 0;

  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }

  json to_json() const {
    json jc = json::array();
    for (const auto& c : claims)
      jc.push_back(json{{"id", c.id}, {"anchor", c.anchor},
                        {"result", c.pass ? "PASS" : "FAIL"}, {"data", c.data}});
    json j{{"schema", 1},
           {"claims", jc},
           {"fixtures", fixture_info},
           {"timing", json{{"wall_seconds", seconds}}}};
    j["report_hash"] = stable_hash();
    return j;
  }

  // FNV-1a over the report with witnesses and timing stripped.
  uint64_t stable_hash() const {
    json jc = json::array();
    for (const auto& c : claims) {
      json data = c.data;
      strip(data);
      jc.push_back(json{{"id", c.id}, {"result", c.pass ? "PASS" : "FAIL"}, {"data", data}});
    }
    std::string s = jc.dump();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  static void strip(json& j) {
    if (j.is_object()) {
      j.erase("witness");
      j.erase("wall_seconds");
      for (auto& [key, value] : j.items()) strip(value);
    } else if (j.is_array()) {
      for (auto& value : j) strip(value);
    }
  }
};

inline Report verify_all(const Fixtures& fixtures, const VerifyOptions& options = {}) {
  auto t0 = std::chrono::steady_clock::now();
  Report report;
  report.claims.push_back(verify_inverse_equivalence(options));
  report.claims.push_back(verify_lift(fixtures.cover, options));
  report.claims.push_back(verify_keep_checks(fixtures.pushes, fixtures.keeps, fixtures.cover));
  report.claims.push_back(verify_push_conjugation(fixtures.pushes, fixtures.cover));
  report.fixture_info = json{{"origin", fixtures.origin}, {"schema", 1}};
  report.seconds = detail::seconds_since(t0);
  return report;
}

}  // namespace fg
