// Acceptance suite: one test case per acceptance criterion, each printing a
// PASS/FAIL line.  Run via ctest or directly for the line-per-criterion
// output.

#include <fgword/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <iostream>
#include <map>

#include "oracles.hpp"

using namespace fg;

namespace {

void criterion(int n, const std::string& what, bool ok) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << what << std::endl;
  REQUIRE(ok);
}

const Fixtures& fixtures() {
  static Fixtures f = load_fixtures(FGWORD_FIXTURE_DIR);
  return f;
}

const AlphabetRef F2 = make_alphabet({"a", "b"});
const AlphabetRef F3 = make_alphabet({"a", "b", "c"});

}  // namespace

TEST_CASE("criterion 1: candidate not equivalent to its inverse") {
  auto t0 = std::chrono::steady_clock::now();
  Report report = verify_all(fixtures());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const ClaimResult* headline = nullptr;
  for (const auto& c : report.claims)
    if (c.id == "candidate_not_inverse_equivalent") headline = &c;
  bool ok = headline && headline->pass && headline->data.at("min_length") == 6 &&
            headline->data.at("inverse_equivalent") == false && report.all_pass() &&
            secs < 300.0;
  criterion(1, "verify run reports the candidate not equivalent to its inverse, "
               "minimal cyclic length 6, in " + std::to_string(secs) + "s", ok);
}

TEST_CASE("criterion 2: equivalence agrees with the brute-force oracle") {
  // Every cyclically reduced word of length <= 5 over two generators, as
  // letter sequences.
  std::vector<Word> words;
  words.emplace_back(F2);
  for (size_t len = 1; len <= 5; ++len)
    oracle::enumerate_cyclically_reduced(F2, len, [&](const Word& w) { words.push_back(w); });

  // Library verdicts via one orbit per distinct minimized form.
  std::map<std::string, std::string> orbit_rep;
  std::vector<std::string> impl_rep(words.size());
  for (size_t i = 0; i < words.size(); ++i) {
    CyclicWord m = minimize(words[i]).minimal;
    auto it = orbit_rep.find(m.key());
    if (it == orbit_rep.end()) {
      Orbit orb = orbit(words[i]);
      std::string rep = orb.members_sorted().front().key();
      for (const auto& member : orb.members_sorted()) orbit_rep[member.key()] = rep;
      it = orbit_rep.find(m.key());
    }
    impl_rep[i] = it->second;
  }

  // Oracle verdicts via the interleaved non-increasing closure.
  std::vector<oracle::W> oracle_rep(words.size());
  for (size_t i = 0; i < words.size(); ++i) {
    auto reach = oracle::nonincreasing_closure(oracle::from_word(words[i]), 2);
    size_t best = SIZE_MAX;
    for (const auto& w : reach) best = std::min(best, w.size());
    oracle::W rep;
    bool have = false;
    for (const auto& w : reach)
      if (w.size() == best && (!have || w < rep)) {
        rep = w;
        have = true;
      }
    oracle_rep[i] = rep;
  }

  size_t mismatches = 0;
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i; j < words.size(); ++j)
      if ((impl_rep[i] == impl_rep[j]) != (oracle_rep[i] == oracle_rep[j])) ++mismatches;
  criterion(2, "all pairwise verdicts over " + std::to_string(words.size()) +
               " short words match the oracle", mismatches == 0);
}

TEST_CASE("criterion 3: two-phase closure equals interleaved closure") {
  std::mt19937_64 rng(101);
  bool ok = true;
  for (int i = 0; i < 50; ++i) {
    const AlphabetRef& alphabet = i % 2 ? F3 : F2;
    Word seed = oracle::random_reduced_word(alphabet, 1 + rng() % 6, rng);
    OrbitOptions two, inter;
    inter.strategy = OrbitStrategy::Interleaved;
    Orbit a = orbit(seed, two), b = orbit(seed, inter);
    if (a.size() != b.size()) ok = false;
    for (const auto& m : a.members_sorted())
      if (!b.contains(m)) ok = false;
  }
  criterion(3, "orbit member sets identical under both strategies for 50 random seeds", ok);
}

TEST_CASE("criterion 4: rewriting round trip") {
  const CoverData& cover = fixtures().cover;
  bool ok = true;
  size_t exhaustive = 0;
  for (size_t len : {0u, 2u, 4u, 6u}) {
    oracle::enumerate_reduced(cover.ambient, len, [&](const Word& u) {
      ++exhaustive;
      if (embed(rewrite(u, cover), cover) != u) ok = false;
    });
  }
  std::mt19937_64 rng(103);
  for (int i = 0; i < 1000; ++i) {
    Word u = oracle::random_reduced_word(cover.ambient, 2 * (rng() % 21), rng);
    if (embed(rewrite(u, cover), cover) != u) ok = false;
  }
  criterion(4, "embed(rewrite(u)) = u for " + std::to_string(exhaustive) +
               " kernel words exhaustively and 1000 random kernel words", ok);
}

TEST_CASE("criterion 5: the lift claim") {
  ClaimResult c = verify_lift(fixtures().cover);
  bool ok = c.pass && c.data.at("equivalent_to_candidate") == true &&
            c.data.at("lift_inverse_equivalent") == false;
  std::cout << "  (reported, not asserted) letter-level dictionary: "
            << c.data.at("letter_dictionary").dump() << "\n";
  criterion(5, "the lift is equivalent to the candidate and not to its own inverse", ok);
}

TEST_CASE("criterion 6: push conjugation rule") {
  ClaimResult c = verify_push_conjugation(fixtures().pushes, fixtures().cover);
  bool ok = c.pass && c.data.at("deck_on_lifted_path") == true &&
            c.data.at("single_move_failures").empty();
  criterion(6, "conjugation rule holds for all fixture renamings on all single moves "
               "and for the deck renaming on the lifted path", ok);
}

TEST_CASE("criterion 7: keep checks") {
  ClaimResult c = verify_keep_checks(fixtures().pushes, fixtures().keeps, fixtures().cover);
  bool both_forgotten_trivial = false, kept_pair_detects = false;
  for (const auto& config : c.data.at("configurations")) {
    if (config.at("kept") == json::array({"q1", "q2"}))
      both_forgotten_trivial = config.at("nontrivial_on").empty();
    if (config.at("kept") == json::array({"p1", "p2"}))
      kept_pair_detects = !config.at("nontrivial_on").empty();
  }
  criterion(7, "forgetting both pushed points is trivial on all test curves; keeping "
               "them detects the push", c.pass && both_forgotten_trivial && kept_pair_detects);
}

TEST_CASE("criterion 8: witness soundness over random pairs") {
  std::mt19937_64 rng(107);
  auto moves_ii = enumerate_type_ii(F3);
  auto moves_i = enumerate_type_i(F3);
  bool ok = true;
  for (int i = 0; i < 500; ++i) {
    const AlphabetRef& alphabet = F3;
    Word u = oracle::random_reduced_word(alphabet, 1 + rng() % 5, rng);
    GenMap sigma = GenMap::identity(alphabet);
    for (int k = static_cast<int>(rng() % 5); k >= 0; --k)
      sigma = rng() % 2 ? compose(moves_ii[rng() % moves_ii.size()].map, sigma)
                        : compose(moves_i[rng() % moves_i.size()].map, sigma);
    Word v = apply(sigma, u);
    auto r = equivalent(u, v);
    if (!r.equivalent || replay(cyclic_reduce(u).first, r.witness) != minimize(v).minimal)
      ok = false;
  }
  criterion(8, "equivalence detected and witness replays for 500 random image pairs", ok);
}

TEST_CASE("criterion 9: mutation controls") {
  ClaimResult mutated = verify_inverse_equivalence({}, parse_word("a", F3));
  bool flipped = !mutated.pass && mutated.data.at("inverse_equivalent") == true;

  json cover_json = cover_to_json(fixtures().cover);
  cover_json["gen_table"][1] = "a^3";
  bool cover_named = false;
  try {
    cover_from_json(cover_json);
  } catch (const FixtureError& e) {
    cover_named = e.invariant == "gen_table_in_kernel";
  }

  json push_json = push_table_to_json(fixtures().pushes);
  push_json["moves"][2]["map"]["images"][0] = "x y";
  bool push_named = false;
  try {
    push_table_from_json(push_json);
  } catch (const FixtureError& e) {
    push_named = !e.invariant.empty();
  }
  criterion(9, "substituting a primitive word flips the verdict; corrupted fixture "
               "entries fail named invariants", flipped && cover_named && push_named);
}
