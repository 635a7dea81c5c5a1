#include <fgword/whitehead.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"

using namespace fg;

namespace {
const AlphabetRef F1 = make_alphabet({"a"});
const AlphabetRef F2 = make_alphabet({"a", "b"});
const AlphabetRef F3 = make_alphabet({"a", "b", "c"});

Word W3(const std::string& s) { return parse_word(s, F3); }
Word W2(const std::string& s) { return parse_word(s, F2); }
}  // namespace

TEST_CASE("move enumeration counts") {
  REQUIRE(enumerate_type_ii(F3).size() == 96);
  REQUIRE(enumerate_type_ii(F2).size() == 16);
  REQUIRE(enumerate_type_ii(F1).size() == 2);
  REQUIRE(enumerate_type_i(F3).size() == 48);
  REQUIRE(enumerate_type_i(F2).size() == 8);
  REQUIRE(enumerate_type_i(F1).size() == 2);
}

TEST_CASE("distinct induced cut-move tables") {
  auto dedup_count = [](const AlphabetRef& alphabet) {
    std::set<std::string> tables;
    for (const auto& m : enumerate_type_ii(alphabet)) {
      if (m.identity) continue;
      std::string key;
      for (const auto& img : m.map.images()) key += img.key() + "|";
      tables.insert(key);
    }
    return tables.size();
  };
  REQUIRE(dedup_count(F3) == 90);
  REQUIRE(dedup_count(F2) == 12);
}

TEST_CASE("every enumerated move carries a verified inverse") {
  for (const AlphabetRef& alphabet : {F1, F2, F3}) {
    for (const auto& m : enumerate_type_ii(alphabet)) {
      REQUIRE(compose(m.inverse, m.map).is_identity());
      REQUIRE(compose(m.map, m.inverse).is_identity());
    }
    for (const auto& m : enumerate_type_i(alphabet)) {
      REQUIRE(compose(m.inverse, m.map).is_identity());
      REQUIRE(compose(m.map, m.inverse).is_identity());
    }
  }
}

TEST_CASE("identity pairs are flagged") {
  size_t flagged = 0;
  for (const auto& m : enumerate_type_ii(F3))
    if (m.identity) {
      REQUIRE(m.map.is_identity());
      ++flagged;
    }
  REQUIRE(flagged == 6);  // one per multiplier letter
}

TEST_CASE("minimization") {
  SECTION("the candidate word is already minimal") {
    auto r = minimize(W3("a^2 c^2 a c^-1"));
    REQUIRE(r.minimal.length() == 6);
    REQUIRE(r.witness.empty());
    REQUIRE(is_whitehead_minimal(r.minimal));
  }
  SECTION("conjugates collapse by cyclic reduction alone") {
    auto r = minimize(W2("b a b^-1"));
    REQUIRE(r.minimal.length() == 1);
  }
  SECTION("the commutator is minimal at length 4") {
    auto r = minimize(W2("a b a^-1 b^-1"));
    REQUIRE(r.minimal.length() == 4);
    REQUIRE(is_whitehead_minimal(r.minimal));
  }
  SECTION("descent is monotone and witnessed") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
      Word u = oracle::random_reduced_word(F3, rng() % 12, rng);
      auto r = minimize(u);
      REQUIRE(r.witness.size() <= u.length());
      CyclicWord cur = cyclic_reduce(u).first;
      for (const auto& m : r.witness) {
        CyclicWord next = apply_move(m, cur);
        REQUIRE(next.length() < cur.length());
        cur = next;
      }
      REQUIRE(cur == r.minimal);
      REQUIRE(is_whitehead_minimal(r.minimal));
    }
  }
}

TEST_CASE("orbit of a generator") {
  Orbit orb = orbit(parse_word("a", F2));
  REQUIRE(orb.min_length() == 1);
  REQUIRE(orb.size() == 4);
  std::set<std::string> found;
  for (const auto& m : orb.members_sorted()) found.insert(format_word(m));
  REQUIRE(found == std::set<std::string>{"a", "a^-1", "b", "b^-1"});
}

TEST_CASE("orbit of the empty word") {
  Orbit orb = orbit(Word(F2));
  REQUIRE(orb.size() == 1);
  REQUIRE(orb.min_length() == 0);
}

TEST_CASE("orbit witnesses replay from the minimized seed") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 10; ++i) {
    Word u = oracle::random_reduced_word(F2, 1 + rng() % 6, rng);
    Orbit orb = orbit(u);
    for (const auto& m : orb.members_sorted())
      REQUIRE(replay(orb.seed_minimal(), orb.witness_for(m)) == m);
  }
}

TEST_CASE("two-phase and interleaved closures agree") {
  std::mt19937_64 rng(37);
  for (const AlphabetRef& alphabet : {F2, F3}) {
    for (int i = 0; i < 8; ++i) {
      Word u = oracle::random_reduced_word(alphabet, 1 + rng() % 6, rng);
      OrbitOptions two, inter;
      inter.strategy = OrbitStrategy::Interleaved;
      Orbit a = orbit(u, two), b = orbit(u, inter);
      REQUIRE(a.size() == b.size());
      for (const auto& m : a.members_sorted()) REQUIRE(b.contains(m));
    }
  }
}

TEST_CASE("closure strategies agree exhaustively in rank 2 up to length 6") {
  std::set<std::string> seen_minimal;
  size_t orbits_checked = 0, mismatches = 0;
  auto check = [&](const Word& u) {
    std::string key = minimize(u).minimal.key();
    if (!seen_minimal.insert(key).second) return;
    OrbitOptions two, inter;
    inter.strategy = OrbitStrategy::Interleaved;
    Orbit a = orbit(u, two), b = orbit(u, inter);
    ++orbits_checked;
    if (a.size() != b.size()) ++mismatches;
    for (const auto& m : a.members_sorted())
      if (!b.contains(m)) ++mismatches;
  };
  check(Word(F2));
  for (size_t len = 1; len <= 6; ++len)
    oracle::enumerate_cyclically_reduced(F2, len, check);
  INFO("distinct orbits checked: " << orbits_checked);
  REQUIRE(orbits_checked > 10);
  REQUIRE(mismatches == 0);
}

TEST_CASE("orbit of the candidate word") {
  Word u = W3("a^2 c^2 a c^-1");
  Orbit orb = orbit(u);
  REQUIRE(orb.min_length() == 6);
  REQUIRE(orb.size() == 24);  // golden value, cross-checked below

  OrbitOptions inter;
  inter.strategy = OrbitStrategy::Interleaved;
  Orbit cross = orbit(u, inter);
  REQUIRE(cross.size() == 24);

  OrbitOptions par;
  par.threads = 4;
  Orbit threaded = orbit(u, par);
  REQUIRE(threaded.size() == orb.size());
  for (const auto& m : orb.members_sorted()) REQUIRE(threaded.contains(m));
}

TEST_CASE("budget is a hard cap with partial size") {
  OrbitOptions opts;
  opts.budget = 2;
  try {
    orbit(parse_word("a", F2), opts);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    REQUIRE(e.partial_size == 2);
  }
}

TEST_CASE("equivalence decisions") {
  Word w = W3("a^2 c^2 a c^-1");
  SECTION("the candidate is not equivalent to its inverse") {
    auto r = inverse_equivalent(w);
    REQUIRE_FALSE(r.equivalent);
    REQUIRE(r.min_length == 6);
  }
  SECTION("images under pinned automorphisms are equivalent with sound witnesses") {
    std::mt19937_64 rng(41);
    auto moves_ii = enumerate_type_ii(F3);
    auto moves_i = enumerate_type_i(F3);
    for (int i = 0; i < 30; ++i) {
      Word u = oracle::random_reduced_word(F3, 1 + rng() % 6, rng);
      GenMap sigma = GenMap::identity(F3);
      for (int k = rng() % 5; k >= 0; --k) {
        sigma = rng() % 2 ? compose(moves_ii[rng() % moves_ii.size()].map, sigma)
                          : compose(moves_i[rng() % moves_i.size()].map, sigma);
      }
      Word v = apply(sigma, u);
      auto r = equivalent(u, v);
      REQUIRE(r.equivalent);
      // The witness replays from the source's cyclic class: descent moves
      // first, then the orbit path to the target's minimized class.
      REQUIRE(replay(cyclic_reduce(u).first, r.witness) == minimize(v).minimal);
    }
  }
  SECTION("a generator is not equivalent to the commutator") {
    REQUIRE_FALSE(equivalent(W2("a"), W2("a b a^-1 b^-1")).equivalent);
  }
  SECTION("symmetry and inverse compatibility on random pairs") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 25; ++i) {
      Word u = oracle::random_reduced_word(F2, rng() % 5, rng);
      Word v = oracle::random_reduced_word(F2, rng() % 5, rng);
      bool uv = equivalent(u, v).equivalent;
      REQUIRE(uv == equivalent(v, u).equivalent);
      REQUIRE(uv == equivalent(invert(u), invert(v)).equivalent);
    }
  }
  SECTION("conjugation invariance") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 25; ++i) {
      Word u = oracle::random_reduced_word(F2, rng() % 6, rng);
      Word g = oracle::random_reduced_word(F2, rng() % 6, rng);
      REQUIRE(equivalent(u, conjugate(g, u)).equivalent);
    }
  }
}

TEST_CASE("inverse equivalence examples") {
  REQUIRE(inverse_equivalent(parse_word("a", F2)).equivalent);
  REQUIRE(inverse_equivalent(W2("a b a^-1 b^-1")).equivalent);
  REQUIRE_FALSE(inverse_equivalent(W3("a^2 c^2 a c^-1")).equivalent);
}

TEST_CASE("primitivity") {
  REQUIRE(is_primitive(W2("ab")));
  REQUIRE_FALSE(is_primitive(W2("a b a^-1 b^-1")));
  REQUIRE_FALSE(is_primitive(Word(F2)));
}
