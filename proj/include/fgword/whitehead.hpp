// Whitehead automorphisms, minimization, minimal-orbit enumeration, and the
// automorphism-equivalence decision procedure.
//
// The decision procedure works with cyclic words throughout: two elements of
// a free group are automorphism-equivalent iff their cyclic classes are,
// because inner automorphisms are automorphisms.  Minimization greedily
// applies the Type II move with the greatest cyclic-length decrease until no
// move strictly decreases; a word of minimal cyclic length in its orbit is
// always reached this way.  The orbit of a minimal word is closed in two
// phases: breadth-first closure under length-preserving Type II moves, then
// one pass of all Type I moves (signed generator permutations form a group,
// so a single pass closes the set and any length-preserving move sequence
// can be rearranged to put its Type I part last).

#pragma once

#include <cstdint>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "morphisms.hpp"

namespace fg {

struct BudgetExceeded : Error {
  size_t partial_size;
  explicit BudgetExceeded(size_t n)
      : Error("orbit budget exceeded, partial size " + std::to_string(n) +
              "; raise the member cap"),
        partial_size(n) {}
};

// One Whitehead automorphism, with its inverse table attached.
struct WhiteheadMove {
  enum class Kind { TypeI, TypeII };

  Kind kind = Kind::TypeII;
  bool identity = false;
  GenMap map;
  GenMap inverse;
  // Type II parameters: multiplier letter and cut set (contains multiplier).
  Letter multiplier;
  std::vector<Letter> cut;
  // Type I parameters: image letter of each positive generator.
  std::vector<Letter> perm;

  std::string describe() const {
    const auto& alphabet = map.source();
    auto letter_str = [&](Letter l) {
      return alphabet->name(l.gen()) + (l.sign() < 0 ? "^-1" : "");
    };
    if (kind == Kind::TypeII) {
      std::string s = "W(" + letter_str(multiplier) + "; {";
      for (size_t i = 0; i < cut.size(); ++i) s += (i ? "," : "") + letter_str(cut[i]);
      return s + "})";
    }
    std::string s = "P(";
    for (size_t g = 0; g < perm.size(); ++g)
      s += (g ? "," : "") + alphabet->name(g) + "->" + letter_str(perm[g]);
    return s + ")";
  }
};

// All (a, A) parameter pairs with a in L, A a subset of L minus {a^-1}
// containing a; 2n * 2^(2n-2) pairs for rank n.  Pairs with A = {a} induce
// the identity and are flagged.
inline std::vector<WhiteheadMove> enumerate_type_ii(const AlphabetRef& alphabet) {
  const size_t n = alphabet->rank();
  std::vector<WhiteheadMove> moves;
  for (size_t code = 0; code < 2 * n; ++code) {
    Letter a{static_cast<uint8_t>(code)};
    std::vector<Letter> eligible;
    for (size_t c = 0; c < 2 * n; ++c) {
      Letter l{static_cast<uint8_t>(c)};
      if (l != a && l != a.inverse()) eligible.push_back(l);
    }
    for (uint32_t mask = 0; mask < (1u << eligible.size()); ++mask) {
      WhiteheadMove m;
      m.kind = WhiteheadMove::Kind::TypeII;
      m.multiplier = a;
      m.cut = {a};
      for (size_t i = 0; i < eligible.size(); ++i)
        if (mask & (1u << i)) m.cut.push_back(eligible[i]);
      m.identity = (m.cut.size() == 1);
      m.map = type_ii_genmap(alphabet, a, m.cut);
      std::vector<Letter> inv_cut = {a.inverse()};
      for (Letter l : m.cut)
        if (l != a) inv_cut.push_back(l);
      m.inverse = type_ii_genmap(alphabet, a.inverse(), inv_cut);
      moves.push_back(std::move(m));
    }
  }
  return moves;
}

// All signed permutations of the generators; 2^n * n! of them.
inline std::vector<WhiteheadMove> enumerate_type_i(const AlphabetRef& alphabet) {
  const size_t n = alphabet->rank();
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<WhiteheadMove> moves;
  do {
    for (uint32_t signs = 0; signs < (1u << n); ++signs) {
      WhiteheadMove m;
      m.kind = WhiteheadMove::Kind::TypeI;
      std::vector<Word> images, inverse_images(n);
      for (size_t g = 0; g < n; ++g) {
        Letter img = Letter::make(perm[g], (signs & (1u << g)) ? -1 : +1);
        m.perm.push_back(img);
        images.emplace_back(alphabet, std::vector<Letter>{img});
        inverse_images[perm[g]] =
            Word(alphabet, std::vector<Letter>{Letter::make(g, img.sign())});
      }
      m.identity = true;
      for (size_t g = 0; g < n; ++g)
        if (m.perm[g] != Letter::make(g, +1)) m.identity = false;
      m.map = GenMap(alphabet, alphabet, std::move(images));
      m.inverse = GenMap(alphabet, alphabet, std::move(inverse_images));
      moves.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return moves;
}

// Image of a cyclic class under a move, in canonical form.
inline CyclicWord apply_move(const WhiteheadMove& m, const CyclicWord& w) {
  return apply(m.map, w);
}

inline CyclicWord replay(const CyclicWord& start, const std::vector<WhiteheadMove>& moves) {
  CyclicWord cur = start;
  for (const auto& m : moves) cur = apply_move(m, cur);
  return cur;
}

struct MinimizeResult {
  CyclicWord minimal;
  std::vector<WhiteheadMove> witness;  // replays from the input's cyclic class
};

// Greedy Whitehead descent on cyclic length.  Deterministic tie-break: the
// first move in enumeration order achieving the maximal decrease.
inline MinimizeResult minimize(const Word& u) {
  static thread_local std::unordered_map<std::string, std::vector<WhiteheadMove>> cache;
  std::string cache_key;
  for (const auto& n : u.alphabet()->names()) cache_key += n + ",";
  auto& moves = cache[cache_key];
  if (moves.empty()) moves = enumerate_type_ii(u.alphabet());

  MinimizeResult result;
  result.minimal = cyclic_reduce(u).first;
  for (;;) {
    size_t best = moves.size();
    CyclicWord best_image;
    size_t best_len = result.minimal.length();
    for (size_t i = 0; i < moves.size(); ++i) {
      if (moves[i].identity) continue;
      CyclicWord img = apply_move(moves[i], result.minimal);
      if (img.length() < best_len) {
        best_len = img.length();
        best = i;
        best_image = img;
      }
    }
    if (best == moves.size()) break;
    result.minimal = best_image;
    result.witness.push_back(moves[best]);
  }
  return result;
}

// True iff no non-identity Type II move strictly decreases the cyclic length
// of w.  The greedy descent exits exactly at such a fixed point; exposed for
// the property tests.
inline bool is_whitehead_minimal(const CyclicWord& w) {
  for (const auto& m : enumerate_type_ii(w.alphabet()))
    if (!m.identity && apply_move(m, w).length() < w.length()) return false;
  return true;
}

enum class OrbitStrategy { TwoPhase, Interleaved };

struct OrbitOptions {
  size_t budget = 5000000;  // hard cap on member count
  OrbitStrategy strategy = OrbitStrategy::TwoPhase;
  unsigned threads = 1;
};

// The set of all minimal-length cyclic classes automorphism-equivalent to a
// seed, with replayable discovery witnesses.
class Orbit {
 public:
  const CyclicWord& seed_minimal() const { return seed_min_; }
  const std::vector<WhiteheadMove>& seed_witness() const { return seed_witness_; }
  size_t min_length() const { return seed_min_.length(); }
  size_t size() const { return keys_.size(); }
  const AlphabetRef& alphabet() const { return alphabet_; }

  bool contains(const CyclicWord& w) const { return index_.count(w.key()) != 0; }

  std::vector<CyclicWord> members_sorted() const {
    std::vector<std::string> keys = keys_;
    std::sort(keys.begin(), keys.end(), [](const std::string& a, const std::string& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<CyclicWord> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.push_back(member_from_key(k));
    return out;
  }

  // Moves taking the minimized seed's class to the member's class.
  std::vector<WhiteheadMove> witness_for(const CyclicWord& member) const {
    auto it = index_.find(member.key());
    if (it == index_.end()) throw Error("not an orbit member");
    std::vector<WhiteheadMove> path;
    for (int32_t i = static_cast<int32_t>(it->second); parent_[i] >= 0; i = parent_[i])
      path.push_back(moves_[via_move_[i]]);
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  friend Orbit orbit(const Word&, const OrbitOptions&);

  CyclicWord member_from_key(const std::string& k) const {
    std::vector<Letter> ls;
    ls.reserve(k.size());
    for (char c : k) ls.push_back(Letter{static_cast<uint8_t>(c)});
    return CyclicWord::from_cyclically_reduced(alphabet_, std::move(ls));
  }

  uint32_t insert(const std::string& key, int32_t parent, int32_t via, size_t budget) {
    auto [it, fresh] = index_.emplace(key, static_cast<uint32_t>(keys_.size()));
    if (fresh) {
      if (keys_.size() >= budget) throw BudgetExceeded(keys_.size());
      keys_.push_back(key);
      parent_.push_back(parent);
      via_move_.push_back(via);
    }
    return it->second;
  }

  AlphabetRef alphabet_;
  CyclicWord seed_min_;
  std::vector<WhiteheadMove> seed_witness_;
  std::vector<WhiteheadMove> moves_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, uint32_t> index_;
  std::vector<int32_t> parent_;
  std::vector<int32_t> via_move_;
};

inline Orbit orbit(const Word& u, const OrbitOptions& options = {}) {
  if (options.budget == 0) throw Error("orbit budget must be positive");
  Orbit orb;
  orb.alphabet_ = u.alphabet();
  auto mr = minimize(u);
  orb.seed_min_ = mr.minimal;
  orb.seed_witness_ = std::move(mr.witness);
  const size_t min_len = orb.seed_min_.length();

  std::vector<WhiteheadMove> type_ii = enumerate_type_ii(u.alphabet());
  std::vector<WhiteheadMove> type_i = enumerate_type_i(u.alphabet());
  std::vector<size_t> bfs_moves;  // indices into orb.moves_ used during BFS
  for (auto& m : type_ii)
    if (!m.identity) {
      orb.moves_.push_back(m);
      bfs_moves.push_back(orb.moves_.size() - 1);
    }
  size_t first_type_i = orb.moves_.size();
  for (auto& m : type_i)
    if (!m.identity) {
      orb.moves_.push_back(m);
      if (options.strategy == OrbitStrategy::Interleaved)
        bfs_moves.push_back(orb.moves_.size() - 1);
    }

  orb.insert(orb.seed_min_.key(), -1, -1, options.budget);

  // Breadth-first closure at constant cyclic length.
  auto expand = [&](uint32_t member_index) {
    CyclicWord w = orb.member_from_key(orb.keys_[member_index]);
    std::vector<std::pair<std::string, size_t>> out;
    for (size_t mi : bfs_moves) {
      CyclicWord img = apply_move(orb.moves_[mi], w);
      if (img.length() == min_len) out.emplace_back(img.key(), mi);
    }
    return out;
  };

  std::vector<uint32_t> frontier = {0};
  while (!frontier.empty()) {
    std::vector<std::vector<std::pair<std::string, size_t>>> results(frontier.size());
    if (options.threads > 1 && frontier.size() > 1) {
      const unsigned nthreads =
          std::min<unsigned>(options.threads, static_cast<unsigned>(frontier.size()));
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < nthreads; ++t)
        pool.emplace_back([&, t] {
          for (size_t i = t; i < frontier.size(); i += nthreads)
            results[i] = expand(frontier[i]);
        });
      for (auto& th : pool) th.join();
    } else {
      for (size_t i = 0; i < frontier.size(); ++i) results[i] = expand(frontier[i]);
    }
    std::vector<uint32_t> next;
    for (size_t i = 0; i < frontier.size(); ++i)
      for (auto& [key, mi] : results[i]) {
        size_t before = orb.keys_.size();
        uint32_t idx = orb.insert(key, static_cast<int32_t>(frontier[i]),
                                  static_cast<int32_t>(mi), options.budget);
        if (orb.keys_.size() > before) next.push_back(idx);
      }
    frontier = std::move(next);
  }

  if (options.strategy == OrbitStrategy::TwoPhase) {
    // One pass of all Type I moves closes the set: signed permutations form
    // a group, so their orbit of a Type-II-closed set needs no iteration.
    const size_t type_ii_members = orb.keys_.size();
    for (size_t i = 0; i < type_ii_members; ++i) {
      CyclicWord w = orb.member_from_key(orb.keys_[i]);
      for (size_t mi = first_type_i; mi < orb.moves_.size(); ++mi) {
        CyclicWord img = apply_move(orb.moves_[mi], w);
        orb.insert(img.key(), static_cast<int32_t>(i), static_cast<int32_t>(mi),
                   options.budget);
      }
    }
  }
  return orb;
}

struct EquivalenceResult {
  bool equivalent = false;
  // On success: moves replaying the first word's minimized cyclic class to
  // the second word's minimized canonical class.
  std::vector<WhiteheadMove> witness;
  size_t orbit_size = 0;
  size_t min_length = 0;
};

inline EquivalenceResult equivalent(const Word& u, const Word& v,
                                    const OrbitOptions& options = {}) {
  if (!same_alphabet(u.alphabet(), v.alphabet())) throw AlphabetMismatch();
  EquivalenceResult res;
  auto mv = minimize(v);
  auto mu_len = minimize(u).minimal.length();
  res.min_length = mu_len;
  if (mu_len != mv.minimal.length()) return res;
  Orbit orb = orbit(u, options);
  res.orbit_size = orb.size();
  if (!orb.contains(mv.minimal)) return res;
  res.equivalent = true;
  res.witness = orb.seed_witness();
  auto path = orb.witness_for(mv.minimal);
  res.witness.insert(res.witness.end(), path.begin(), path.end());
  return res;
}

inline EquivalenceResult inverse_equivalent(const Word& u, const OrbitOptions& options = {}) {
  return equivalent(u, invert(u), options);
}

// A word is primitive iff its minimal cyclic length is 1.
inline bool is_primitive(const Word& u, const OrbitOptions& = {}) {
  return minimize(u).minimal.length() == 1;
}

}  // namespace fg
