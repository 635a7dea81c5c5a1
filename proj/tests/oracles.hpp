// Brute-force reference implementations used only by the tests.  These stay
// deliberately independent of the library code paths they check: words are
// plain vectors, reduction is a repeated scan, automorphism tables are built
// directly from their definitions, and equivalence is decided by an
// interleaved non-increasing closure with no phase structure.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <fgword/words.hpp>

namespace oracle {

struct L {
  int gen;
  int sign;
  bool operator==(const L& o) const { return gen == o.gen && sign == o.sign; }
  bool operator<(const L& o) const {
    if (gen != o.gen) return gen < o.gen;
    return sign > o.sign;  // +1 before -1
  }
};

using W = std::vector<L>;

inline W reduce(W w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i].gen == w[i + 1].gen && w[i].sign == -w[i + 1].sign) {
        w.erase(w.begin() + i, w.begin() + i + 2);
        changed = true;
        break;
      }
  }
  return w;
}

inline W inv(const W& w) {
  W out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->sign});
  return out;
}

inline W mul(W a, const W& b) {
  a.insert(a.end(), b.begin(), b.end());
  return reduce(std::move(a));
}

// Images of the positive generators.
using Table = std::vector<W>;

inline W subst(const Table& t, const W& w) {
  W out;
  for (const L& l : w) {
    W piece = l.sign > 0 ? t[l.gen] : inv(t[l.gen]);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return reduce(std::move(out));
}

// All Whitehead automorphism tables for the given rank, built straight from
// the definitions: signed permutations, and for each multiplier letter a and
// cut set A containing a but not a^-1 the map sending x to x, xa, a^-1 x or
// a^-1 x a according to membership of x, x^-1 in A.
inline std::vector<Table> all_whitehead_tables(int rank) {
  std::vector<Table> tables;
  // Type I.
  std::vector<int> perm(rank);
  for (int i = 0; i < rank; ++i) perm[i] = i;
  do {
    for (int signs = 0; signs < (1 << rank); ++signs) {
      Table t;
      for (int g = 0; g < rank; ++g)
        t.push_back({L{perm[g], (signs >> g) & 1 ? -1 : 1}});
      tables.push_back(t);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Type II.  Letters are (gen, sign); enumerate cut sets over the letters
  // other than a and a^-1.
  std::vector<L> letters;
  for (int g = 0; g < rank; ++g) {
    letters.push_back({g, 1});
    letters.push_back({g, -1});
  }
  for (const L& a : letters) {
    std::vector<L> eligible;
    for (const L& l : letters)
      if (!(l == a) && !(l == L{a.gen, -a.sign})) eligible.push_back(l);
    for (int mask = 0; mask < (1 << eligible.size()); ++mask) {
      std::set<std::pair<int, int>> cut = {{a.gen, a.sign}};
      for (size_t i = 0; i < eligible.size(); ++i)
        if (mask & (1 << i)) cut.insert({eligible[i].gen, eligible[i].sign});
      Table t;
      for (int g = 0; g < rank; ++g) {
        if (g == a.gen) {
          t.push_back({L{g, 1}});
          continue;
        }
        bool pos = cut.count({g, 1}), neg = cut.count({g, -1});
        W img;
        if (neg) img.push_back({a.gen, -a.sign});
        img.push_back({g, 1});
        if (pos) img.push_back(a);
        t.push_back(reduce(img));
      }
      tables.push_back(t);
    }
  }
  return tables;
}

inline W cyclic_reduce(W w) {
  while (w.size() >= 2 && w.front().gen == w.back().gen && w.front().sign == -w.back().sign) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

inline W least_rotation(W w) {
  if (w.size() < 2) return w;
  W best = w;
  for (size_t i = 1; i < w.size(); ++i) {
    std::rotate(w.begin(), w.begin() + 1, w.end());
    if (std::lexicographical_compare(w.begin(), w.end(), best.begin(), best.end()))
      best = w;
  }
  return best;
}

inline W canon(const W& w) { return least_rotation(cyclic_reduce(reduce(w))); }

// All cyclic classes reachable from w by chains of Whitehead automorphisms
// whose cyclic length never increases.  Two words are automorphism
// equivalent iff their reachable sets intersect.
inline std::set<W> nonincreasing_closure(const W& start, int rank) {
  static std::map<int, std::vector<Table>> table_cache;
  auto& tables = table_cache[rank];
  if (tables.empty()) tables = all_whitehead_tables(rank);

  std::set<W> seen;
  std::vector<W> frontier = {canon(start)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<W> next;
    for (const W& w : frontier)
      for (const Table& t : tables) {
        W img = canon(subst(t, w));
        if (img.size() <= w.size() && !seen.count(img)) {
          seen.insert(img);
          next.push_back(img);
        }
      }
    frontier = std::move(next);
  }
  return seen;
}

inline bool oracle_equivalent(const W& u, const W& v, int rank) {
  auto ru = nonincreasing_closure(u, rank);
  auto rv = nonincreasing_closure(v, rank);
  for (const W& w : ru)
    if (rv.count(w)) return true;
  return false;
}

// --- bridges to the library types -------------------------------------------

inline W from_word(const fg::Word& w) {
  W out;
  for (fg::Letter l : w.letters()) out.push_back({static_cast<int>(l.gen()), l.sign()});
  return out;
}

inline fg::Word to_word(const fg::AlphabetRef& alphabet, const W& w) {
  std::vector<fg::Letter> ls;
  for (const L& l : w) ls.push_back(fg::Letter::make(l.gen, l.sign));
  return fg::Word(alphabet, std::move(ls));
}

// --- random and exhaustive word generation ----------------------------------

inline fg::Word random_reduced_word(const fg::AlphabetRef& alphabet, size_t length,
                                    std::mt19937_64& rng) {
  std::vector<fg::Letter> ls;
  while (ls.size() < length) {
    fg::Letter l = fg::Letter::make(rng() % alphabet->rank(), rng() % 2 ? +1 : -1);
    if (!ls.empty() && ls.back() == l.inverse()) continue;
    ls.push_back(l);
  }
  return fg::Word(alphabet, std::move(ls));
}

// All freely reduced letter sequences of exactly the given length.
inline void enumerate_reduced(const fg::AlphabetRef& alphabet, size_t length,
                              const std::function<void(const fg::Word&)>& fn) {
  std::vector<fg::Letter> current;
  std::function<void()> rec = [&]() {
    if (current.size() == length) {
      fn(fg::Word(alphabet, current));
      return;
    }
    for (size_t code = 0; code < 2 * alphabet->rank(); ++code) {
      fg::Letter l{static_cast<uint8_t>(code)};
      if (!current.empty() && current.back() == l.inverse()) continue;
      current.push_back(l);
      rec();
      current.pop_back();
    }
  };
  rec();
}

// All cyclically reduced letter sequences of exactly the given length.
inline void enumerate_cyclically_reduced(const fg::AlphabetRef& alphabet, size_t length,
                                         const std::function<void(const fg::Word&)>& fn) {
  enumerate_reduced(alphabet, length, [&](const fg::Word& w) {
    const auto& ls = w.letters();
    if (ls.size() == length &&
        (ls.size() < 2 || ls.front() != ls.back().inverse()))
      fn(w);
  });
}

}  // namespace oracle
