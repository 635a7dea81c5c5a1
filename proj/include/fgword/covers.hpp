// The index-2 cover at the word level: membership in the even subgroup,
// Reidemeister-Schreier rewriting onto a rank-3 basis, and the inclusion map
// back.  Specialized to index 2 over rank 2; the standard cover fixture
// describes the orientation double cover of the once-punctured Klein bottle
// by the twice-punctured torus.

#pragma once

#include "json_io.hpp"

namespace fg {

struct NotInSubgroup : Error {
  NotInSubgroup() : Error("word does not lie in the even subgroup") {}
};

// Index-2 subgroup data: a parity homomorphism to Z/2, the Schreier
// transversal {1, t}, and the Schreier generators of the kernel.
struct CoverData {
  AlphabetRef ambient;
  std::vector<int> parity;        // one bit per ambient generator
  std::vector<Word> transversal;  // coset representatives, even then odd
  AlphabetRef subgroup;
  std::vector<Word> gen_table;    // subgroup generators as ambient words
};

inline int parity_of(const Word& u, const CoverData& cover) {
  if (!same_alphabet(u.alphabet(), cover.ambient)) throw AlphabetMismatch();
  auto sums = exponent_sums(u);
  long p = 0;
  for (size_t g = 0; g < sums.size(); ++g) p += cover.parity[g] * sums[g];
  return static_cast<int>(((p % 2) + 2) % 2);
}

inline bool in_subgroup(const Word& u, const CoverData& cover) {
  return parity_of(u, cover) == 0;
}

namespace detail {

// Schreier generator for (coset, generator): t_c g (t_{c'})^-1.
inline Word schreier_word(const CoverData& cover, int coset, size_t gen) {
  Word g(cover.ambient, std::vector<Letter>{Letter::make(gen, +1)});
  int next = coset ^ cover.parity[gen];
  return multiply(multiply(cover.transversal[coset], g), invert(cover.transversal[next]));
}

}  // namespace detail

inline void validate_cover(const CoverData& cover) {
  if (!cover.ambient || cover.ambient->rank() != 2)
    throw FixtureError("ambient_rank", "ambient alphabet must have rank 2");
  if (!cover.subgroup || cover.subgroup->rank() != 3)
    throw FixtureError("subgroup_rank", "subgroup alphabet must have rank 3");
  if (cover.parity.size() != 2)
    throw FixtureError("parity_bits", "need one parity bit per ambient generator");
  int on = 0;
  for (int b : cover.parity) {
    if (b != 0 && b != 1) throw FixtureError("parity_bits", "bits must be 0 or 1");
    on += b;
  }
  if (on == 0) throw FixtureError("parity_bits", "parity homomorphism must be onto Z/2");
  if (cover.transversal.size() != 2 || !cover.transversal[0].empty())
    throw FixtureError("transversal_shape", "transversal must be {1, t}");
  if (parity_of(cover.transversal[1], cover) != 1)
    throw FixtureError("transversal_shape", "second representative must be odd");
  if (cover.gen_table.size() != 3)
    throw FixtureError("gen_table_size", "index-2 subgroup of F2 has rank 3");
  for (const auto& w : cover.gen_table)
    if (parity_of(w, cover) != 0)
      throw FixtureError("gen_table_in_kernel", "generator '" + format_word(w) +
                                                    "' does not lie in the kernel");
  // The table must list exactly the nontrivial Schreier generators for the
  // transversal, in scan order (coset, then generator).
  std::vector<Word> expected;
  for (int c = 0; c < 2; ++c)
    for (size_t g = 0; g < 2; ++g) {
      Word s = detail::schreier_word(cover, c, g);
      if (!s.empty()) expected.push_back(s);
    }
  if (expected != cover.gen_table)
    throw FixtureError("gen_table_schreier",
                       "generators are not the Schreier generators of the transversal");
}

// Schreier rewriting with the fixture transversal: scan the word tracking
// the current coset, emitting one subgroup letter (or nothing) per ambient
// letter.
inline Word rewrite(const Word& u, const CoverData& cover) {
  if (!in_subgroup(u, cover)) throw NotInSubgroup();
  // Emission table: (coset, generator) -> subgroup letter, or none.
  std::optional<Letter> table[2][2];
  size_t next_index = 0;
  for (int c = 0; c < 2; ++c)
    for (size_t g = 0; g < 2; ++g)
      if (!detail::schreier_word(cover, c, g).empty())
        table[c][g] = Letter::make(next_index++, +1);

  std::vector<Letter> out;
  int coset = 0;
  for (Letter l : u.letters()) {
    if (l.sign() > 0) {
      if (auto s = table[coset][l.gen()]) detail::push_reduced(out, *s);
      coset ^= cover.parity[l.gen()];
    } else {
      int prev = coset ^ cover.parity[l.gen()];
      if (auto s = table[prev][l.gen()]) detail::push_reduced(out, s->inverse());
      coset = prev;
    }
  }
  return Word(cover.subgroup, std::move(out));
}

// Inclusion of the subgroup: substitute each subgroup letter by its table
// word and reduce.
inline Word embed(const Word& s, const CoverData& cover) {
  if (!same_alphabet(s.alphabet(), cover.subgroup)) throw AlphabetMismatch();
  GenMap inclusion(cover.subgroup, cover.ambient, cover.gen_table);
  return apply(inclusion, s);
}

// The standard fixture.  Ambient generators a, b are the two odd loops of
// the base; the kernel has Schreier basis a = b a^-1, b = a^2, c = a b over
// the ambient letters.
inline CoverData klein_cover() {
  CoverData c;
  c.ambient = make_alphabet({"a", "b"});
  c.parity = {1, 1};
  c.transversal = {Word(c.ambient),
                   Word(c.ambient, std::vector<Letter>{Letter::make(0, +1)})};
  c.subgroup = make_alphabet({"a", "b", "c"});
  for (int coset = 0; coset < 2; ++coset)
    for (size_t g = 0; g < 2; ++g) {
      Word s = detail::schreier_word(c, coset, g);
      if (!s.empty()) c.gen_table.push_back(s);
    }
  validate_cover(c);
  return c;
}

inline json cover_to_json(const CoverData& c) {
  json parity = json::object();
  for (size_t g = 0; g < c.ambient->rank(); ++g)
    parity[c.ambient->name(g)] = c.parity[g];
  json transversal = json::array(), table = json::array();
  for (const auto& w : c.transversal) transversal.push_back(format_word(w));
  for (const auto& w : c.gen_table) table.push_back(format_word(w));
  return json{{"schema", 1},
              {"ambient", alphabet_to_json(c.ambient)},
              {"parity", parity},
              {"transversal", transversal},
              {"subgroup", alphabet_to_json(c.subgroup)},
              {"gen_table", table}};
}

inline CoverData cover_from_json(const json& j) {
  CoverData c;
  c.ambient = alphabet_from_json(j.at("ambient"));
  c.parity.resize(c.ambient->rank());
  for (size_t g = 0; g < c.ambient->rank(); ++g)
    c.parity[g] = j.at("parity").at(c.ambient->name(g)).get<int>();
  for (const auto& s : j.at("transversal")) c.transversal.push_back(word_from_json(s, c.ambient));
  c.subgroup = alphabet_from_json(j.at("subgroup"));
  for (const auto& s : j.at("gen_table")) c.gen_table.push_back(word_from_json(s, c.ambient));
  validate_cover(c);
  return c;
}

}  // namespace fg
