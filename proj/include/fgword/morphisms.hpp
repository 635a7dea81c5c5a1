// Homomorphisms between free groups as generator-image tables.

#pragma once

#include <optional>

#include "words.hpp"

namespace fg {

// A homomorphism source -> target, given by one image word per source
// generator.  Automorphisms are the invertible case; invertibility is
// certified by an explicit inverse table (AutWitness), never decided by a
// general procedure.
class GenMap {
 public:
  GenMap() = default;
  GenMap(AlphabetRef source, AlphabetRef target, std::vector<Word> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->rank())
      throw Error("generator map needs one image per source generator");
    for (const auto& w : images_)
      if (!same_alphabet(w.alphabet(), target_)) throw AlphabetMismatch();
  }

  static GenMap identity(const AlphabetRef& alphabet) {
    std::vector<Word> images;
    for (size_t i = 0; i < alphabet->rank(); ++i)
      images.emplace_back(alphabet, std::vector<Letter>{Letter::make(i, +1)});
    return GenMap(alphabet, alphabet, std::move(images));
  }

  const AlphabetRef& source() const { return source_; }
  const AlphabetRef& target() const { return target_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(size_t gen) const { return images_[gen]; }

  bool is_identity() const {
    if (!same_alphabet(source_, target_)) return false;
    for (size_t i = 0; i < images_.size(); ++i) {
      const auto& ls = images_[i].letters();
      if (ls.size() != 1 || ls[0] != Letter::make(i, +1)) return false;
    }
    return true;
  }

  bool operator==(const GenMap& o) const {
    return same_alphabet(source_, o.source_) && same_alphabet(target_, o.target_) &&
           images_ == o.images_;
  }
  bool operator!=(const GenMap& o) const { return !(*this == o); }

 private:
  AlphabetRef source_;
  AlphabetRef target_;
  std::vector<Word> images_;
};

inline Word apply(const GenMap& m, const Word& u) {
  if (!same_alphabet(u.alphabet(), m.source())) throw AlphabetMismatch();
  std::vector<Letter> out;
  for (Letter l : u.letters()) {
    const Word& img = m.image(l.gen());
    if (l.sign() > 0) {
      for (Letter x : img.letters()) detail::push_reduced(out, x);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        detail::push_reduced(out, it->inverse());
    }
  }
  return Word(m.target(), std::move(out));
}

// Image of a conjugacy class; well defined because automorphisms and
// homomorphisms send conjugate elements to conjugate elements.
inline CyclicWord apply(const GenMap& m, const CyclicWord& u) {
  return cyclic_reduce(apply(m, u.to_word())).first;
}

inline GenMap compose(const GenMap& outer, const GenMap& inner) {
  if (!same_alphabet(inner.target(), outer.source())) throw AlphabetMismatch();
  std::vector<Word> images;
  images.reserve(inner.images().size());
  for (const auto& w : inner.images()) images.push_back(apply(outer, w));
  return GenMap(inner.source(), outer.target(), std::move(images));
}

inline bool fixes_all_generators(const GenMap& m) {
  return m.is_identity();
}

// Certificate that a GenMap is an automorphism: the inverse table is carried
// along and both compositions fix every generator.
struct AutWitness {
  GenMap forward;
  GenMap backward;

  AutWitness(GenMap fwd, GenMap bwd) : forward(std::move(fwd)), backward(std::move(bwd)) {
    if (!same_alphabet(forward.source(), forward.target()) ||
        !same_alphabet(backward.source(), backward.target()) ||
        !same_alphabet(forward.source(), backward.source()))
      throw Error("automorphism witness must be an endomorphism pair on one alphabet");
    if (!fixes_all_generators(compose(backward, forward)) ||
        !fixes_all_generators(compose(forward, backward)))
      throw Error("inverse table does not invert the map");
  }
};

inline AutWitness compose(const AutWitness& outer, const AutWitness& inner) {
  return AutWitness(compose(outer.forward, inner.forward),
                    compose(inner.backward, outer.backward));
}

inline AutWitness invert(const AutWitness& w) { return AutWitness(w.backward, w.forward); }

namespace detail {

// Signed permutations: every image is a single letter and the letter map is
// a bijection on generators.  Inverse read off directly.
inline std::optional<GenMap> invert_signed_permutation(const GenMap& m) {
  const size_t n = m.source()->rank();
  std::vector<Word> inverse_images(n);
  std::vector<bool> hit(n, false);
  for (size_t g = 0; g < n; ++g) {
    const auto& ls = m.image(g).letters();
    if (ls.size() != 1) return std::nullopt;
    size_t tg = ls[0].gen();
    if (hit[tg]) return std::nullopt;
    hit[tg] = true;
    inverse_images[tg] =
        Word(m.source(), std::vector<Letter>{Letter::make(g, ls[0].sign())});
  }
  return GenMap(m.source(), m.source(), std::move(inverse_images));
}

}  // namespace detail

// Builds the Whitehead Type II table for multiplier letter `a` and cut set
// `cut` (letters, must contain a and not a^-1):
//   a's generator is fixed; any other generator x maps to
//   x, xa, a^-1 x or a^-1 x a depending on membership of x, x^-1 in the cut.
inline GenMap type_ii_genmap(const AlphabetRef& alphabet, Letter a,
                             const std::vector<Letter>& cut) {
  auto in_cut = [&](Letter l) {
    for (Letter c : cut)
      if (c == l) return true;
    return false;
  };
  if (!in_cut(a)) throw Error("cut set must contain the multiplier");
  if (in_cut(a.inverse())) throw Error("cut set must not contain the multiplier inverse");
  std::vector<Word> images;
  for (size_t g = 0; g < alphabet->rank(); ++g) {
    Letter x = Letter::make(g, +1);
    std::vector<Letter> img;
    if (g == a.gen()) {
      img = {x};
    } else {
      bool pos = in_cut(x), neg = in_cut(x.inverse());
      if (neg) img.push_back(a.inverse());
      img.push_back(x);
      if (pos) img.push_back(a);
    }
    images.emplace_back(alphabet, std::move(img));
  }
  return GenMap(alphabet, alphabet, std::move(images));
}

namespace detail {

// Recognizes a Type II table and returns its closed-form inverse,
// W(a, A)^-1 = W(a^-1, (A \ {a}) + {a^-1}).
inline std::optional<GenMap> invert_type_ii(const GenMap& m) {
  const auto& alphabet = m.source();
  const size_t n = alphabet->rank();
  for (size_t ag = 0; ag < n; ++ag) {
    for (int as : {+1, -1}) {
      Letter a = Letter::make(ag, as);
      std::vector<Letter> cut = {a};
      bool ok = true;
      for (size_t g = 0; g < n && ok; ++g) {
        Letter x = Letter::make(g, +1);
        const auto& ls = m.image(g).letters();
        if (g == ag) {
          ok = ls.size() == 1 && ls[0] == x;
          continue;
        }
        if (ls.size() == 1 && ls[0] == x) continue;
        if (ls.size() == 2 && ls[0] == x && ls[1] == a) {
          cut.push_back(x);
        } else if (ls.size() == 2 && ls[0] == a.inverse() && ls[1] == x) {
          cut.push_back(x.inverse());
        } else if (ls.size() == 3 && ls[0] == a.inverse() && ls[1] == x && ls[2] == a) {
          cut.push_back(x);
          cut.push_back(x.inverse());
        } else {
          ok = false;
        }
      }
      if (!ok) continue;
      std::vector<Letter> inv_cut = {a.inverse()};
      for (Letter l : cut)
        if (l != a) inv_cut.push_back(l);
      GenMap candidate = type_ii_genmap(alphabet, a.inverse(), inv_cut);
      if (fixes_all_generators(compose(candidate, m))) return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Certificate-based automorphism check.  Covers the classes this library
// constructs: signed permutations and Whitehead Type II tables, whose
// inverses are known in closed form.  Compositions keep their certificates
// via compose(AutWitness, AutWitness); anything else reports absent.
inline std::optional<AutWitness> is_automorphism(const GenMap& m) {
  if (!same_alphabet(m.source(), m.target())) return std::nullopt;
  if (auto inv = detail::invert_signed_permutation(m)) {
    if (fixes_all_generators(compose(*inv, m)) && fixes_all_generators(compose(m, *inv)))
      return AutWitness(m, *inv);
    return std::nullopt;
  }
  if (auto inv = detail::invert_type_ii(m)) return AutWitness(m, *inv);
  return std::nullopt;
}

}  // namespace fg
