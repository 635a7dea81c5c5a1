// JSON forms for words, generator maps and Whitehead moves.

#pragma once

#include <json.hpp>

#include "whitehead.hpp"

namespace fg {

using nlohmann::json;

struct FixtureError : Error {
  std::string invariant;
  FixtureError(const std::string& inv, const std::string& msg)
      : Error("fixture invariant '" + inv + "' violated: " + msg), invariant(inv) {}
};

inline json alphabet_to_json(const AlphabetRef& a) { return json(a->names()); }

inline AlphabetRef alphabet_from_json(const json& j) {
  return make_alphabet(j.get<std::vector<std::string>>());
}

inline json word_to_json(const Word& w) { return json(format_word(w)); }

inline Word word_from_json(const json& j, const AlphabetRef& alphabet) {
  return parse_word(j.get<std::string>(), alphabet);
}

// { "source": [names], "target": [names], "images": [word strings] }
inline json genmap_to_json(const GenMap& m) {
  json images = json::array();
  for (const auto& w : m.images()) images.push_back(format_word(w));
  return json{{"source", alphabet_to_json(m.source())},
              {"target", alphabet_to_json(m.target())},
              {"images", images}};
}

inline GenMap genmap_from_json(const json& j, AlphabetRef source = nullptr,
                               AlphabetRef target = nullptr) {
  if (!source) source = alphabet_from_json(j.at("source"));
  if (!target) target = alphabet_from_json(j.at("target"));
  std::vector<Word> images;
  for (const auto& s : j.at("images")) images.push_back(word_from_json(s, target));
  return GenMap(source, target, std::move(images));
}

inline json move_to_json(const WhiteheadMove& m) {
  const auto& alphabet = m.map.source();
  auto letter_str = [&](Letter l) {
    return alphabet->name(l.gen()) + (l.sign() < 0 ? "^-1" : "");
  };
  json j{{"type", m.kind == WhiteheadMove::Kind::TypeII ? "II" : "I"},
         {"describe", m.describe()}};
  if (m.kind == WhiteheadMove::Kind::TypeII) {
    j["multiplier"] = letter_str(m.multiplier);
    json cut = json::array();
    for (Letter l : m.cut) cut.push_back(letter_str(l));
    j["cut"] = cut;
  } else {
    json perm = json::object();
    for (size_t g = 0; g < m.perm.size(); ++g)
      perm[alphabet->name(g)] = letter_str(m.perm[g]);
    j["perm"] = perm;
  }
  return j;
}

inline json witness_to_json(const std::vector<WhiteheadMove>& witness) {
  json j = json::array();
  for (const auto& m : witness) j.push_back(move_to_json(m));
  return j;
}

}  // namespace fg
