#pragma once

// Braid words and Coxeter words over a graph's vertices.
//
// Convention used throughout the library: a word acts letter by letter from
// left to right, so the first letter is applied first.

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "coxgraph.hpp"

namespace coxtwist {

struct BraidLetter {
  std::size_t vertex = 0;
  int exponent = 1;  // +1 or -1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  std::vector<BraidLetter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  /// Reversed with every exponent negated.
  BraidWord inverse() const {
    BraidWord w;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      w.letters.push_back({it->vertex, -it->exponent});
    return w;
  }

  friend BraidWord operator*(BraidWord a, const BraidWord& b) {
    a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
    return a;
  }
};

/// Words in W: generators are involutions, so there are no exponents.
using CoxeterWord = std::vector<std::size_t>;

/// Whitespace-separated vertex tokens, each optionally suffixed by `^-1`
/// (and, for symmetry, `^1`).
inline BraidWord parse_braid_word(const CoxeterGraph& g, std::string_view text) {
  BraidWord w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int exponent = 1;
    if (auto pos = token.rfind('^'); pos != std::string::npos) {
      auto suffix = token.substr(pos + 1);
      if (suffix == "-1")
        exponent = -1;
      else if (suffix != "1")
        throw GraphError("bad exponent in braid word token '" + token + "'");
      token.resize(pos);
    }
    w.letters.push_back({g.require_index(token), exponent});
  }
  return w;
}

inline CoxeterWord parse_coxeter_word(const CoxeterGraph& g, std::string_view text) {
  CoxeterWord w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.find('^') != std::string::npos)
      throw GraphError("Coxeter words take no exponents: '" + token + "'");
    w.push_back(g.require_index(token));
  }
  return w;
}

inline std::string format_word(const CoxeterGraph& g, const BraidWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += g.name(l.vertex);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

inline std::string format_word(const CoxeterGraph& g, const CoxeterWord& w) {
  std::string out;
  for (auto v : w) {
    if (!out.empty()) out += ' ';
    out += g.name(v);
  }
  return out;
}

}  // namespace coxtwist
