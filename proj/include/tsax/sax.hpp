#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsax/breakpoints.hpp"
#include "tsax/errors.hpp"

namespace tsax {

using Symbol = std::uint8_t;

/// The symbolic part of a representation: m symbol indices in [0, alpha)
/// for a series of original length n.
class SaxWord {
 public:
  SaxWord(std::vector<Symbol> symbols, std::size_t n, std::size_t alpha)
      : symbols_(std::move(symbols)), n_(n), alpha_(alpha) {
    if (symbols_.empty() || symbols_.size() > n_) {
      throw InvalidParameter("word length must be in [1, n]");
    }
    if (alpha_ < kMinAlphabet || alpha_ > kMaxAlphabet) {
      throw InvalidParameter("alphabet size must be in [2, 20], got " + std::to_string(alpha_));
    }
    for (Symbol s : symbols_) {
      if (s >= alpha_) throw InvalidInput("symbol index " + std::to_string(s) + " out of range");
    }
  }

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  std::size_t n() const noexcept { return n_; }
  std::size_t alpha() const noexcept { return alpha_; }

  // Letters 'a', 'b', ... as printed in the SAX literature.
  std::string str() const {
    std::string s;
    s.reserve(symbols_.size());
    for (Symbol x : symbols_) s.push_back(static_cast<char>('a' + x));
    return s;
  }

  static SaxWord from_string(std::string_view letters, std::size_t n, std::size_t alpha) {
    std::vector<Symbol> symbols;
    symbols.reserve(letters.size());
    for (char ch : letters) {
      if (ch < 'a' || ch > 'z') throw InvalidInput(std::string("not a symbol letter: ") + ch);
      symbols.push_back(static_cast<Symbol>(ch - 'a'));
    }
    return SaxWord(std::move(symbols), n, alpha);
  }

  friend bool operator==(const SaxWord&, const SaxWord&) = default;

 private:
  std::vector<Symbol> symbols_;
  std::size_t n_;
  std::size_t alpha_;
};

/// Maps a single coefficient to its symbol: the smallest i with v <= breakpoint[i],
/// or alpha - 1 above the last breakpoint. Values on a breakpoint take the lower symbol.
inline Symbol symbol_for(double v, const BreakpointTable& table) {
  if (!std::isfinite(v)) throw InvalidInput("cannot symbolize a non-finite coefficient");
  const auto& bp = table.breakpoints();
  return static_cast<Symbol>(std::lower_bound(bp.begin(), bp.end(), v) - bp.begin());
}

inline SaxWord symbolize(std::span<const double> paa, std::size_t n, const BreakpointTable& table) {
  std::vector<Symbol> symbols;
  symbols.reserve(paa.size());
  for (double v : paa) symbols.push_back(symbol_for(v, table));
  return SaxWord(std::move(symbols), n, table.alpha());
}

// When the original length is not known, the word is taken to cover one point per coefficient.
inline SaxWord symbolize(std::span<const double> paa, const BreakpointTable& table) {
  return symbolize(paa, paa.size(), table);
}

}  // namespace tsax
