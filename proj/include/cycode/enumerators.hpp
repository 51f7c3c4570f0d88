#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cycode/code.hpp"
#include "cycode/integer.hpp"
#include "cycode/polynomial.hpp"

namespace cycode {

namespace detail {

inline std::size_t hamming_weight(const Row& word) {
  std::size_t w = 0;
  for (Element e : word)
    if (e != 0) ++w;
  return w;
}

inline Monomial xy_monomial(std::size_t n, std::size_t weight) {
  Monomial m;
  if (weight < n) m.emplace_back(XYVar{false}, n - weight);
  if (weight > 0) m.emplace_back(XYVar{true}, weight);
  return m;
}

}  // namespace detail

/// w_C(x, y) = sum over codewords c of x^{n - wt(c)} y^{wt(c)}.
inline Polynomial weight_enumerator(const Code& code, const EnumOptions& opt = {}) {
  Polynomial w;
  for (const Row& c : code.codewords(opt))
    w.add_term(detail::xy_monomial(code.length(), detail::hamming_weight(c)), 1);
  return w;
}

/// Genus-g complete weight enumerator: sum over g-tuples of codewords of
/// prod over labels a in R^g of x_a^{n_a}, where n_a counts the positions
/// whose column equals a.
inline Polynomial complete_weight_enumerator(const Code& code, std::size_t g,
                                             const EnumOptions& opt = {}) {
  Polynomial w;
  for (const GroupElement& h : enumerate_tuples(code, g, opt)) {
    Monomial m;
    m.reserve(code.length());
    for (std::size_t i = 0; i < code.length(); ++i) m.emplace_back(XVar{h.column(i)}, 1);
    w.add_term(std::move(m), 1);
  }
  return w;
}

/// w_C^r(x, y) = sum over r-dimensional subcodes D of x^{n - ||D||} y^{||D||}.
inline Polynomial higher_weight_enumerator(const Code& code, std::size_t r,
                                           const EnumOptions& opt = {}) {
  Polynomial w;
  for (const Subcode& d : enumerate_subcodes(code, r, opt))
    w.add_term(detail::xy_monomial(code.length(), d.support_size), 1);
  return w;
}

/// d_r = min ||D|| over r-dimensional subcodes D, 1 <= r <= k.
inline std::size_t minimum_higher_weight(const Code& code, std::size_t r,
                                         const EnumOptions& opt = {}) {
  if (r < 1 || r > code.rank())
    throw std::invalid_argument("minimum higher weight requires 1 <= r <= k");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const Subcode& d : enumerate_subcodes(code, r, opt)) best = std::min(best, d.support_size);
  return best;
}

/// [g]_r = 1 for r = 0, else (q^g - 1)(q^g - q)...(q^g - q^{r-1}): the
/// number of ordered r-tuples of independent vectors in F_q^g.
struct BracketCoefficient {
  std::size_t g = 0;
  std::size_t r = 0;
  std::uint64_t q = 2;
  Integer value = 1;
};

inline BracketCoefficient bracket_coefficient(std::size_t g, std::size_t r, std::uint64_t q) {
  if (r > g) throw std::invalid_argument("bracket coefficient requires r <= g");
  BracketCoefficient b{g, r, q, 1};
  const Integer qg = ipow(Integer(q), g);
  for (std::size_t j = 0; j < r; ++j) b.value *= qg - ipow(Integer(q), j);
  return b;
}

/// sum over r = 0..g of [g]_r w_C^r(x, y); summands with r above the code
/// rank vanish (no r-dimensional subcodes exist).
inline Polynomial dgo_combination(const Code& code, std::size_t g, const EnumOptions& opt = {}) {
  if (g == 0) throw std::invalid_argument("genus must be at least 1");
  Polynomial total;
  const std::size_t top = std::min(g, code.rank());
  for (std::size_t r = 0; r <= top; ++r)
    total += higher_weight_enumerator(code, r, opt) *
             bracket_coefficient(g, r, code.ring().size()).value;
  return total;
}

}  // namespace cycode
