#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cycode/code.hpp"
#include "cycode/errors.hpp"
#include "cycode/integer.hpp"
#include "cycode/polynomial.hpp"
#include "cycode/ring.hpp"

namespace cycode {

/// A point of the permutation domain {1,...,n} x R^g.
struct Point {
  std::size_t position = 1;  // 1-based coordinate index
  Row vector;                // g ring elements

  bool operator==(const Point&) const = default;
};

/// Cycle length -> number of cycles of that length.
using CycleType = std::map<std::uint64_t, std::uint64_t>;

/// The (length, count) pair contributed by one position: count cycles of
/// the given length, covering the |R|^g points over that position.
struct PositionCycles {
  std::uint64_t length = 1;
  std::uint64_t count = 1;

  bool operator==(const PositionCycles&) const = default;
};

/// Per-position cycle data for one group element.
struct PositionResolvedEntry {
  std::string id;                     // GroupElement::id()
  std::vector<Row> columns;           // n column labels in R^g
  std::vector<PositionCycles> cycles; // n per-position (length, count) pairs
};

/// Cycle data of a whole induced group, refined position by position; the
/// domain over each position has fiber = |R|^g points.
struct PositionResolvedIndex {
  std::uint64_t fiber = 1;
  std::size_t genus = 1;
  std::vector<PositionResolvedEntry> entries;
};

/// The permutation induced by h: position fixed, vector translated by
/// column `position` of h.
inline Point act(const Ring& ring, const GroupElement& h, const Point& pt) {
  if (pt.position < 1 || pt.position > h.length())
    throw std::invalid_argument("point position out of range");
  if (pt.vector.size() != h.genus())
    throw std::invalid_argument("point vector length must equal the genus");
  Point out = pt;
  for (std::size_t j = 0; j < h.genus(); ++j)
    out.vector[j] = ring.add(pt.vector[j], h.rows[j][pt.position - 1]);
  return out;
}

namespace detail {

/// |R|^g, guarded so that n * |R|^g (total points, also the largest
/// polynomial exponent produced) stays within 64 bits.
inline std::uint64_t fiber_size(const Ring& ring, std::size_t genus, std::size_t n) {
  const Integer fib = ipow(Integer(ring.size()), genus);
  if (Integer(n == 0 ? 1 : n) * fib > Integer(std::numeric_limits<std::uint64_t>::max()))
    throw enumeration_limit_error("point space n*|R|^g exceeds the 64-bit exponent range");
  return static_cast<std::uint64_t>(fib);
}

inline std::uint64_t vector_index(const Ring& ring, const Row& v) {
  std::uint64_t idx = 0;
  for (Element e : v) idx = idx * ring.size() + e;
  return idx;
}

inline Row vector_from_index(const Ring& ring, std::uint64_t idx, std::size_t genus) {
  Row v(genus, 0);
  for (std::size_t j = genus; j-- > 0;) {
    v[j] = static_cast<Element>(idx % ring.size());
    idx /= ring.size();
  }
  return v;
}

}  // namespace detail

/// Exact cycle type by explicit orbit traversal of all n * |R|^g points
/// under repeated application of h. Oracle path: no closed forms.
inline CycleType cycle_type_by_orbits(const Ring& ring, const GroupElement& h,
                                      std::uint64_t max_points = kDefaultEnumCap) {
  const std::size_t n = h.length();
  const std::size_t g = h.genus();
  const std::uint64_t fiber = detail::fiber_size(ring, g, n);
  if (Integer(n) * fiber > max_points)
    throw enumeration_limit_error("orbit enumeration over " + std::to_string(n) + "*" +
                                  std::to_string(fiber) +
                                  " points exceeds the limit of " + std::to_string(max_points));
  CycleType type;
  std::vector<bool> visited(static_cast<std::size_t>(fiber));
  for (std::size_t pos = 1; pos <= n; ++pos) {
    std::fill(visited.begin(), visited.end(), false);
    for (std::uint64_t start = 0; start < fiber; ++start) {
      if (visited[static_cast<std::size_t>(start)]) continue;
      std::uint64_t length = 0;
      Point pt{pos, detail::vector_from_index(ring, start, g)};
      std::uint64_t cur = start;
      do {
        visited[static_cast<std::size_t>(cur)] = true;
        ++length;
        pt = act(ring, h, pt);
        cur = detail::vector_index(ring, pt.vector);
      } while (cur != start);
      ++type[length];
    }
  }
  return type;
}

/// Closed-form cycle type: each position i contributes m_i = |R|^g / l_i
/// cycles of length l_i, where l_i is the additive order of the translation
/// by column i (1 for a zero column; the characteristic p over a field;
/// k / gcd(entries, k) over Z_k).
inline std::pair<CycleType, PositionResolvedEntry> cycle_type_by_formula(
    const Ring& ring, const GroupElement& h) {
  const std::size_t n = h.length();
  const std::uint64_t fiber = detail::fiber_size(ring, h.genus(), n);
  PositionResolvedEntry entry;
  entry.id = h.id();
  entry.columns.reserve(n);
  entry.cycles.reserve(n);
  CycleType type;
  for (std::size_t i = 0; i < n; ++i) {
    Row col = h.column(i);
    const std::uint64_t len = ring.translation_order(col);
    if (fiber % len != 0)
      throw std::logic_error("cycle length does not divide the fiber size");
    const std::uint64_t count = fiber / len;
    type[len] += count;
    entry.columns.push_back(std::move(col));
    entry.cycles.push_back(PositionCycles{len, count});
  }
  return {std::move(type), std::move(entry)};
}

namespace detail {

inline void oracle_check(const Ring& ring, const GroupElement& h, const CycleType& formula,
                         std::uint64_t max_points) {
  const CycleType reference = cycle_type_by_orbits(ring, h, max_points);
  if (formula != reference)
    throw std::logic_error("closed-form cycle type disagrees with orbit decomposition for " +
                           h.id());
}

inline Monomial cycle_monomial(const CycleType& type) {
  Monomial m;
  m.reserve(type.size());
  for (const auto& [len, count] : type) m.emplace_back(SVar{len}, count);
  return m;
}

}  // namespace detail

/// Z(G(C^g); s_1, s_2, ...) = sum over h in C^g of prod_i s_i^{c(h,i)}.
inline Polynomial cycle_index(const Code& code, std::size_t g, const EnumOptions& opt = {}) {
  Polynomial z;
  for (const GroupElement& h : enumerate_tuples(code, g, opt)) {
    auto [type, entry] = cycle_type_by_formula(code.ring(), h);
    if (opt.oracle) detail::oracle_check(code.ring(), h, type, opt.max_enum);
    z.add_term(detail::cycle_monomial(type), 1);
  }
  return z;
}

struct CompleteCycleIndex {
  Polynomial poly;            // one monomial per h in variables s[id;len]
  PositionResolvedIndex index;
};

/// Z(G(C^g); s(h,i)) = sum over h of prod_i s(h,i)^{c(h,i)}, together with
/// the position-resolved refinement consumed by apply_T.
inline CompleteCycleIndex complete_cycle_index(const Code& code, std::size_t g,
                                               const EnumOptions& opt = {}) {
  CompleteCycleIndex out;
  out.index.fiber = detail::fiber_size(code.ring(), g, code.length());
  out.index.genus = g;
  for (const GroupElement& h : enumerate_tuples(code, g, opt)) {
    auto [type, entry] = cycle_type_by_formula(code.ring(), h);
    if (opt.oracle) detail::oracle_check(code.ring(), h, type, opt.max_enum);
    Monomial m;
    m.reserve(type.size());
    for (const auto& [len, count] : type) m.emplace_back(SHVar{entry.id, len}, count);
    out.poly.add_term(std::move(m), 1);
    out.index.entries.push_back(std::move(entry));
  }
  return out;
}

/// Collapses the per-element variables of a complete cycle index:
/// s[h;i] -> s_i recovers the plain cycle index.
inline Polynomial collapse_complete(const Polynomial& complete) {
  return complete.specialize([](const VarId& v) -> VarId {
    if (const auto* sh = std::get_if<SHVar>(&v)) return SVar{sh->length};
    return v;
  });
}

/// The substitution map T: each position i of each group element h becomes
/// x_{a_i}^{(l_i * m_i) / |R|^g} = x_{a_i}, where a_i is column i of h.
/// Exponent arithmetic is exact; a divisibility failure means the
/// position-resolved index is inconsistent.
inline Polynomial apply_T(const PositionResolvedIndex& pri, const Ring& ring) {
  Polynomial out;
  for (const auto& entry : pri.entries) {
    Monomial m;
    m.reserve(entry.columns.size());
    for (std::size_t i = 0; i < entry.columns.size(); ++i) {
      const auto& [len, count] = entry.cycles[i];
      const std::uint64_t points = len * count;
      if (points % pri.fiber != 0)
        throw divisibility_error("position " + std::to_string(i + 1) + " of element " +
                                 entry.id + " covers " + std::to_string(points) +
                                 " points, not a multiple of the fiber " +
                                 std::to_string(pri.fiber));
      std::vector<std::uint32_t> label;
      label.reserve(entry.columns[i].size());
      for (Element e : entry.columns[i]) {
        ring.validate(e);
        label.push_back(e);
      }
      m.emplace_back(XVar{std::move(label)}, points / pri.fiber);
    }
    out.add_term(std::move(m), 1);
  }
  return out;
}

}  // namespace cycode
