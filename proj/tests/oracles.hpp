// Independent reference computations used only by tests. Each oracle takes
// the dumbest correct route (repeated addition, literal tables, exhaustive
// closure) so that it shares no nontrivial logic with the library code it
// cross-checks.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "cycode/code.hpp"
#include "cycode/ring.hpp"

namespace oracles {

using cycode::Code;
using cycode::Element;
using cycode::Ring;
using cycode::Row;

/// Additive order of a column by literally adding it to itself.
inline std::uint64_t order_by_repeated_addition(const Ring& ring, const Row& column) {
  Row acc(column.size(), 0);
  std::uint64_t order = 0;
  do {
    for (std::size_t j = 0; j < column.size(); ++j) acc[j] = ring.add(acc[j], column[j]);
    ++order;
  } while (std::any_of(acc.begin(), acc.end(), [](Element e) { return e != 0; }));
  return order;
}

/// GF(4) = {0, 1, w, w+1} with w^2 = w + 1, encoded 0..3: the full
/// multiplication table, written out from the defining relation.
inline Element gf4_mul(Element a, Element b) {
  static constexpr Element table[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 2, 3},
      {0, 2, 3, 1},
      {0, 3, 1, 2},
  };
  return table[a][b];
}

/// Closure of a set of words under addition and scalar multiplication.
inline std::set<Row> span_of(const Ring& ring, const std::vector<Row>& words, std::size_t n) {
  std::set<Row> span;
  span.insert(Row(n, 0));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Row> current(span.begin(), span.end());
    for (const Row& u : current) {
      for (const Row& w : words) {
        for (Element s : ring.elements()) {
          Row v(n);
          for (std::size_t i = 0; i < n; ++i) v[i] = ring.add(u[i], ring.mul(s, w[i]));
          grew = span.insert(std::move(v)).second || grew;
        }
      }
    }
  }
  return span;
}

/// All r-dimensional subspaces of a small field code (q^k <= 64), collected
/// by deduplicating the spans of every r-subset of codewords.
inline std::set<std::set<Row>> subspaces_by_span_collection(const Code& code, std::size_t r) {
  const auto words = code.codewords();
  const std::uint64_t target = [&] {
    std::uint64_t t = 1;
    for (std::size_t i = 0; i < r; ++i) t *= code.ring().size();
    return t;
  }();
  std::set<std::set<Row>> found;
  std::vector<std::size_t> pick(r);
  // Iterate all r-subsets of the codeword list by index combinations.
  if (r == 0) {
    found.insert(span_of(code.ring(), {}, code.length()));
    return found;
  }
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  if (words.size() < r) return found;
  while (true) {
    std::vector<Row> subset;
    for (std::size_t i : pick) subset.push_back(words[i]);
    std::set<Row> span = span_of(code.ring(), subset, code.length());
    if (span.size() == target) found.insert(std::move(span));
    std::size_t i = r;
    bool done = true;
    while (i > 0) {
      --i;
      if (pick[i] + (r - i) < words.size()) {
        ++pick[i];
        for (std::size_t j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
        done = false;
        break;
      }
    }
    if (done) break;
  }
  return found;
}

/// Support size of a set of words: positions where some word is nonzero.
inline std::size_t support_of(const std::set<Row>& words, std::size_t n) {
  std::size_t support = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (const Row& w : words)
      if (w[i] != 0) {
        ++support;
        break;
      }
  return support;
}

}  // namespace oracles
