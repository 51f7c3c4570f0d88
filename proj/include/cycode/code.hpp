#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycode/errors.hpp"
#include "cycode/integer.hpp"
#include "cycode/ring.hpp"

namespace cycode {

/// Default ceiling on the number of enumerated objects (codewords, tuples,
/// subcodes, orbit points) before an enumeration_limit_error is raised.
inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t{1} << 20;

struct EnumOptions {
  std::uint64_t max_enum = kDefaultEnumCap;
  /// Cross-check closed-form cycle structures against explicit orbit
  /// decomposition wherever both are available.
  bool oracle = false;
};

using Row = std::vector<Element>;
using Matrix = std::vector<Row>;

namespace detail {

/// In-place row reduction over a field; returns the rank. Rows below the
/// rank are zeroed.
inline std::size_t rref(const Ring& ring, Matrix& m) {
  if (!ring.is_field()) throw std::invalid_argument("rref requires a field");
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    const Element inv = ring.inv(m[rank][col]);
    for (std::size_t j = 0; j < cols; ++j) m[rank][j] = ring.mul(m[rank][j], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Element factor = m[r][col];
      for (std::size_t j = 0; j < cols; ++j)
        m[r][j] = ring.sub(m[r][j], ring.mul(factor, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// A linear code over a finite field or over Z_k, given by generator rows.
/// Field codes are stored in row-reduced echelon form with k = rank; Z_k
/// codes keep the rows as given and enumerate the additive closure.
class Code {
 public:
  Code(Ring ring, Matrix rows, const EnumOptions& opt = {}) : ring_(std::move(ring)) {
    if (rows.empty()) throw std::invalid_argument("generator matrix must have at least one row");
    n_ = rows[0].size();
    if (n_ == 0) throw std::invalid_argument("generator rows must be non-empty");
    for (const auto& row : rows) {
      if (row.size() != n_) throw std::invalid_argument("ragged generator matrix");
      for (Element e : row) ring_.validate(e);
    }
    if (ring_.is_field()) {
      Matrix reduced = rows;
      const std::size_t rank = detail::rref(ring_, reduced);
      reduced.resize(rank == 0 ? 0 : rank);
      generators_ = std::move(reduced);
      k_ = rank;
      size_ = ipow(Integer(ring_.size()), k_);
    } else {
      generators_ = std::move(rows);
      k_ = generators_.size();
      closure_ = additive_closure(opt.max_enum);
      size_ = Integer(closure_.size());
    }
  }

  const Ring& ring() const { return ring_; }
  std::size_t length() const { return n_; }
  /// Rank over fields; generator row count over Z_k.
  std::size_t rank() const { return k_; }
  const Matrix& generators() const { return generators_; }
  const Integer& codeword_count() const { return size_; }

  std::string description() const {
    std::string s = "[" + std::to_string(n_) + "," + std::to_string(k_) + "] over " +
                    ring_.name();
    if (!ring_.is_field()) s += " (|C|=" + size_.str() + ")";
    return s;
  }

  /// All codewords, each exactly once, in deterministic order: message
  /// vectors in lexicographic encoding order over fields, sorted additive
  /// closure over Z_k.
  std::vector<Row> codewords(const EnumOptions& opt = {}) const {
    if (size_ > opt.max_enum)
      throw enumeration_limit_error("code has " + size_.str() +
                                    " codewords, above the enumeration limit of " +
                                    std::to_string(opt.max_enum));
    if (!ring_.is_field()) return closure_;
    std::vector<Row> out;
    out.reserve(static_cast<std::size_t>(size_));
    Row message(k_, 0);
    while (true) {
      out.push_back(encode(message));
      std::size_t j = k_;
      while (j > 0) {
        --j;
        if (++message[j] < ring_.size()) break;
        message[j] = 0;
        if (j == 0) return out;
      }
      if (k_ == 0) return out;
    }
  }

  /// Codeword for one message vector (field codes): sum of message[j] times
  /// generator row j.
  Row encode(const Row& message) const {
    if (message.size() != k_) throw std::invalid_argument("message length must equal the rank");
    Row word(n_, 0);
    for (std::size_t j = 0; j < k_; ++j) {
      if (message[j] == 0) continue;
      for (std::size_t i = 0; i < n_; ++i)
        word[i] = ring_.add(word[i], ring_.mul(message[j], generators_[j][i]));
    }
    return word;
  }

 private:
  std::vector<Row> additive_closure(std::uint64_t cap) const {
    std::set<Row> seen;
    seen.insert(Row(n_, 0));
    std::vector<Row> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
      std::vector<Row> next;
      for (const Row& w : frontier) {
        for (const Row& gen : generators_) {
          Row sum(n_);
          for (std::size_t i = 0; i < n_; ++i) sum[i] = ring_.add(w[i], gen[i]);
          if (seen.insert(sum).second) {
            if (seen.size() > cap)
              throw enumeration_limit_error("additive closure exceeds the enumeration limit of " +
                                            std::to_string(cap));
            next.push_back(std::move(sum));
          }
        }
      }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  Ring ring_;
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  Matrix generators_;
  std::vector<Row> closure_;  // Z_k only, sorted
  Integer size_;
};

inline Code make_code(const Ring& ring, const Matrix& rows, const EnumOptions& opt = {}) {
  return Code(ring, rows, opt);
}

/// An element of C^g: a g x n matrix whose rows are codewords. Column i is
/// the translation applied at position i by the induced permutation.
struct GroupElement {
  Matrix rows;  // g rows of length n

  std::size_t genus() const { return rows.size(); }
  std::size_t length() const { return rows.empty() ? 0 : rows[0].size(); }

  Row column(std::size_t i) const {
    Row col(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) col[j] = rows[j][i];
    return col;
  }

  /// Canonical identifier: row-major comma-joined entry encodings. Injective
  /// over C^g for fixed g and n.
  std::string id() const {
    std::string s;
    for (const auto& row : rows)
      for (Element e : row) {
        if (!s.empty()) s += ',';
        s += std::to_string(e);
      }
    return s;
  }
};

/// The sequence of all |C|^g elements of C^g in lexicographic order over the
/// g rows (first row most significant), rows ordered as Code::codewords.
/// Random access; restartable; immutable after construction.
class TupleSequence {
 public:
  TupleSequence(const Code& code, std::size_t g, const EnumOptions& opt = {}) : genus_(g) {
    if (g == 0) throw std::invalid_argument("genus must be at least 1");
    const Integer total = ipow(code.codeword_count(), g);
    if (total > opt.max_enum)
      throw enumeration_limit_error("|C|^g = " + total.str() +
                                    " exceeds the enumeration limit of " +
                                    std::to_string(opt.max_enum));
    words_ = code.codewords(opt);
    size_ = static_cast<std::uint64_t>(total);
  }

  std::uint64_t size() const { return size_; }
  std::size_t genus() const { return genus_; }

  GroupElement operator[](std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("tuple index out of range");
    GroupElement h;
    h.rows.resize(genus_);
    const std::uint64_t base = words_.size();
    for (std::size_t j = genus_; j-- > 0;) {
      h.rows[j] = words_[static_cast<std::size_t>(index % base)];
      index /= base;
    }
    return h;
  }

  class iterator {
   public:
    iterator(const TupleSequence* seq, std::uint64_t i) : seq_(seq), i_(i) {}
    GroupElement operator*() const { return (*seq_)[i_]; }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    bool operator!=(const iterator& other) const { return i_ != other.i_; }

   private:
    const TupleSequence* seq_;
    std::uint64_t i_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  std::size_t genus_;
  std::vector<Row> words_;
  std::uint64_t size_ = 0;
};

inline TupleSequence enumerate_tuples(const Code& code, std::size_t g,
                                      const EnumOptions& opt = {}) {
  return TupleSequence(code, g, opt);
}

struct WeightData {
  std::size_t weight = 0;                    // number of positions with a nonzero column
  std::vector<std::size_t> zero_positions;   // 0-based
  std::vector<std::size_t> nonzero_positions;
};

inline WeightData weight_data(const GroupElement& h) {
  WeightData out;
  const std::size_t n = h.length();
  for (std::size_t i = 0; i < n; ++i) {
    bool zero = true;
    for (const auto& row : h.rows)
      if (row[i] != 0) {
        zero = false;
        break;
      }
    if (zero)
      out.zero_positions.push_back(i);
    else
      out.nonzero_positions.push_back(i);
  }
  out.weight = out.nonzero_positions.size();
  return out;
}

/// Number of r-dimensional subspaces of a k-dimensional space over F_q.
inline Integer gaussian_binomial(std::size_t k, std::size_t r, std::uint64_t q) {
  if (r > k) throw std::invalid_argument("gaussian_binomial requires r <= k");
  if (q < 2) throw std::invalid_argument("gaussian_binomial requires q >= 2");
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < r; ++i) {
    num *= ipow(Integer(q), k - i) - 1;
    den *= ipow(Integer(q), i + 1) - 1;
  }
  if (num % den != 0) throw std::logic_error("gaussian_binomial: non-integral quotient");
  return num / den;
}

/// An r-dimensional subcode D of a field code, selected by an r x k RREF
/// matrix over the message space.
struct Subcode {
  Matrix basis;  // r x k, RREF, rank r
  std::size_t support_size = 0;
};

/// All r-dimensional subspaces of the message space, one Subcode per
/// subspace, via every r x k RREF matrix of rank r (pivot-column choices
/// with free entries above later pivots).
inline std::vector<Subcode> enumerate_subcodes(const Code& code, std::size_t r,
                                               const EnumOptions& opt = {}) {
  if (!code.ring().is_field())
    throw std::invalid_argument("subcode enumeration requires a field code");
  const std::size_t k = code.rank();
  if (r > k) throw std::invalid_argument("subcode dimension exceeds the code rank");
  const Integer count = gaussian_binomial(k, r, code.ring().size());
  if (count > opt.max_enum)
    throw enumeration_limit_error("subspace count " + count.str() +
                                  " exceeds the enumeration limit of " +
                                  std::to_string(opt.max_enum));
  const Ring& ring = code.ring();
  const std::size_t n = code.length();

  std::vector<Subcode> out;
  out.reserve(static_cast<std::size_t>(count));

  auto emit = [&](const Matrix& basis) {
    // Support of D = span(rows of basis * generators): the nonzero columns
    // of the r x n image matrix.
    std::size_t support = 0;
    for (std::size_t col = 0; col < n; ++col) {
      bool nonzero = false;
      for (std::size_t row = 0; row < r && !nonzero; ++row) {
        Element v = 0;
        for (std::size_t j = 0; j < k; ++j)
          v = ring.add(v, ring.mul(basis[row][j], code.generators()[j][col]));
        nonzero = v != 0;
      }
      if (nonzero) ++support;
    }
    out.push_back(Subcode{basis, support});
  };

  if (r == 0) {
    emit(Matrix{});
    return out;
  }

  // Pivot columns p_0 < ... < p_{r-1}; entry (i, j) is free iff j > p_i and
  // j is not a pivot column.
  std::vector<std::size_t> pivots(r);
  for (std::size_t i = 0; i < r; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;
    std::vector<bool> is_pivot(k, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = pivots[i] + 1; j < k; ++j)
        if (!is_pivot[j]) free_cells.emplace_back(i, j);

    Matrix basis(r, Row(k, 0));
    for (std::size_t i = 0; i < r; ++i) basis[i][pivots[i]] = 1;
    std::vector<Element> values(free_cells.size(), 0);
    while (true) {
      for (std::size_t c = 0; c < free_cells.size(); ++c)
        basis[free_cells[c].first][free_cells[c].second] = values[c];
      emit(basis);
      std::size_t c = values.size();
      bool carried_out = true;
      while (c > 0) {
        --c;
        if (++values[c] < ring.size()) {
          carried_out = false;
          break;
        }
        values[c] = 0;
      }
      if (carried_out) break;
    }

    // Next pivot combination in lexicographic order.
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (pivots[i] + (r - i) < k) {
        ++pivots[i];
        for (std::size_t j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
}

}  // namespace cycode
