#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycode {

/// Ring element, stored as its canonical integer encoding in [0, size).
/// For GF(p^m) the encoding packs the base-p coefficient digits of the
/// representing polynomial, least significant digit first, so encoding 0
/// is the additive and encoding 1 the multiplicative identity.
using Element = std::uint32_t;

enum class RingKind { PrimeField, ExtensionField, IntegerRing };

namespace detail {

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

/// Remainder of a modulo b in GF(p)[x]. Coefficient vectors are little
/// endian; b must be monic.
inline std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                           const std::vector<std::uint32_t>& b,
                                           std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t j = 0; j <= db; ++j) {
        std::uint64_t cur = a[shift + j];
        cur = (cur + static_cast<std::uint64_t>(p) * p - (lead * b[j]) % p) % p;
        a[shift + j] = static_cast<std::uint32_t>(cur);
      }
    }
    a.pop_back();
  }
  return a;
}

inline bool poly_is_zero(const std::vector<std::uint32_t>& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

/// Irreducibility of a monic polynomial over GF(p), by trial division
/// against every monic polynomial of lower degree >= 1.
inline bool poly_is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  const std::size_t m = poly.size() - 1;
  if (m == 0) return false;
  for (std::size_t d = 1; d < m; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      std::vector<std::uint32_t> divisor(d + 1);
      std::uint64_t v = enc;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      divisor[d] = 1;
      if (poly_is_zero(poly_mod(poly, divisor, p))) return false;
    }
  }
  return true;
}

/// Extended Euclid; returns the inverse of a modulo n, or -1 if a is not a
/// unit.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  std::int64_t r0 = n, r1 = a % n, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) return -1;
  return ((t0 % n) + n) % n;
}

}  // namespace detail

/// A finite coefficient structure: prime field GF(p), extension field
/// GF(p^m) with an explicit monic irreducible modulus, or the integer
/// ring Z_k. Immutable after construction.
class Ring {
 public:
  static Ring gf(std::uint32_t p) { return Ring(RingKind::PrimeField, p, 1, 0, {}); }

  /// GF(p^m) with the built-in modulus: the irreducible monic polynomial of
  /// degree m whose non-leading coefficient vector has the least integer
  /// encoding. Only available for p^m <= 64; larger fields need an explicit
  /// modulus.
  static Ring gf(std::uint32_t p, std::uint32_t m) {
    if (m == 0) throw std::invalid_argument("extension degree must be >= 1");
    if (m == 1) return gf(p);
    if (!detail::is_prime(p)) throw std::invalid_argument("p must be prime");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < m; ++i) size *= p;
    if (size > 64)
      throw std::invalid_argument(
          "no built-in modulus for fields larger than 64 elements; supply a modulus polynomial");
    return Ring(RingKind::ExtensionField, p, m, 0, default_modulus(p, m));
  }

  static Ring gf(std::uint32_t p, std::uint32_t m, std::vector<Element> modulus_poly) {
    if (m < 2)
      throw std::invalid_argument("a modulus polynomial requires extension degree >= 2");
    return Ring(RingKind::ExtensionField, p, m, 0, std::move(modulus_poly));
  }

  static Ring zk(std::uint32_t k) { return Ring(RingKind::IntegerRing, 0, 1, k, {}); }

  RingKind kind() const { return kind_; }
  bool is_field() const { return kind_ != RingKind::IntegerRing; }
  std::uint32_t size() const { return size_; }

  /// Field characteristic p; fields only.
  std::uint32_t prime() const {
    if (!is_field()) throw std::invalid_argument("prime(): not a field");
    return p_;
  }

  std::uint32_t extension_degree() const {
    if (!is_field()) throw std::invalid_argument("extension_degree(): not a field");
    return m_;
  }

  /// Modulus k; Z_k only.
  std::uint32_t modulus() const {
    if (kind_ != RingKind::IntegerRing) throw std::invalid_argument("modulus(): not Z_k");
    return size_;
  }

  /// Little-endian monic coefficient vector of length m+1; extension fields only.
  const std::vector<Element>& modulus_poly() const {
    if (kind_ != RingKind::ExtensionField)
      throw std::invalid_argument("modulus_poly(): not an extension field");
    return mod_poly_;
  }

  Element add(Element a, Element b) const {
    validate(a);
    validate(b);
    if (kind_ != RingKind::ExtensionField)
      return static_cast<Element>((static_cast<std::uint64_t>(a) + b) % size_);
    Element r = 0;
    std::uint32_t mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      r += ((a % p_ + b % p_) % p_) * mult;
      a /= p_;
      b /= p_;
      mult *= p_;
    }
    return r;
  }

  Element neg(Element a) const {
    validate(a);
    if (kind_ != RingKind::ExtensionField)
      return static_cast<Element>((size_ - a) % size_);
    Element r = 0;
    std::uint32_t mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      r += ((p_ - a % p_) % p_) * mult;
      a /= p_;
      mult *= p_;
    }
    return r;
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    validate(a);
    validate(b);
    switch (kind_) {
      case RingKind::PrimeField:
      case RingKind::IntegerRing:
        return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % size_);
      case RingKind::ExtensionField: {
        const auto da = digits(a);
        const auto db = digits(b);
        std::vector<std::uint32_t> conv(2 * m_ - 1, 0);
        for (std::uint32_t i = 0; i < m_; ++i) {
          if (da[i] == 0) continue;
          for (std::uint32_t j = 0; j < m_; ++j)
            conv[i + j] = static_cast<std::uint32_t>(
                (conv[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
        }
        return from_digits(detail::poly_mod(std::move(conv), mod_poly_, p_));
      }
    }
    return 0;  // unreachable
  }

  /// Multiplicative inverse; throws std::domain_error for 0 and for
  /// non-units of Z_k.
  Element inv(Element a) const {
    validate(a);
    if (a == 0) throw std::domain_error("inverse of zero");
    switch (kind_) {
      case RingKind::PrimeField:
        return static_cast<Element>(detail::mod_inverse(a, size_));
      case RingKind::IntegerRing: {
        const std::int64_t r = detail::mod_inverse(a, size_);
        if (r < 0) throw std::domain_error("not a unit in " + name());
        return static_cast<Element>(r);
      }
      case RingKind::ExtensionField:
        // Fields here are small by construction; a linear scan is plenty.
        for (Element b = 1; b < size_; ++b)
          if (mul(a, b) == 1) return b;
        throw std::logic_error("no inverse found in a field");
    }
    return 0;  // unreachable
  }

  /// All elements exactly once, in increasing encoding order.
  std::vector<Element> elements() const {
    std::vector<Element> out(size_);
    for (std::uint32_t i = 0; i < size_; ++i) out[i] = i;
    return out;
  }

  /// Additive order of a column vector of g entries: 1 for the zero column,
  /// p for a nonzero column over GF(p^m), and k/gcd(a_1,...,a_g,k) over Z_k
  /// with entries read as integer residues.
  std::uint64_t translation_order(std::span<const Element> column) const {
    bool all_zero = true;
    for (Element e : column) {
      validate(e);
      if (e != 0) all_zero = false;
    }
    if (all_zero) return 1;
    if (is_field()) return p_;
    std::uint64_t g = size_;
    for (Element e : column) g = std::gcd<std::uint64_t>(g, e);
    return size_ / g;
  }

  /// Base-p digit vector of length m (least significant first); fields only.
  std::vector<std::uint32_t> digits(Element a) const {
    validate(a);
    if (!is_field()) throw std::invalid_argument("digits(): not a field");
    std::vector<std::uint32_t> d(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  Element from_digits(std::span<const std::uint32_t> d) const {
    if (!is_field()) throw std::invalid_argument("from_digits(): not a field");
    Element r = 0;
    std::uint32_t mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      r += (i < d.size() ? d[i] : 0) * mult;
      mult *= p_;
    }
    return r;
  }

  std::string name() const {
    if (kind_ == RingKind::IntegerRing) return "Z_" + std::to_string(size_);
    return "GF(" + std::to_string(size_) + ")";
  }

  bool operator==(const Ring&) const = default;

  /// Throws std::invalid_argument if a is not a valid element encoding.
  void validate(Element a) const {
    if (a >= size_) throw std::invalid_argument("element encoding out of range for " + name());
  }

 private:
  Ring(RingKind kind, std::uint32_t p, std::uint32_t m, std::uint32_t k,
       std::vector<Element> mod_poly)
      : kind_(kind), p_(p), m_(m), mod_poly_(std::move(mod_poly)) {
    switch (kind_) {
      case RingKind::PrimeField:
        if (!detail::is_prime(p_)) throw std::invalid_argument("p must be prime");
        size_ = p_;
        break;
      case RingKind::IntegerRing:
        if (k < 2) throw std::invalid_argument("Z_k requires k >= 2");
        size_ = k;
        break;
      case RingKind::ExtensionField: {
        if (!detail::is_prime(p_)) throw std::invalid_argument("p must be prime");
        std::uint64_t size = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
          size *= p_;
          if (size > (std::uint64_t{1} << 31))
            throw std::invalid_argument("field too large to enumerate");
        }
        size_ = static_cast<std::uint32_t>(size);
        if (mod_poly_.size() != m_ + 1)
          throw std::invalid_argument("modulus polynomial must have degree m");
        for (Element c : mod_poly_)
          if (c >= p_) throw std::invalid_argument("modulus coefficient out of range");
        if (mod_poly_.back() != 1)
          throw std::invalid_argument("modulus polynomial must be monic");
        if (!detail::poly_is_irreducible(mod_poly_, p_))
          throw std::invalid_argument("modulus polynomial is reducible over GF(p)");
        break;
      }
    }
  }

  static std::vector<Element> default_modulus(std::uint32_t p, std::uint32_t m) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      std::vector<std::uint32_t> cand(m + 1);
      std::uint64_t v = enc;
      for (std::uint32_t i = 0; i < m; ++i) {
        cand[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      cand[m] = 1;
      if (detail::poly_is_irreducible(cand, p)) return cand;
    }
    throw std::logic_error("no irreducible polynomial of the requested degree");
  }

  RingKind kind_;
  std::uint32_t p_ = 0;
  std::uint32_t m_ = 1;
  std::uint32_t size_ = 0;
  std::vector<Element> mod_poly_;
};

}  // namespace cycode
