#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cycode/errors.hpp"
#include "cycode/integer.hpp"

namespace cycode {

/// Cycle-length indeterminate s_i of a cycle index.
struct SVar {
  std::uint64_t length = 1;
  auto operator<=>(const SVar&) const = default;
};

/// Per-group-element indeterminate s[h;i] of a complete cycle index; `id`
/// is the canonical text identifier of the group element h.
struct SHVar {
  std::string id;
  std::uint64_t length = 1;
  auto operator<=>(const SHVar&) const = default;
};

/// Label indeterminate x_(a_1,...,a_g) of a complete weight enumerator,
/// indexed by a column label in R^g (integer encodings).
struct XVar {
  std::vector<std::uint32_t> label;
  auto operator<=>(const XVar&) const = default;
};

/// The classical weight-enumerator pair x, y.
struct XYVar {
  bool y = false;
  auto operator<=>(const XYVar&) const = default;
};

/// Variable identity. The variant order (S < SH < X < XY, then contents)
/// is the canonical variable order used for monomials, printing, and JSON.
using VarId = std::variant<SVar, SHVar, XVar, XYVar>;

inline std::string var_name(const VarId& var) {
  struct Namer {
    std::string operator()(const SVar& v) const { return "s_" + std::to_string(v.length); }
    std::string operator()(const SHVar& v) const {
      return "s[" + v.id + ";" + std::to_string(v.length) + "]";
    }
    std::string operator()(const XVar& v) const {
      std::string s = "x_(";
      for (std::size_t i = 0; i < v.label.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v.label[i]);
      }
      return s + ")";
    }
    std::string operator()(const XYVar& v) const { return v.y ? "y" : "x"; }
  };
  return std::visit(Namer{}, var);
}

/// Sorted (variable, exponent) list with positive exponents and distinct
/// variables. The empty monomial is the constant term.
using Monomial = std::vector<std::pair<VarId, std::uint64_t>>;

inline Monomial normalize_monomial(Monomial m) {
  std::sort(m.begin(), m.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Monomial out;
  out.reserve(m.size());
  for (auto& [v, e] : m) {
    if (e == 0) continue;
    if (!out.empty() && out.back().first == v)
      out.back().second += e;
    else
      out.emplace_back(v, e);
  }
  return out;
}

inline std::uint64_t monomial_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

/// Graded-lexicographic order: higher total degree first; ties broken by
/// comparing exponents along increasing variable order, larger first.
/// Map iteration order equals canonical printing order.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const std::uint64_t da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (ia->first != ib->first) return ia->first < ib->first;
      if (ia->second != ib->second) return ia->second > ib->second;
      ++ia;
      ++ib;
    }
    return false;  // equal degree and a common prefix: monomials are equal
  }
};

/// One rule of a simultaneous power substitution: var^e -> target^(e*num/den),
/// with exact divisibility required.
struct PowerRule {
  VarId from;
  VarId to;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
};

/// Exact sparse multivariate polynomial over arbitrary-precision integers.
/// Terms are kept in canonical form: normalized monomials, no zero
/// coefficients, canonical term order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Integer constant) { add_term({}, constant); }

  static Polynomial variable(VarId v, std::uint64_t exp = 1) {
    Polynomial p;
    p.add_term({{std::move(v), exp}}, 1);
    return p;
  }

  static Polynomial term(Monomial m, Integer coeff) {
    Polynomial p;
    p.add_term(std::move(m), coeff);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Integer, TermOrder>& terms() const { return terms_; }

  /// Adds coeff * m, normalizing m and merging like terms.
  void add_term(Monomial m, const Integer& coeff) {
    if (coeff == 0) return;
    m = normalize_monomial(std::move(m));
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) {
    Polynomial out;
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : rhs.terms_) {
        Monomial m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        out.add_term(std::move(m), ca * cb);
      }
    }
    terms_ = std::move(out.terms_);
    return *this;
  }

  Polynomial& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
  friend Polynomial operator*(const Integer& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  bool operator==(const Polynomial&) const = default;

  /// Largest total degree among terms; 0 for the zero polynomial.
  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
  }

  bool is_homogeneous(std::uint64_t degree) const {
    for (const auto& [m, c] : terms_)
      if (monomial_degree(m) != degree) return false;
    return true;
  }

  /// Exact evaluation under a variable assignment. Unassigned variables use
  /// `fallback` when given, otherwise evaluation fails.
  Integer evaluate(const std::map<VarId, Integer>& assignment,
                   const std::optional<Integer>& fallback = std::nullopt) const {
    Integer total = 0;
    for (const auto& [m, c] : terms_) {
      Integer prod = c;
      for (const auto& [v, e] : m) {
        auto it = assignment.find(v);
        if (it != assignment.end()) {
          prod *= ipow(it->second, e);
        } else if (fallback) {
          prod *= ipow(*fallback, e);
        } else {
          throw std::invalid_argument("evaluate: no value for variable " + var_name(v));
        }
      }
      total += prod;
    }
    return total;
  }

  /// Variable renaming; distinct variables may map to one, exponents add and
  /// like terms merge.
  Polynomial specialize(const std::function<VarId(const VarId&)>& rename) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      Monomial nm;
      nm.reserve(m.size());
      for (const auto& [v, e] : m) nm.emplace_back(rename(v), e);
      out.add_term(std::move(nm), c);
    }
    return out;
  }

  /// Simultaneous power substitution: every occurrence from^e becomes
  /// to^(e*num/den). Throws divisibility_error when den does not divide
  /// e*num for some term.
  Polynomial substitute_powers(std::span<const PowerRule> rules) const {
    for (const auto& r : rules) {
      if (r.den == 0 || r.num == 0)
        throw std::invalid_argument("substitute_powers: exponent factor must be positive");
    }
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      Monomial nm;
      nm.reserve(m.size());
      for (const auto& [v, e] : m) {
        const PowerRule* rule = nullptr;
        for (const auto& r : rules)
          if (r.from == v) {
            rule = &r;
            break;
          }
        if (rule == nullptr) {
          nm.emplace_back(v, e);
          continue;
        }
        const std::uint64_t scaled = e * rule->num;
        if (scaled % rule->den != 0)
          throw divisibility_error("substitution " + var_name(v) + " -> " +
                                   var_name(rule->to) + "^(" + std::to_string(rule->num) +
                                   "/" + std::to_string(rule->den) +
                                   ") hits non-divisible exponent " + std::to_string(e));
        nm.emplace_back(rule->to, scaled / rule->den);
      }
      out.add_term(std::move(nm), c);
    }
    return out;
  }

  Polynomial substitute_power(const VarId& from, const VarId& to, std::uint64_t num,
                              std::uint64_t den) const {
    const PowerRule rule{from, to, num, den};
    return substitute_powers({&rule, 1});
  }

  /// Canonical text: terms in canonical order, "+"/"-" separators, unit
  /// coefficients elided, "^" exponents, "0" for the zero polynomial.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Integer a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (m.empty()) {
        os << a.str();
        continue;
      }
      bool need_star = false;
      if (a != 1) {
        os << a.str();
        need_star = true;
      }
      for (const auto& [v, e] : m) {
        if (need_star) os << "*";
        os << var_name(v);
        if (e != 1) os << "^" << e;
        need_star = true;
      }
    }
    return os.str();
  }

  static Polynomial parse(std::string_view text);

  /// JSON encoding: an array of terms {c: decimal string, m: [{v, e}...]}
  /// in canonical order. Variable descriptors:
  ///   {"kind":"s","i":N} | {"kind":"sh","h":ID,"i":N} |
  ///   {"kind":"x","label":[..]} | {"kind":"xy","name":"x"|"y"}
  nlohmann::json to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
      auto jm = nlohmann::json::array();
      for (const auto& [v, e] : m) jm.push_back({{"v", var_to_json(v)}, {"e", e}});
      arr.push_back({{"c", c.str()}, {"m", jm}});
    }
    return arr;
  }

  static nlohmann::json var_to_json(const VarId& var) {
    struct Encoder {
      nlohmann::json operator()(const SVar& v) const {
        return {{"kind", "s"}, {"i", v.length}};
      }
      nlohmann::json operator()(const SHVar& v) const {
        return {{"kind", "sh"}, {"h", v.id}, {"i", v.length}};
      }
      nlohmann::json operator()(const XVar& v) const {
        return {{"kind", "x"}, {"label", v.label}};
      }
      nlohmann::json operator()(const XYVar& v) const {
        return {{"kind", "xy"}, {"name", v.y ? "y" : "x"}};
      }
    };
    return std::visit(Encoder{}, var);
  }

 private:
  std::map<Monomial, Integer, TermOrder> terms_;
};

namespace detail {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view s) : s_(s) {}

  Polynomial run() {
    Polynomial out;
    skip_ws();
    if (done()) throw std::invalid_argument("empty polynomial text");
    bool negative = false;
    if (eat('-'))
      negative = true;
    else
      eat('+');
    while (true) {
      parse_term(out, negative);
      skip_ws();
      if (done()) break;
      if (eat('+'))
        negative = false;
      else if (eat('-'))
        negative = true;
      else
        fail("expected '+' or '-'");
    }
    return out;
  }

 private:
  void parse_term(Polynomial& out, bool negative) {
    Integer coeff = negative ? -1 : 1;
    Monomial mono;
    while (true) {
      skip_ws();
      if (done()) fail("unexpected end of input in term");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= Integer(read_digits());
      } else {
        VarId v = parse_var();
        std::uint64_t e = 1;
        skip_ws();
        if (eat('^')) {
          skip_ws();
          e = read_u64();
        }
        mono.emplace_back(std::move(v), e);
      }
      skip_ws();
      if (!eat('*')) break;
    }
    out.add_term(std::move(mono), coeff);
  }

  VarId parse_var() {
    const char c = peek();
    if (c == 'y') {
      ++pos_;
      return XYVar{true};
    }
    if (c == 'x') {
      ++pos_;
      if (!done() && peek() == '_') {
        ++pos_;
        expect('(');
        std::vector<std::uint32_t> label;
        label.push_back(static_cast<std::uint32_t>(read_u64()));
        while (eat(',')) label.push_back(static_cast<std::uint32_t>(read_u64()));
        expect(')');
        return XVar{std::move(label)};
      }
      return XYVar{false};
    }
    if (c == 's') {
      ++pos_;
      if (!done() && peek() == '_') {
        ++pos_;
        return SVar{read_u64()};
      }
      if (!done() && peek() == '[') {
        ++pos_;
        std::string id;
        while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == ','))
          id += s_[pos_++];
        if (id.empty()) fail("expected group element id");
        expect(';');
        const std::uint64_t len = read_u64();
        expect(']');
        return SHVar{std::move(id), len};
      }
      fail("expected '_' or '[' after 's'");
    }
    fail("expected a variable");
    return XYVar{};  // unreachable
  }

  std::string read_digits() {
    skip_ws();
    std::string d;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) d += s_[pos_++];
    if (d.empty()) fail("expected a number");
    return d;
  }

  std::uint64_t read_u64() {
    const std::string d = read_digits();
    return std::stoull(d);
  }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  bool eat(char c) {
    if (!done() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(std::string_view text) {
  return detail::PolynomialParser(text).run();
}

}  // namespace cycode
