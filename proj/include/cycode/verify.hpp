#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cycode/code.hpp"
#include "cycode/cycle_index.hpp"
#include "cycode/enumerators.hpp"
#include "cycode/polynomial.hpp"

namespace cycode {

/// Result of checking one identity: both sides computed by independent
/// paths, compared as canonical polynomials.
struct VerificationReport {
  std::string theorem;  // cameron | main | dgo | higher-ci | zk
  std::string code;     // code description
  std::size_t genus = 1;
  Polynomial lhs;
  Polynomial rhs;
  Polynomial diff;  // lhs - rhs; zero iff equal
  bool equal = false;
  double wall_ms = 0.0;

  std::string text() const {
    std::ostringstream os;
    os << theorem << ": " << code << " genus=" << genus
       << " equal=" << (equal ? "yes" : "NO") << " (" << wall_ms << " ms)";
    if (!equal) {
      os << "\n  lhs  = " << lhs.str();
      os << "\n  rhs  = " << rhs.str();
      os << "\n  diff = " << diff.str();
    }
    return os.str();
  }

  nlohmann::json to_json() const {
    return {{"theorem", theorem}, {"code", code},         {"genus", genus},
            {"equal", equal},     {"lhs", lhs.to_json()}, {"rhs", rhs.to_json()},
            {"diff", diff.to_json()}, {"wall_ms", wall_ms}};
  }
};

namespace detail {

template <typename LhsFn, typename RhsFn>
VerificationReport run_verification(std::string theorem, const Code& code, std::size_t genus,
                                    LhsFn&& lhs_fn, RhsFn&& rhs_fn) {
  VerificationReport report;
  report.theorem = std::move(theorem);
  report.code = code.description();
  report.genus = genus;
  const auto start = std::chrono::steady_clock::now();
  report.lhs = lhs_fn();
  report.rhs = rhs_fn();
  const auto stop = std::chrono::steady_clock::now();
  report.diff = report.lhs - report.rhs;
  report.equal = report.diff.is_zero();
  report.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

inline void require_field(const Code& code, const std::string& theorem) {
  if (!code.ring().is_field())
    throw std::invalid_argument("verify " + theorem + " requires a field code, got " +
                                code.ring().name());
}

inline std::uint64_t checked_pow_u64(std::uint64_t base, std::size_t exp,
                                     const std::string& what) {
  const Integer v = ipow(Integer(base), exp);
  if (v > Integer(std::numeric_limits<std::uint64_t>::max()))
    throw enumeration_limit_error(what + " exceeds the 64-bit exponent range");
  return static_cast<std::uint64_t>(v);
}

}  // namespace detail

/// w_C(x, y) = Z(G(C); s_1 <- x^{1/q}, s_p <- y^{p/q}) for a code over
/// GF(q), q = p^m. Left side by codeword enumeration, right side by cycle
/// index plus fractional-power substitution.
inline VerificationReport verify_cameron(const Code& code, const EnumOptions& opt = {}) {
  detail::require_field(code, "cameron");
  const std::uint64_t q = code.ring().size();
  const std::uint64_t p = code.ring().prime();
  return detail::run_verification(
      "cameron", code, 1, [&] { return weight_enumerator(code, opt); },
      [&] {
        const PowerRule rules[] = {{SVar{1}, XYVar{false}, 1, q}, {SVar{p}, XYVar{true}, p, q}};
        return cycle_index(code, 1, opt).substitute_powers(rules);
      });
}

/// w_C^{(g)}(x_a) = T(Z(G(C^g); s(h,i))) for a field code. Left side by
/// direct tuple enumeration, right side through the complete cycle index
/// and the substitution map T.
inline VerificationReport verify_main(const Code& code, std::size_t g,
                                      const EnumOptions& opt = {}) {
  detail::require_field(code, "main");
  return detail::run_verification(
      "main", code, g, [&] { return complete_weight_enumerator(code, g, opt); },
      [&] { return apply_T(complete_cycle_index(code, g, opt).index, code.ring()); });
}

/// w_C^{(g)}(x_0 = x, x_a = y for a != 0) = sum over r of [g]_r w_C^r(x, y).
/// Left side by complete-weight-enumerator specialization, right side by
/// subcode enumeration.
inline VerificationReport verify_dgo(const Code& code, std::size_t g,
                                     const EnumOptions& opt = {}) {
  detail::require_field(code, "dgo");
  return detail::run_verification(
      "dgo", code, g,
      [&] {
        return complete_weight_enumerator(code, g, opt).specialize([](const VarId& v) -> VarId {
          if (const auto* x = std::get_if<XVar>(&v)) {
            const bool zero = std::all_of(x->label.begin(), x->label.end(),
                                          [](std::uint32_t e) { return e == 0; });
            return XYVar{!zero};
          }
          return v;
        });
      },
      [&] { return dgo_combination(code, g, opt); });
}

/// Z(G(C^g); s_i) = sum over r of [g]_r w_C^r(s_1^{q^g}, s_p^{q^g / p}).
/// Left side by cycle decomposition, right side by subcode enumeration plus
/// power substitution.
inline VerificationReport verify_higher_ci(const Code& code, std::size_t g,
                                           const EnumOptions& opt = {}) {
  detail::require_field(code, "higher-ci");
  const std::uint64_t p = code.ring().prime();
  return detail::run_verification(
      "higher-ci", code, g, [&] { return cycle_index(code, g, opt); },
      [&] {
        const std::uint64_t qg = detail::checked_pow_u64(code.ring().size(), g, "q^g");
        const PowerRule rules[] = {{XYVar{false}, SVar{1}, qg, 1},
                                   {XYVar{true}, SVar{p}, qg / p, 1}};
        return dgo_combination(code, g, opt).substitute_powers(rules);
      });
}

/// The Z_k analogue of the main identity: w_C^{(g)}(x_a) = T(Z(G(C^g);
/// s(h,i))) with per-position cycle length k / gcd(column entries, k).
inline VerificationReport verify_zk(const Code& code, std::size_t g,
                                    const EnumOptions& opt = {}) {
  if (code.ring().kind() != RingKind::IntegerRing)
    throw std::invalid_argument("verify zk requires a Z_k code, got " + code.ring().name());
  return detail::run_verification(
      "zk", code, g, [&] { return complete_weight_enumerator(code, g, opt); },
      [&] { return apply_T(complete_cycle_index(code, g, opt).index, code.ring()); });
}

}  // namespace cycode
