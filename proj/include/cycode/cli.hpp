#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycode/code.hpp"
#include "cycode/code_io.hpp"
#include "cycode/cycle_index.hpp"
#include "cycode/enumerators.hpp"
#include "cycode/polynomial.hpp"
#include "cycode/verify.hpp"

namespace cycode {

namespace detail {

struct CliState {
  std::string code_path;
  std::string format = "text";
  std::uint64_t max_enum = kDefaultEnumCap;
  bool oracle = false;
  std::string modulus_csv;
  int exit_code = 0;

  EnumOptions options() const { return EnumOptions{max_enum, oracle}; }

  std::optional<std::vector<Element>> modulus() const {
    if (modulus_csv.empty()) return std::nullopt;
    std::vector<Element> coeffs;
    std::stringstream ss(modulus_csv);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) throw std::invalid_argument("empty coefficient in --modulus-poly");
      coeffs.push_back(static_cast<Element>(std::stoul(part)));
    }
    if (coeffs.empty()) throw std::invalid_argument("--modulus-poly needs coefficients");
    return coeffs;
  }

  Code load() const { return load_code_file(code_path, options(), modulus()); }

  void print_polynomial(const Polynomial& p) const {
    if (format == "json")
      std::cout << p.to_json().dump() << "\n";
    else
      std::cout << p.str() << "\n";
  }

  void print_report(const VerificationReport& report) {
    if (format == "json")
      std::cout << report.to_json().dump() << "\n";
    else
      std::cout << report.text() << "\n";
    if (!report.equal) exit_code = 2;
  }

  void print_skip(const std::string& theorem) const {
    if (format == "json")
      std::cout << nlohmann::json{{"theorem", theorem}, {"skipped", "ring kind"}}.dump() << "\n";
    else
      std::cout << theorem << ": skipped (ring kind)\n";
  }
};

inline void add_common_options(CLI::App* sub, CliState& state) {
  sub->add_option("--code", state.code_path, "code description file")->required();
  sub->add_option("--format", state.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sub->add_option("--max-enum", state.max_enum, "enumeration limit")->capture_default_str();
  sub->add_flag("--oracle", state.oracle,
                "cross-check closed-form cycle structure against orbit decomposition");
  sub->add_option("--modulus-poly", state.modulus_csv,
                  "little-endian modulus coefficients c0,c1,... for an extension field");
}

inline VerificationReport run_theorem(const std::string& theorem, const Code& code,
                                      std::size_t genus, const EnumOptions& opt) {
  if (theorem == "cameron") return verify_cameron(code, opt);
  if (theorem == "main") return verify_main(code, genus, opt);
  if (theorem == "dgo") return verify_dgo(code, genus, opt);
  if (theorem == "higher-ci") return verify_higher_ci(code, genus, opt);
  if (theorem == "zk") return verify_zk(code, genus, opt);
  throw std::invalid_argument("unknown theorem `" + theorem + "`");
}

/// Whether the theorem applies to the code's ring kind.
inline bool theorem_applies(const std::string& theorem, const Code& code) {
  if (theorem == "zk") return code.ring().kind() == RingKind::IntegerRing;
  return code.ring().is_field();
}

}  // namespace detail

/// Command-line driver. Exit status: 0 on success and on verified
/// identities, 2 on a failed identity, 1 on input or limit errors.
inline int run_cli(int argc, const char* const* argv) {
  CLI::App app{"cycle indices and weight enumerators of linear codes over GF(q) and Z_k"};
  app.require_subcommand(1);

  detail::CliState state;
  std::size_t genus = 1;
  std::size_t r = 0;
  std::string theorem;

  auto* cwe = app.add_subcommand("cwe", "complete weight enumerator of genus g");
  detail::add_common_options(cwe, state);
  cwe->add_option("--genus", genus, "genus g")->capture_default_str();
  cwe->callback(
      [&] { state.print_polynomial(complete_weight_enumerator(state.load(), genus, state.options())); });

  auto* we = app.add_subcommand("we", "Hamming weight enumerator");
  detail::add_common_options(we, state);
  we->callback([&] { state.print_polynomial(weight_enumerator(state.load(), state.options())); });

  auto* hwe = app.add_subcommand("hwe", "higher weight enumerator of dimension r");
  detail::add_common_options(hwe, state);
  hwe->add_option("--r", r, "subcode dimension")->required();
  hwe->callback(
      [&] { state.print_polynomial(higher_weight_enumerator(state.load(), r, state.options())); });

  auto* dr = app.add_subcommand("dr", "generalized Hamming weight d_r");
  detail::add_common_options(dr, state);
  dr->add_option("--r", r, "subcode dimension")->required();
  dr->callback([&] {
    const std::size_t d = minimum_higher_weight(state.load(), r, state.options());
    if (state.format == "json")
      std::cout << nlohmann::json{{"r", r}, {"d", d}}.dump() << "\n";
    else
      std::cout << d << "\n";
  });

  auto* ci = app.add_subcommand("cycle-index", "cycle index of the induced group");
  detail::add_common_options(ci, state);
  ci->add_option("--genus", genus, "genus g")->capture_default_str();
  ci->callback([&] { state.print_polynomial(cycle_index(state.load(), genus, state.options())); });

  auto* cci = app.add_subcommand("complete-cycle-index",
                                 "complete cycle index with one variable family per element");
  detail::add_common_options(cci, state);
  cci->add_option("--genus", genus, "genus g")->capture_default_str();
  cci->callback([&] {
    state.print_polynomial(complete_cycle_index(state.load(), genus, state.options()).poly);
  });

  auto* verify = app.add_subcommand("verify", "check one identity on the given code");
  detail::add_common_options(verify, state);
  verify->add_option("theorem", theorem, "identity to check")
      ->required()
      ->check(CLI::IsMember({"cameron", "main", "dgo", "higher-ci", "zk"}));
  verify->add_option("--genus", genus, "genus g")->capture_default_str();
  verify->callback([&] {
    state.print_report(detail::run_theorem(theorem, state.load(), genus, state.options()));
  });

  auto* verify_all = app.add_subcommand("verify-all", "check every identity that fits the ring");
  detail::add_common_options(verify_all, state);
  verify_all->add_option("--genus", genus, "genus g")->capture_default_str();
  verify_all->callback([&] {
    const Code code = state.load();
    for (const char* name : {"cameron", "main", "dgo", "higher-ci", "zk"}) {
      if (detail::theorem_applies(name, code))
        state.print_report(detail::run_theorem(name, code, genus, state.options()));
      else
        state.print_skip(name);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return state.exit_code;
}

}  // namespace cycode
