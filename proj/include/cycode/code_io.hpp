#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycode/code.hpp"
#include "cycode/ring.hpp"

namespace cycode {

/// Parses a code description:
///   line 1: `GF p m` or `Z k`
///   line 2: `n k_rows`
///   then k_rows rows of n whitespace-separated integer encodings.
/// An optional modulus polynomial (little-endian coefficients, length m+1)
/// overrides the built-in modulus of an extension field.
inline Code parse_code(std::istream& in, const EnumOptions& opt = {},
                       const std::optional<std::vector<Element>>& modulus = std::nullopt) {
  std::string tag;
  if (!(in >> tag)) throw std::invalid_argument("missing ring header");

  std::optional<Ring> ring;
  if (tag == "GF") {
    std::uint64_t p = 0, m = 0;
    if (!(in >> p >> m)) throw std::invalid_argument("ring header must be `GF p m`");
    if (m == 0) throw std::invalid_argument("extension degree must be at least 1");
    if (m == 1) {
      if (modulus) throw std::invalid_argument("a modulus polynomial needs an extension field");
      ring = Ring::gf(static_cast<std::uint32_t>(p));
    } else if (modulus) {
      ring = Ring::gf(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), *modulus);
    } else {
      ring = Ring::gf(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
    }
  } else if (tag == "Z") {
    std::uint64_t k = 0;
    if (!(in >> k)) throw std::invalid_argument("ring header must be `Z k`");
    if (modulus) throw std::invalid_argument("a modulus polynomial needs an extension field");
    ring = Ring::zk(static_cast<std::uint32_t>(k));
  } else {
    throw std::invalid_argument("unknown ring header `" + tag + "`; expected GF or Z");
  }

  std::size_t n = 0, k_rows = 0;
  if (!(in >> n >> k_rows)) throw std::invalid_argument("missing `n k_rows` line");
  if (n == 0 || k_rows == 0) throw std::invalid_argument("n and k_rows must be positive");

  Matrix rows(k_rows, Row(n, 0));
  for (std::size_t r = 0; r < k_rows; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::uint64_t value = 0;
      if (!(in >> value))
        throw std::invalid_argument("generator matrix needs " + std::to_string(k_rows) + "x" +
                                    std::to_string(n) + " entries");
      if (value >= ring->size())
        throw std::invalid_argument("entry " + std::to_string(value) + " out of range for " +
                                    ring->name());
      rows[r][c] = static_cast<Element>(value);
    }

  std::string extra;
  if (in >> extra) throw std::invalid_argument("trailing content `" + extra + "` in code file");

  return Code(*ring, std::move(rows), opt);
}

inline Code load_code_file(const std::string& path, const EnumOptions& opt = {},
                           const std::optional<std::vector<Element>>& modulus = std::nullopt) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open code file `" + path + "`");
  return parse_code(in, opt, modulus);
}

}  // namespace cycode
