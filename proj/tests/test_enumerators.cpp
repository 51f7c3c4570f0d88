#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "cycode/enumerators.hpp"
#include "corpus.hpp"

using namespace cycode;

namespace {

/// Brute-force count of ordered r-tuples of linearly independent vectors in
/// F_q^g, by rank computation over all tuples (reference for the bracket
/// coefficient).
Integer independent_tuples(std::size_t g, std::size_t r, const Ring& field) {
  // Enumerate r-tuples of vectors in field^g and count those whose span has
  // q^r elements.
  std::vector<Row> space;
  const std::size_t q = field.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < g; ++i) total *= q;
  for (std::size_t enc = 0; enc < total; ++enc) {
    Row v(g);
    std::size_t x = enc;
    for (std::size_t j = 0; j < g; ++j) {
      v[j] = static_cast<Element>(x % q);
      x /= q;
    }
    space.push_back(v);
  }
  std::vector<std::size_t> pick(r, 0);
  Integer count = 0;
  while (true) {
    // span size by closure
    std::set<Row> span;
    span.insert(Row(g, 0));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Row> cur(span.begin(), span.end());
      for (const Row& u : cur)
        for (std::size_t i : pick)
          for (Element s = 0; s < q; ++s) {
            Row w(g);
            for (std::size_t j = 0; j < g; ++j)
              w[j] = field.add(u[j], field.mul(s, space[i][j]));
            grew = span.insert(w).second || grew;
          }
    }
    std::size_t qr = 1;
    for (std::size_t i = 0; i < r; ++i) qr *= q;
    if (span.size() == qr) ++count;
    std::size_t j = r;
    bool done = true;
    while (j > 0) {
      --j;
      if (++pick[j] < space.size()) {
        done = false;
        break;
      }
      pick[j] = 0;
    }
    if (done || r == 0) break;
  }
  return count;
}

}  // namespace

TEST_CASE("weight enumerators of known codes", "[enumerators]") {
  CHECK(weight_enumerator(corpus::rep2()).str() == "x^2 + y^2");
  CHECK(weight_enumerator(corpus::zero3()).str() == "x^3");
  CHECK(weight_enumerator(corpus::f2sq()).str() == "x^2 + 2*x*y + y^2");
  CHECK(weight_enumerator(corpus::hamming74()).str() ==
        "x^7 + 7*x^4*y^3 + 7*x^3*y^4 + y^7");
  CHECK(weight_enumerator(corpus::z4_2()).str() == "x + y");
}

TEST_CASE("complete weight enumerators", "[enumerators]") {
  // F_2^2 at genus 2: the square of the sum of all four label variables.
  Polynomial sum;
  for (std::uint32_t a : {0, 1})
    for (std::uint32_t b : {0, 1}) sum += Polynomial::variable(XVar{{a, b}});
  CHECK(complete_weight_enumerator(corpus::f2sq(), 2) == sum * sum);

  CHECK(complete_weight_enumerator(corpus::z4_2(), 1).str() == "x_(0) + x_(2)");

  // Genus-1 labels collapse to the plain weight enumerator.
  for (const Code& code : corpus::all()) {
    const Polynomial collapsed =
        complete_weight_enumerator(code, 1).specialize([](const VarId& v) -> VarId {
          const auto& x = std::get<XVar>(v);
          return XYVar{x.label[0] != 0};
        });
    CHECK(collapsed == weight_enumerator(code));
  }
}

TEST_CASE("enumerators are homogeneous with the right mass", "[enumerators]") {
  for (const Code& code : corpus::all()) {
    const Polynomial w = weight_enumerator(code);
    CHECK(w.is_homogeneous(code.length()));
    CHECK(w.evaluate({}, Integer(1)) == code.codeword_count());
    for (std::size_t g = 1; g <= 2; ++g) {
      const Polynomial cw = complete_weight_enumerator(code, g);
      CHECK(cw.is_homogeneous(code.length()));
      CHECK(cw.evaluate({}, Integer(1)) == ipow(code.codeword_count(), g));
    }
  }
}

TEST_CASE("complete weight enumerator is symmetric in the rows", "[enumerators]") {
  for (const Code& code : corpus::fields()) {
    const Polynomial cw = complete_weight_enumerator(code, 2);
    const Polynomial swapped = cw.specialize([](const VarId& v) -> VarId {
      auto x = std::get<XVar>(v);
      std::swap(x.label[0], x.label[1]);
      return x;
    });
    CHECK(swapped == cw);
  }
}

TEST_CASE("higher weight enumerators", "[enumerators]") {
  CHECK(higher_weight_enumerator(corpus::f2sq(), 0).str() == "x^2");
  CHECK(higher_weight_enumerator(corpus::f2sq(), 1).str() == "2*x*y + y^2");
  CHECK(higher_weight_enumerator(corpus::f2sq(), 2).str() == "y^2");
  CHECK(higher_weight_enumerator(corpus::zero3(), 0).str() == "x^3");

  for (const Code& code : corpus::fields())
    for (std::size_t r = 0; r <= code.rank(); ++r) {
      const Polynomial w = higher_weight_enumerator(code, r);
      CHECK(w.is_homogeneous(code.length()));
      CHECK(w.evaluate({}, Integer(1)) ==
            gaussian_binomial(code.rank(), r, code.ring().size()));
    }

  CHECK_THROWS_AS(higher_weight_enumerator(corpus::z4_2(), 1), std::invalid_argument);
}

TEST_CASE("generalized Hamming weights", "[enumerators]") {
  CHECK(minimum_higher_weight(corpus::f2sq(), 1) == 1);
  CHECK(minimum_higher_weight(corpus::f2sq(), 2) == 2);
  CHECK(minimum_higher_weight(corpus::rep2(), 1) == 2);
  CHECK(minimum_higher_weight(corpus::hamming74(), 1) == 3);
  CHECK(minimum_higher_weight(corpus::hamming74(), 2) == 5);
  CHECK(minimum_higher_weight(corpus::hamming74(), 3) == 6);
  CHECK(minimum_higher_weight(corpus::hamming74(), 4) == 7);
  CHECK_THROWS_AS(minimum_higher_weight(corpus::f2sq(), 0), std::invalid_argument);
  CHECK_THROWS_AS(minimum_higher_weight(corpus::f2sq(), 3), std::invalid_argument);

  // The weights are strictly increasing in r (monotonicity of supports).
  for (const Code& code : corpus::fields()) {
    std::size_t prev = 0;
    for (std::size_t r = 1; r <= code.rank(); ++r) {
      const std::size_t d = minimum_higher_weight(code, r);
      CHECK(d > prev);
      prev = d;
    }
  }
}

TEST_CASE("bracket coefficients count independent tuples", "[enumerators]") {
  CHECK(bracket_coefficient(2, 0, 2).value == 1);
  CHECK(bracket_coefficient(2, 1, 2).value == 3);
  CHECK(bracket_coefficient(2, 2, 2).value == 6);
  CHECK(bracket_coefficient(1, 1, 2).value == 1);
  CHECK(bracket_coefficient(1, 1, 3).value == 2);
  CHECK(bracket_coefficient(3, 2, 2).value == 42);
  CHECK_THROWS_AS(bracket_coefficient(2, 3, 2), std::invalid_argument);

  for (std::uint32_t q : {2u, 3u}) {
    const Ring field = Ring::gf(q);
    for (std::size_t g = 1; g <= 2; ++g)
      for (std::size_t r = 0; r <= g; ++r)
        CHECK(bracket_coefficient(g, r, q).value == independent_tuples(g, r, field));
  }
}

TEST_CASE("higher-weight combination", "[enumerators]") {
  CHECK(dgo_combination(corpus::f2sq(), 2).str() == "x^2 + 6*x*y + 9*y^2");
  CHECK(dgo_combination(corpus::zero3(), 1).str() == "x^3");
  CHECK(dgo_combination(corpus::zero3(), 5).str() == "x^3");

  // Genus 1: x^n + (q - 1) * w_C^1.
  for (const Code& code : corpus::fields()) {
    Polynomial expected = higher_weight_enumerator(code, 0);
    if (code.rank() >= 1)
      expected += higher_weight_enumerator(code, 1) * Integer(code.ring().size() - 1);
    CHECK(dgo_combination(code, 1) == expected);
  }

  // Genus above the rank: top summands vanish instead of erroring.
  CHECK(dgo_combination(corpus::rep2(), 3) ==
        higher_weight_enumerator(corpus::rep2(), 0) +
            higher_weight_enumerator(corpus::rep2(), 1) *
                bracket_coefficient(3, 1, 2).value);
}
