#include <map>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "cycode/code.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace cycode;

TEST_CASE("field codes store reduced generators and rank", "[codes]") {
  const Code c = corpus::f2sq();
  CHECK(c.length() == 2);
  CHECK(c.rank() == 2);
  CHECK(c.codeword_count() == 4);
  CHECK(c.description() == "[2,2] over GF(2)");

  // Dependent rows reduce the rank.
  const Code dep(Ring::gf(2), {{1, 1}, {1, 1}});
  CHECK(dep.rank() == 1);
  CHECK(dep.codeword_count() == 2);

  const Code zero = corpus::zero3();
  CHECK(zero.rank() == 0);
  CHECK(zero.codeword_count() == 1);
  CHECK(zero.codewords() == std::vector<Row>{{0, 0, 0}});

  const Code mixed(Ring::gf(3), {{2, 1, 0}, {1, 1, 0}, {0, 0, 2}});
  CHECK(mixed.rank() == 3);  // rows independent over GF(3)
  const Code scaled(Ring::gf(3), {{1, 2, 0}, {2, 1, 0}});
  CHECK(scaled.rank() == 1);  // second row is twice the first
}

TEST_CASE("construction rejects malformed input", "[codes]") {
  CHECK_THROWS_AS(Code(Ring::gf(2), {}), std::invalid_argument);
  CHECK_THROWS_AS(Code(Ring::gf(2), {{1, 0}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(Code(Ring::gf(2), {{2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Code(Ring::zk(4), {{4}}), std::invalid_argument);
}

TEST_CASE("codeword enumeration order", "[codes]") {
  CHECK(corpus::rep2().codewords() == std::vector<Row>{{0, 0}, {1, 1}});
  CHECK(corpus::f2sq().codewords() ==
        std::vector<Row>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(Code(Ring::zk(4), {{1}}).codewords() == std::vector<Row>{{0}, {1}, {2}, {3}});
}

TEST_CASE("integer-ring codes enumerate the additive closure", "[codes]") {
  const Code c = corpus::z4_2();
  CHECK(c.codeword_count() == 2);
  CHECK(c.codewords() == std::vector<Row>{{0}, {2}});

  const Code gen23(Ring::zk(6), {{2, 3}});
  CHECK(gen23.codeword_count() == 6);
  std::set<Row> expected;
  Row acc{0, 0};
  const Ring z6 = Ring::zk(6);
  for (int i = 0; i < 6; ++i) {
    expected.insert(acc);
    acc = {z6.add(acc[0], 2), z6.add(acc[1], 3)};
  }
  const auto words = gen23.codewords();
  CHECK(std::set<Row>(words.begin(), words.end()) == expected);

  CHECK(corpus::z4_12().codeword_count() == 4);
  CHECK(corpus::z6full2().codeword_count() == 36);
}

TEST_CASE("enumeration caps raise limit errors", "[codes]") {
  EnumOptions tiny;
  tiny.max_enum = 3;
  CHECK_THROWS_AS(corpus::f2sq().codewords(tiny), enumeration_limit_error);
  CHECK_THROWS_AS(enumerate_tuples(corpus::f2sq(), 2, tiny), enumeration_limit_error);
  CHECK_THROWS_AS(Code(Ring::zk(6), {{1, 0}, {0, 1}}, tiny), enumeration_limit_error);
  EnumOptions enough;
  enough.max_enum = 16;
  CHECK(enumerate_tuples(corpus::f2sq(), 2, enough).size() == 16);
}

TEST_CASE("tuple enumeration covers C^g in row-lexicographic order", "[codes]") {
  const Code c = corpus::f2sq();
  const TupleSequence seq = enumerate_tuples(c, 2);
  REQUIRE(seq.size() == 16);
  CHECK(seq[0].rows == Matrix{{0, 0}, {0, 0}});
  CHECK(seq[1].rows == Matrix{{0, 0}, {0, 1}});
  CHECK(seq[4].rows == Matrix{{0, 1}, {0, 0}});
  CHECK(seq[15].rows == Matrix{{1, 1}, {1, 1}});
  std::set<std::string> ids;
  for (const GroupElement& h : seq) ids.insert(h.id());
  CHECK(ids.size() == 16);
  CHECK(seq[1].id() == "0,0,0,1");
  CHECK(seq[1].column(1) == Row{0, 1});

  const TupleSequence rep3 = enumerate_tuples(corpus::rep2(), 3);
  CHECK(rep3.size() == 8);
  const TupleSequence g1 = enumerate_tuples(c, 1);
  REQUIRE(g1.size() == 4);
  for (std::uint64_t i = 0; i < 4; ++i) CHECK(g1[i].rows[0] == c.codewords()[i]);
}

TEST_CASE("weight data partitions positions by column", "[codes]") {
  GroupElement zero{Matrix{{0, 0}, {0, 0}}};
  CHECK(weight_data(zero).weight == 0);
  CHECK(weight_data(zero).zero_positions == std::vector<std::size_t>{0, 1});

  GroupElement h{Matrix{{0, 1}, {1, 1}}};
  const WeightData wd = weight_data(h);
  CHECK(wd.weight == 2);
  CHECK(wd.nonzero_positions == std::vector<std::size_t>{0, 1});

  GroupElement g1{Matrix{{1, 0, 1}}};
  CHECK(weight_data(g1).weight == 2);
  CHECK(weight_data(g1).zero_positions == std::vector<std::size_t>{1});

  // Zero weight characterizes the identity element, across a whole group.
  for (const GroupElement& e : enumerate_tuples(corpus::f2sq(), 2)) {
    const bool is_identity = e.rows == Matrix{{0, 0}, {0, 0}};
    CHECK((weight_data(e).weight == 0) == is_identity);
  }
}

TEST_CASE("gaussian binomials", "[codes]") {
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(4, 0, 2) == 1);
  CHECK(gaussian_binomial(4, 4, 2) == 1);
  CHECK(gaussian_binomial(4, 1, 2) == 15);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  CHECK(gaussian_binomial(2, 1, 4) == 5);
  CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_binomial(2, 1, 1), std::invalid_argument);
}

TEST_CASE("subcode enumeration matches brute-force span collection", "[codes]") {
  for (const Code& code : corpus::fields()) {
    for (std::size_t r = 0; r <= code.rank(); ++r) {
      const auto subcodes = enumerate_subcodes(code, r);
      CHECK(Integer(subcodes.size()) ==
            gaussian_binomial(code.rank(), r, code.ring().size()));

      const auto reference = oracles::subspaces_by_span_collection(code, r);
      REQUIRE(subcodes.size() == reference.size());

      std::multiset<std::size_t> supports, ref_supports;
      for (const Subcode& d : subcodes) supports.insert(d.support_size);
      for (const auto& span : reference)
        ref_supports.insert(oracles::support_of(span, code.length()));
      CHECK(supports == ref_supports);
    }
  }
}

TEST_CASE("subcode supports on known codes", "[codes]") {
  const auto lines = enumerate_subcodes(corpus::f2sq(), 1);
  REQUIRE(lines.size() == 3);
  std::multiset<std::size_t> supports;
  for (const Subcode& d : lines) supports.insert(d.support_size);
  CHECK(supports == std::multiset<std::size_t>{1, 1, 2});

  const auto zero_dim = enumerate_subcodes(corpus::hamming74(), 0);
  REQUIRE(zero_dim.size() == 1);
  CHECK(zero_dim[0].support_size == 0);

  CHECK(enumerate_subcodes(corpus::hamming74(), 1).size() == 15);

  CHECK_THROWS_AS(enumerate_subcodes(corpus::z4_2(), 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_subcodes(corpus::f2sq(), 3), std::invalid_argument);
  EnumOptions tiny;
  tiny.max_enum = 2;
  CHECK_THROWS_AS(enumerate_subcodes(corpus::hamming74(), 1, tiny), enumeration_limit_error);
}

TEST_CASE("subcode bases are distinct reduced matrices", "[codes]") {
  const auto planes = enumerate_subcodes(corpus::hamming74(), 2);
  std::set<Matrix> distinct;
  for (const Subcode& d : planes) {
    REQUIRE(d.basis.size() == 2);
    REQUIRE(d.basis[0].size() == 4);
    distinct.insert(d.basis);
  }
  CHECK(distinct.size() == planes.size());
}
