#include <doctest.h>

#include "exciton/types.hpp"

using namespace exciton;

TEST_CASE("model parameters validate their domain") {
  CHECK_NOTHROW(ModelParams{1.0, 0.0, 0.0}.validate());
  CHECK_THROWS_AS((ModelParams{0.0, 0.1, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((ModelParams{1.0, -0.1, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS(((ModelParams{1.0, 0.1, INFINITY}.validate())), DomainError);

  const auto p = ModelParams::from_ratio(0.34, 2.0, 1.5);
  CHECK(p.chi == doctest::Approx(0.68));
  CHECK(p.big_omega() == doctest::Approx(1.5 - 1.36));
  CHECK(p.big_g(3) == doctest::Approx(2.0 - 1.36 + 6 * 0.68));
}

TEST_CASE("fock pairs map to the Schwinger multiplet") {
  const FockPair pair{3, 2};
  CHECK(pair.total() == 5);
  CHECK(pair.twice_m() == 1);
  CHECK_THROWS_AS(((FockPair{-1, 2}.validate())), DomainError);
  CHECK_THROWS_AS(((FockPair{20, 11}.validate())), CapacityError);
  CHECK_NOTHROW((FockPair{15, 15}.validate()));
}

TEST_CASE("ladder index decodes occupations") {
  const LadderIndex idx(4, 1);
  CHECK(idx.twice_m() == -2);
  CHECK(idx.m() == -1.0);
  CHECK(idx.occupation_a() == 1);
  CHECK(idx.occupation_b() == 3);

  const auto half = LadderIndex::from_twice_m(3, 1);
  CHECK(half.row() == 2);
  CHECK(half.m() == 0.5);

  CHECK_THROWS_AS((LadderIndex::from_twice_m(3, 2)), DomainError);
  CHECK_THROWS_AS((LadderIndex(3, 4)), DomainError);
  CHECK_THROWS_AS((LadderIndex(3, -1)), DomainError);
  CHECK_THROWS_AS((LadderIndex(-1, 0)), DomainError);
  CHECK_THROWS_AS((LadderIndex(31, 0)), CapacityError);
}

TEST_CASE("basis amplitude vectors") {
  const auto v = AmplitudeVector::basis(3, 2);
  REQUIRE(v.beta.size() == 4);
  CHECK(v.probabilities().sum() == 1.0);
  CHECK(v.beta(2) == std::complex<double>(1.0, 0.0));
}
