#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ewa/error.hpp"
#include "ewa/game.hpp"

using namespace ewa;

namespace {

const PayoffMatrix kCoordination{5, -1, 0, 3, 2, -3, 1, 4};
const PayoffMatrix kAnticoordination{1, 5, 2, 4, 0, 3, 4, 1};
const PayoffMatrix kDiscoordination{4, -1, -3, 3, -3, 2, -2, -5};
const PayoffMatrix kDominance{5, -1, 0, -2, 3, -1, 2, -3};
const PayoffMatrix kChaotic{-11.8, 0, 0, -1.8, 11.8, 0, 0, 1.8};

PayoffMatrix random_matrix(std::mt19937_64& gen) {
  std::normal_distribution<double> n(0.0, 3.0);
  return {n(gen), n(gen), n(gen), n(gen), n(gen), n(gen), n(gen), n(gen)};
}

// Best-response enumeration, independent of the ordering rules.
std::vector<Cell> brute_force_ne(const PayoffMatrix& p) {
  const double row[2][2] = {{p.a, p.b}, {p.c, p.d}};
  const double col[2][2] = {{p.e, p.g}, {p.f, p.h}};
  std::vector<Cell> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (row[i][j] > row[1 - i][j] && col[i][j] > col[i][1 - j]) out.push_back({i + 1, j + 1});
  return out;
}

}  // namespace

TEST_CASE("reduce") {
  CHECK(reduce(kCoordination) == ReducedPayoff{5, 4, 1, 7});
  CHECK(reduce(PayoffMatrix{}) == ReducedPayoff{0, 0, 0, 0});
  CHECK(reduce(kChaotic) == ReducedPayoff{-11.8, -1.8, 11.8, 1.8});
}

TEST_CASE("reduction is idempotent on the diagonal form") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 1000; ++i) {
    const ReducedPayoff r = reduce(random_matrix(gen));
    CHECK(reduce(r.diagonal_form()) == r);
  }
}

TEST_CASE("params") {
  const GameParams d = params(kDiscoordination);
  CHECK(d.A == 2.75);
  CHECK(d.B == 0.75);
  CHECK(d.C == -2.0);
  CHECK(d.D == 1.5);
  CHECK(d.coordination_x16() == -88.0);
  CHECK(d.dominance_x16() == 18.0);

  const GameParams c = params(PayoffMatrix{6, 0, 0, 1, 6, 0, 0, 1});
  CHECK(c.A == 1.75);
  CHECK(c.C == 1.75);
  CHECK(c.B == 1.25);
  CHECK(c.D == 1.25);

  CHECK(params(PayoffMatrix{}) == GameParams{0, 0, 0, 0});
}

TEST_CASE("taxonomy table values") {
  CHECK(params(kCoordination).coordination_x16() == 72.0);
  CHECK(params(kCoordination).dominance_x16() == 6.0);
  CHECK(params(kAnticoordination).coordination_x16() == 12.0);
  CHECK(params(kAnticoordination).dominance_x16() == 0.0);
  // The dominance row prints 4; the entries give -4.
  CHECK(params(kDominance).coordination_x16() == -4.0);
  CHECK(params(kDominance).dominance_x16() == 18.0);
}

TEST_CASE("classify") {
  CHECK(classify(kCoordination).game_class == GameClass::Coordination);
  CHECK(classify(kAnticoordination).game_class == GameClass::Anticoordination);
  CHECK(classify(kDiscoordination).game_class == GameClass::Discoordination);
  const Classification dom = classify(kDominance);
  CHECK(dom.game_class == GameClass::DominanceSolvable);
  REQUIRE(dom.dominant_ne);
  CHECK(*dom.dominant_ne == Cell{1, 1});
  CHECK_FALSE(classify(kCoordination).dominant_ne);

  PayoffMatrix tie = kCoordination;
  tie.c = tie.a;
  CHECK(tie.degenerate());
  CHECK_THROWS_AS(classify(tie), Error);
  try {
    classify(tie);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateGame);
  }
}

TEST_CASE("classify_by_params") {
  CHECK(classify_by_params(params(kDiscoordination)) == ParamPrediction::Discoordination);
  CHECK(classify_by_params({0.5, 1, 0.75, 0.25}) == ParamPrediction::Ambiguous);
  CHECK(classify_by_params({1, 2, 1, 2}) == ParamPrediction::DominanceSolvable);
  CHECK(classify_by_params({1, 0, 1, 0}) == ParamPrediction::Coordination);
  CHECK(classify_by_params({-1, 0, -1, 0}) == ParamPrediction::Anticoordination);
  CHECK_THROWS_AS(classify_by_params({1, 1, 1, 1}), Error);
}

TEST_CASE("pure_ne") {
  CHECK(pure_ne(kCoordination) == std::vector<Cell>{{1, 1}, {2, 2}});
  CHECK(pure_ne(kDiscoordination).empty());
  CHECK(pure_ne(PayoffMatrix{1, -1, -1, 1, -1, 1, 1, -1}).empty());
  CHECK(pure_ne(kAnticoordination) == std::vector<Cell>{{1, 2}, {2, 1}});
  CHECK(pure_ne(kDominance) == std::vector<Cell>{{1, 1}});
}

TEST_CASE("mixed_ne") {
  const auto pennies = mixed_ne(PayoffMatrix{1, -1, -1, 1, -1, 1, 1, -1});
  REQUIRE(pennies);
  CHECK(pennies->row == doctest::Approx(0.5));
  CHECK(pennies->col == doctest::Approx(0.5));

  // Row's mix leaves Column indifferent: x L = (1 - x) M, so Row puts
  // M/(L+M) = 7/8 on strategy 1 and Column puts K/(H+K) = 4/9.
  const auto coord = mixed_ne(kCoordination);
  REQUIRE(coord);
  CHECK(coord->row == doctest::Approx(7.0 / 8.0).epsilon(1e-15));
  CHECK(coord->col == doctest::Approx(4.0 / 9.0).epsilon(1e-15));

  CHECK_FALSE(mixed_ne(kDominance));
}

TEST_CASE("mixed_ne makes the opponent indifferent") {
  std::mt19937_64 gen(11);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const PayoffMatrix p = random_matrix(gen);
    const auto ne = mixed_ne(p);
    if (!ne) continue;
    ++checked;
    const double col1 = p.e * ne->row + p.f * (1 - ne->row);
    const double col2 = p.g * ne->row + p.h * (1 - ne->row);
    const double row1 = p.a * ne->col + p.b * (1 - ne->col);
    const double row2 = p.c * ne->col + p.d * (1 - ne->col);
    CHECK(col1 == doctest::Approx(col2).epsilon(1e-9).scale(1.0));
    CHECK(row1 == doctest::Approx(row2).epsilon(1e-9).scale(1.0));
    CHECK(ne->row > 0.0);
    CHECK(ne->row < 1.0);
  }
  CHECK(checked > 100);
}

TEST_CASE("ordering classes agree with best-response enumeration") {
  std::mt19937_64 gen(1);
  for (int i = 0; i < 10000; ++i) {
    const PayoffMatrix p = random_matrix(gen);
    const auto ne = brute_force_ne(p);
    const GameClass c = classify(p).game_class;
    if (ne.size() == 2)
      CHECK((c == GameClass::Coordination || c == GameClass::Anticoordination));
    else if (ne.size() == 1)
      CHECK(c == GameClass::DominanceSolvable);
    else
      CHECK(c == GameClass::Discoordination);
    CHECK(pure_ne(p) == ne);
  }
}

TEST_CASE("reduced game has the same equilibria") {
  std::mt19937_64 gen(2);
  for (int i = 0; i < 10000; ++i) {
    const PayoffMatrix p = random_matrix(gen);
    const PayoffMatrix q = reduce(p).diagonal_form();
    CHECK(pure_ne(p) == pure_ne(q));
    const auto a = mixed_ne(p), b = mixed_ne(q);
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
      CHECK(a->row == b->row);
      CHECK(a->col == b->col);
    }
  }
}

TEST_CASE("symmetric games: coordination iff |A| > |B|") {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> n(0.0, 2.0);
  for (int i = 0; i < 10000; ++i) {
    const double a = n(gen), b = n(gen), c = n(gen), d = n(gen);
    // Column's payoff in cell (i,j) is Row's payoff in cell (j,i).
    const PayoffMatrix p{a, b, c, d, a, b, c, d};
    const GameParams gp = params(p);
    REQUIRE(gp.A == gp.C);
    REQUIRE(gp.B == gp.D);
    const GameClass cls = classify(p).game_class;
    const bool coord = cls == GameClass::Coordination || cls == GameClass::Anticoordination;
    CHECK(coord == (std::abs(gp.A) > std::abs(gp.B)));
    CHECK((cls == GameClass::DominanceSolvable) == (std::abs(gp.A) < std::abs(gp.B)));
  }
}

TEST_CASE("dominance exceeding coordination implies dominance solvable") {
  std::mt19937_64 gen(4);
  int hits = 0;
  for (int i = 0; i < 10000; ++i) {
    const PayoffMatrix p = random_matrix(gen);
    const GameParams gp = params(p);
    if (std::abs(gp.coordination()) < gp.dominance()) {
      ++hits;
      CHECK(classify(p).game_class == GameClass::DominanceSolvable);
    }
  }
  CHECK(hits > 1000);
}

TEST_CASE("classification is invariant under shifts and positive scaling") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> shift(-10, 10), scale(0.01, 100);
  for (int i = 0; i < 2000; ++i) {
    const PayoffMatrix p = random_matrix(gen);
    const GameClass c = classify(p).game_class;
    CHECK(classify(p.shifted_row(shift(gen))).game_class == c);
    CHECK(classify(p.shifted_col(shift(gen))).game_class == c);
    CHECK(classify(p.scaled(scale(gen))).game_class == c);
  }
}

TEST_CASE("payoff serialization") {
  CHECK(to_csv(kCoordination) == "5,-1,0,3,2,-3,1,4");
  CHECK(parse_payoffs(to_csv(kDiscoordination)) == kDiscoordination);
  CHECK(parse_payoffs(to_json(kChaotic)) == kChaotic);
  CHECK(parse_payoffs(" {\"a\":1,\"b\":2,\"c\":3,\"d\":4,\"e\":5,\"f\":6,\"g\":7,\"h\":8}") ==
        PayoffMatrix{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK_THROWS_AS(parse_payoffs("1,2,3"), Error);
  CHECK_THROWS_AS(parse_payoffs("1,2,3,4,5,6,7,x"), Error);
  CHECK_THROWS_AS(parse_payoffs("{\"a\":1}"), Error);
  CHECK_THROWS_AS(parse_payoffs("1,2,3,4,5,6,7,inf"), Error);
}
