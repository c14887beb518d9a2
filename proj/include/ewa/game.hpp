#pragma once

// 2x2 bimatrix games: reduced payoffs, the A/B/C/D parameters, the
// three-class taxonomy and Nash equilibria.
//
// Layout of the bimatrix (Row payoff first in each cell):
//
//            col 1   col 2
//   row 1    a, e    b, g
//   row 2    c, f    d, h

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ewa {

struct PayoffMatrix {
  double a = 0, b = 0, c = 0, d = 0;  // Row
  double e = 0, f = 0, g = 0, h = 0;  // Column

  bool finite() const noexcept;
  // True when any compared pair (a,c), (b,d), (e,g), (f,h) is tied.
  bool degenerate() const noexcept;

  // Adds `shift` to every payoff of one player.
  PayoffMatrix shifted_row(double shift) const noexcept;
  PayoffMatrix shifted_col(double shift) const noexcept;
  PayoffMatrix scaled(double factor) const noexcept;

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;
};

// H = a-c, K = d-b, L = e-g, M = h-f.
struct ReducedPayoff {
  double H = 0, K = 0, L = 0, M = 0;

  // The equivalent matrix with zero off-diagonal cells:
  //   ((H,L), (0,0); (0,0), (K,M)).
  PayoffMatrix diagonal_form() const noexcept;

  friend bool operator==(const ReducedPayoff&, const ReducedPayoff&) = default;
};

struct GameParams {
  double A = 0, B = 0, C = 0, D = 0;  // with the 1/4 factor

  double coordination() const noexcept { return A * C; }
  double dominance() const noexcept;
  // The scale printed in the taxonomy table, which drops the 1/4 factors.
  double coordination_x16() const noexcept { return 16.0 * coordination(); }
  double dominance_x16() const noexcept { return 16.0 * dominance(); }

  friend bool operator==(const GameParams&, const GameParams&) = default;
};

enum class GameClass { Coordination, Anticoordination, Discoordination, DominanceSolvable };

// Strategies are labelled 1 and 2.
struct Cell {
  int row = 1;
  int col = 1;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Classification {
  GameClass game_class = GameClass::DominanceSolvable;
  std::optional<Cell> dominant_ne;  // set for dominance-solvable games only
};

enum class ParamPrediction {
  Coordination,
  Anticoordination,
  Discoordination,
  DominanceSolvable,
  Ambiguous,
};

// Interior equilibrium: probability each player puts on strategy 1.
struct MixedNe {
  double row = 0.5;
  double col = 0.5;
};

ReducedPayoff reduce(const PayoffMatrix& p) noexcept;
GameParams params(const PayoffMatrix& p) noexcept;
GameParams params(const ReducedPayoff& r) noexcept;

// Diagonal-form matrix with the given parameters: H=2(A+B), K=2(A-B),
// L=2(C+D), M=2(C-D).
PayoffMatrix diagonal_game(const GameParams& gp) noexcept;

// Throws DegenerateGame on ties.
Classification classify(const PayoffMatrix& p);

// One-directional prediction from coordination |AC| versus dominance |BD|.
// Throws BoundaryCase when |AC| == |BD|.
ParamPrediction classify_by_params(const GameParams& gp);

// Cells that are mutual best responses, sorted. Throws DegenerateGame.
std::vector<Cell> pure_ne(const PayoffMatrix& p);

// Interior NE for (anti)coordination and discoordination games, nullopt for
// dominance-solvable ones. Throws DegenerateGame.
std::optional<MixedNe> mixed_ne(const PayoffMatrix& p);

std::string_view to_string(GameClass c) noexcept;
std::string_view to_string(ParamPrediction c) noexcept;

// Serialization: CSV row "a,b,c,d,e,f,g,h" or JSON {"a":..,...,"h":..}.
std::string to_csv(const PayoffMatrix& p);
std::string to_json(const PayoffMatrix& p);
PayoffMatrix payoffs_from_csv(std::string_view text);
PayoffMatrix payoffs_from_json(std::string_view text);
// Detects the format from the first non-blank character.
PayoffMatrix parse_payoffs(std::string_view text);

}  // namespace ewa
