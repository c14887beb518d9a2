#include "ewa/game.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "ewa/error.hpp"

namespace ewa {

namespace {

void require_nondegenerate(const PayoffMatrix& p) {
  if (!p.finite()) fail(ErrorCode::InvalidArgument, "payoffs must be finite");
  if (p.degenerate()) fail(ErrorCode::DegenerateGame, "degenerate game: tied payoff comparison");
}

double row_payoff(const PayoffMatrix& p, int i, int j) {
  if (i == 1) return j == 1 ? p.a : p.b;
  return j == 1 ? p.c : p.d;
}

double col_payoff(const PayoffMatrix& p, int i, int j) {
  if (i == 1) return j == 1 ? p.e : p.g;
  return j == 1 ? p.f : p.h;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

bool PayoffMatrix::finite() const noexcept {
  for (double v : {a, b, c, d, e, f, g, h})
    if (!std::isfinite(v)) return false;
  return true;
}

bool PayoffMatrix::degenerate() const noexcept {
  return a == c || b == d || e == g || f == h;
}

PayoffMatrix PayoffMatrix::shifted_row(double s) const noexcept {
  return {a + s, b + s, c + s, d + s, e, f, g, h};
}

PayoffMatrix PayoffMatrix::shifted_col(double s) const noexcept {
  return {a, b, c, d, e + s, f + s, g + s, h + s};
}

PayoffMatrix PayoffMatrix::scaled(double k) const noexcept {
  return {a * k, b * k, c * k, d * k, e * k, f * k, g * k, h * k};
}

PayoffMatrix ReducedPayoff::diagonal_form() const noexcept {
  PayoffMatrix p;
  p.a = H;
  p.e = L;
  p.d = K;
  p.h = M;
  return p;
}

double GameParams::dominance() const noexcept { return std::abs(B * D); }

ReducedPayoff reduce(const PayoffMatrix& p) noexcept {
  return {p.a - p.c, p.d - p.b, p.e - p.g, p.h - p.f};
}

GameParams params(const PayoffMatrix& p) noexcept {
  return {(p.a + p.d - p.b - p.c) / 4.0, (p.a + p.b - p.c - p.d) / 4.0,
          (p.e + p.h - p.f - p.g) / 4.0, (p.e + p.f - p.g - p.h) / 4.0};
}

GameParams params(const ReducedPayoff& r) noexcept {
  return {(r.H + r.K) / 4.0, (r.H - r.K) / 4.0, (r.L + r.M) / 4.0, (r.L - r.M) / 4.0};
}

PayoffMatrix diagonal_game(const GameParams& gp) noexcept {
  ReducedPayoff r{2.0 * (gp.A + gp.B), 2.0 * (gp.A - gp.B), 2.0 * (gp.C + gp.D),
                  2.0 * (gp.C - gp.D)};
  return r.diagonal_form();
}

Classification classify(const PayoffMatrix& p) {
  require_nondegenerate(p);
  const bool ac = p.a > p.c;
  const bool db = p.d > p.b;
  const bool eg = p.e > p.g;
  const bool hf = p.h > p.f;

  if (ac && db && eg && hf) return {GameClass::Coordination, std::nullopt};
  if (!ac && !db && !eg && !hf) return {GameClass::Anticoordination, std::nullopt};
  if ((ac && db && !eg && !hf) || (!ac && !db && eg && hf))
    return {GameClass::Discoordination, std::nullopt};

  // One round of elimination suffices in 2x2: at least one player has a
  // strictly dominant strategy, the other best-responds to it.
  Cell ne;
  if (ac != db) {
    ne.row = ac ? 1 : 2;  // a>c and b>d, or a<c and b<d
    ne.col = (ne.row == 1 ? p.e > p.g : p.f > p.h) ? 1 : 2;
  } else {
    ne.col = eg ? 1 : 2;
    ne.row = (ne.col == 1 ? p.a > p.c : p.b > p.d) ? 1 : 2;
  }
  return {GameClass::DominanceSolvable, ne};
}

ParamPrediction classify_by_params(const GameParams& gp) {
  const double coord = std::abs(gp.coordination());
  const double dom = gp.dominance();
  if (coord == dom) fail(ErrorCode::BoundaryCase, "|AC| == |BD|: no prediction");
  if (coord < dom) return ParamPrediction::DominanceSolvable;
  if (!(std::abs(gp.B) < std::abs(gp.A) && std::abs(gp.D) < std::abs(gp.C)))
    return ParamPrediction::Ambiguous;
  if (gp.coordination() < 0) return ParamPrediction::Discoordination;
  return gp.A > 0 ? ParamPrediction::Coordination : ParamPrediction::Anticoordination;
}

std::vector<Cell> pure_ne(const PayoffMatrix& p) {
  require_nondegenerate(p);
  std::vector<Cell> out;
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const bool row_best = row_payoff(p, i, j) > row_payoff(p, 3 - i, j);
      const bool col_best = col_payoff(p, i, j) > col_payoff(p, i, 3 - j);
      if (row_best && col_best) out.push_back({i, j});
    }
  }
  return out;
}

std::optional<MixedNe> mixed_ne(const PayoffMatrix& p) {
  if (classify(p).game_class == GameClass::DominanceSolvable) return std::nullopt;
  const ReducedPayoff r = reduce(p);
  if (r.H + r.K == 0 || r.L + r.M == 0)
    fail(ErrorCode::DegenerateGame, "degenerate game: H+K or L+M vanishes");
  // Each player's mix makes the opponent indifferent.
  MixedNe ne{r.M / (r.L + r.M), r.K / (r.H + r.K)};
  if (!(ne.row > 0 && ne.row < 1 && ne.col > 0 && ne.col < 1)) return std::nullopt;
  return ne;
}

std::string_view to_string(GameClass c) noexcept {
  switch (c) {
    case GameClass::Coordination: return "coordination";
    case GameClass::Anticoordination: return "anticoordination";
    case GameClass::Discoordination: return "discoordination";
    case GameClass::DominanceSolvable: return "dominance-solvable";
  }
  return "unknown";
}

std::string_view to_string(ParamPrediction c) noexcept {
  switch (c) {
    case ParamPrediction::Coordination: return "coordination";
    case ParamPrediction::Anticoordination: return "anticoordination";
    case ParamPrediction::Discoordination: return "discoordination";
    case ParamPrediction::DominanceSolvable: return "dominance-solvable";
    case ParamPrediction::Ambiguous: return "ambiguous";
  }
  return "unknown";
}

std::string to_csv(const PayoffMatrix& p) {
  std::string out;
  bool first = true;
  for (double v : {p.a, p.b, p.c, p.d, p.e, p.f, p.g, p.h}) {
    if (!first) out += ',';
    out += format_number(v);
    first = false;
  }
  return out;
}

std::string to_json(const PayoffMatrix& p) {
  nlohmann::ordered_json j = {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d},
                              {"e", p.e}, {"f", p.f}, {"g", p.g}, {"h", p.h}};
  return j.dump();
}

PayoffMatrix payoffs_from_csv(std::string_view text) {
  double v[8];
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front())))
      field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back())))
      field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    if (n == 8) fail(ErrorCode::InvalidArgument, "payoff CSV must have exactly 8 fields");
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v[n]);
    if (ec != std::errc{} || end != field.data() + field.size() || field.empty())
      fail(ErrorCode::InvalidArgument, "invalid payoff value '" + std::string(field) + "'");
    ++n;
    pos = comma + 1;
  }
  if (n != 8) fail(ErrorCode::InvalidArgument, "payoff CSV must have exactly 8 fields");
  PayoffMatrix p{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
  if (!p.finite()) fail(ErrorCode::InvalidArgument, "payoffs must be finite");
  return p;
}

PayoffMatrix payoffs_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("invalid payoff JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::InvalidArgument, "payoff JSON must be an object");
  auto field = [&](const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number())
      fail(ErrorCode::InvalidArgument, std::string("payoff JSON missing numeric field '") + key + "'");
    return it->get<double>();
  };
  PayoffMatrix p{field("a"), field("b"), field("c"), field("d"),
                 field("e"), field("f"), field("g"), field("h")};
  if (!p.finite()) fail(ErrorCode::InvalidArgument, "payoffs must be finite");
  return p;
}

PayoffMatrix parse_payoffs(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') return payoffs_from_json(text);
  // Strip a trailing newline from single-row CSV files.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return payoffs_from_csv(text.substr(i));
}

}  // namespace ewa
