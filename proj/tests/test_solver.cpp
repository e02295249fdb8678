#include <algorithm>

#include "doctest.h"
#include "gammak/solver.hpp"
#include "oracles.hpp"

using gammak::GameParams;
using gammak::MoveKind;
using gammak::MoveSpec;
using gammak::PNGrid;
using gammak::Position;
using gammak::WinningMove;

TEST_CASE("k=1 grid equals the classical P-positions") {
  PNGrid grid = gammak::solve_grid(GameParams(1), 12);
  std::vector<Position> expected;
  for (std::int64_t n = 0;; ++n) {
    std::int64_t a = oracles::golden_floor(n);
    std::int64_t b = a + n;
    if (b > 12) break;
    expected.push_back(Position{a, b});
  }
  CHECK(grid.p_positions() == expected);
  CHECK(grid.p_positions() ==
        std::vector<Position>{{0, 0}, {1, 2}, {3, 5}, {4, 7}, {6, 10}});
}

TEST_CASE("k=2 grid prefix") {
  PNGrid grid = gammak::solve_grid(GameParams(2), 12);
  CHECK(grid.p_positions() == std::vector<Position>{{0, 0}, {1, 3}, {2, 7}, {4, 11}});
  CHECK(grid.is_p(3, 1));  // unordered lookup
  CHECK_FALSE(grid.is_p(1, 2));

  PNGrid trivial = gammak::solve_grid(GameParams(2), 0);
  CHECK(trivial.p_positions() == std::vector<Position>{{0, 0}});
}

TEST_CASE("accelerated induction equals plain enumeration") {
  for (std::int64_t k : {1, 2, 3, 4, 5}) {
    GameParams params(k);
    PNGrid grid = gammak::solve_grid(params, 40);
    CHECK(grid.p_positions() == oracles::naive_p_positions(params, 40));
  }
}

TEST_CASE("solver P-set equals the pair set") {
  for (std::int64_t k : {1, 2, 5}) {
    gammak::GridCheck check = gammak::verify_p_set(GameParams(k), 500);
    CHECK(check.ok);
    CHECK(check.detail.empty());
  }
  // nothing pins k to single digits
  for (std::int64_t k : {12, 37}) {
    CHECK(gammak::verify_p_set(GameParams(k), 300).ok);
    CHECK(gammak::check_no_p_to_p(GameParams(k), 300).ok);
  }
}

TEST_CASE("no move connects two pair-set members") {
  CHECK(gammak::check_no_p_to_p(GameParams(2), 300).ok);
  CHECK(gammak::check_no_p_to_p(GameParams(4), 300).ok);
  CHECK(gammak::check_no_p_to_p(GameParams(2), 3).ok);
}

TEST_CASE("membership and tau indices") {
  GameParams params4(4);
  CHECK(gammak::is_p_position(params4, Position{38, 186}));
  CHECK(gammak::is_p_position(params4, Position{186, 38}));
  CHECK(gammak::is_p_position(params4, Position{18, 87}));
  CHECK_FALSE(gammak::is_p_position(params4, Position{38, 185}));
  CHECK(gammak::is_p_position(params4, Position{0, 0}));
  CHECK_FALSE(gammak::is_p_position(params4, Position{0, 1}));

  auto n = gammak::index_in_a(params4, 38);
  REQUIRE(n.has_value());
  CHECK(gammak::index_of_pposition(params4, *n) == 2);

  GameParams params2(2);
  CHECK_FALSE(gammak::index_of_pposition(params2, 1).has_value());  // sigma
  CHECK(gammak::index_of_pposition(params2, 2) == 1);               // tau_1
  CHECK_FALSE(gammak::index_of_pposition(params2, 3).has_value());  // tau_2 = tau_k
}

TEST_CASE("winning moves on the worked examples") {
  GameParams params4(4);
  auto wm = gammak::winning_move(params4, Position{38, 185});
  REQUIRE(wm.has_value());
  CHECK(wm->move == MoveSpec{20, 98, MoveKind::TypeIII, 2});
  CHECK(wm->target == Position{18, 87});
  CHECK(gammak::to_string(*wm) == "TypeIII i=2 (20,98) -> (18,87)");

  GameParams params2(2);
  CHECK_FALSE(gammak::winning_move(params2, Position{1, 3}).has_value());

  auto from_26 = gammak::winning_move(params2, Position{2, 6});
  REQUIRE(from_26.has_value());
  CHECK(from_26->move == MoveSpec{2, 6, MoveKind::TypeIII, 1});
  CHECK(from_26->target == Position{0, 0});

  auto nim = gammak::winning_move(params2, Position{0, 5});
  REQUIRE(nim.has_value());
  CHECK(nim->move == MoveSpec{0, 5, MoveKind::TypeI, 0});
  CHECK(nim->target == Position{0, 0});

  // diagonal case: (4,9) with gap 5 lands on (2,7)
  auto diag = gammak::winning_move(params2, Position{4, 9});
  REQUIRE(diag.has_value());
  CHECK(diag->move == MoveSpec{2, 2, MoveKind::TypeII, 0});
  CHECK(diag->target == Position{2, 7});
}

TEST_CASE("winning-move audit against the grid classification") {
  for (std::int64_t k : {1, 2, 3, 6}) {
    GameParams params(k);
    const std::int64_t bound = 200;
    PNGrid grid = gammak::solve_grid(params, bound);
    gammak::ExtraMoveTable extras(params, bound);
    for (std::int64_t x = 0; x <= bound; ++x) {
      for (std::int64_t y = x; y <= bound; ++y) {
        auto wm = gammak::winning_move(params, Position{x, y});
        if (grid.is_p(x, y)) {
          CHECK_FALSE(wm.has_value());
          continue;
        }
        REQUIRE(wm.has_value());
        // the move is legal, lands on its stated target, and that target
        // is a pair-set member
        CHECK(gammak::is_move_in_gamma(params, wm->move.u, wm->move.v, extras));
        bool straight = x - wm->move.u >= 0 && y - wm->move.v >= 0 &&
                        Position::of(x - wm->move.u, y - wm->move.v) == wm->target;
        bool crossed = x - wm->move.v >= 0 && y - wm->move.u >= 0 &&
                       Position::of(x - wm->move.v, y - wm->move.u) == wm->target;
        CHECK((straight || crossed));
        CHECK(gammak::is_p_position(params, wm->target));
        CHECK(grid.is_p(wm->target.x, wm->target.y));
        // never the extra-move branch when k = 1
        if (k == 1) CHECK(wm->move.kind != MoveKind::TypeIII);
      }
    }
  }
}

TEST_CASE("verification reports a witness when the move set is broken") {
  // dropping the extra moves must break k=2 at (2,6) -> first bad cell
  GameParams params(2);
  PNGrid crippled = gammak::solve_grid(params, 50, {});
  std::vector<Position> expected = gammak::s_set(params, 50);
  CHECK(crippled.p_positions() != expected);
}
