// gammak: sequence dumps, ruleset verification, best-move queries, an
// interactive play mode, word cross-checks and greedy move mining for the
// two-heap take-away family parameterized by k.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gammak/ruleset.hpp"
#include "gammak/solver.hpp"
#include "gammak/sturmian.hpp"
#include "gammak/synth.hpp"

using json = nlohmann::ordered_json;

namespace {

using gammak::GameParams;
using gammak::Position;

std::string show(Position p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string letter_name(std::int32_t letter) {
  return letter == 0 ? "s" : "t" + std::to_string(letter);
}

struct SeqOptions {
  std::int64_t k = 1;
  std::int64_t n_max = 10;
  std::string format = "table";
};

int run_seq(const SeqOptions& opt) {
  GameParams params(opt.k);
  struct Row {
    std::int64_t n, a, b, c, d;
    std::int32_t letter;
  };
  std::vector<Row> rows;
  if (opt.n_max >= 1) {
    gammak::BeattyTables tables(params, opt.n_max);
    gammak::Word word = gammak::word_from_steps(tables, opt.n_max);
    for (std::int64_t n = 1; n <= opt.n_max; ++n) {
      rows.push_back(Row{n, tables.a(n), tables.b(n), tables.c(n), tables.d(n),
                         word[static_cast<std::size_t>(n - 1)]});
    }
  }
  auto index_text = [&](std::int32_t letter) {
    return letter >= 1 && letter < params.k ? std::to_string(letter) : std::string();
  };

  if (opt.format == "csv") {
    std::cout << "n,a,b,c,d,letter,index\n";
    for (const Row& r : rows) {
      std::cout << r.n << ',' << r.a << ',' << r.b << ',' << r.c << ',' << r.d << ','
                << letter_name(r.letter) << ',' << index_text(r.letter) << '\n';
    }
  } else if (opt.format == "json") {
    json out;
    out["k"] = opt.k;
    out["n_max"] = opt.n_max;
    out["rows"] = json::array();
    for (const Row& r : rows) {
      json row;
      row["n"] = r.n;
      row["a"] = r.a;
      row["b"] = r.b;
      row["c"] = r.c;
      row["d"] = r.d;
      row["letter"] = letter_name(r.letter);
      if (!index_text(r.letter).empty()) {
        row["index"] = r.letter;
      } else {
        row["index"] = nullptr;
      }
      out["rows"].push_back(row);
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::printf("%6s %8s %8s %3s %3s %-6s %s\n", "n", "a", "b", "c", "d", "letter", "index");
    for (const Row& r : rows) {
      std::printf("%6lld %8lld %8lld %3lld %3lld %-6s %s\n", static_cast<long long>(r.n),
                  static_cast<long long>(r.a), static_cast<long long>(r.b),
                  static_cast<long long>(r.c), static_cast<long long>(r.d),
                  letter_name(r.letter).c_str(), index_text(r.letter).c_str());
    }
  }
  return 0;
}

struct VerifyOptions {
  std::int64_t k = 1;
  std::int64_t bound = 500;
  std::string format = "table";
};

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string witness;
};

// every N-position in the grid must get a legal move onto a pair-set member
CheckLine audit_winning_moves(const GameParams& params, std::int64_t bound,
                              const gammak::PNGrid& grid) {
  CheckLine line{"winning_move_audit", true, ""};
  gammak::ExtraMoveTable extras(params, bound);
  for (std::int64_t x = 0; x <= bound && line.pass; ++x) {
    for (std::int64_t y = x; y <= bound; ++y) {
      std::optional<gammak::WinningMove> wm = gammak::winning_move(params, Position{x, y});
      bool solver_p = grid.is_p(x, y);
      if (solver_p != !wm.has_value()) {
        line.pass = false;
        line.witness = show(Position{x, y}) + " classification mismatch";
        break;
      }
      if (!wm.has_value()) continue;
      bool straight = x - wm->move.u >= 0 && y - wm->move.v >= 0 &&
                      Position::of(x - wm->move.u, y - wm->move.v) == wm->target;
      bool crossed = x - wm->move.v >= 0 && y - wm->move.u >= 0 &&
                     Position::of(x - wm->move.v, y - wm->move.u) == wm->target;
      if (!gammak::is_move_in_gamma(params, wm->move.u, wm->move.v, extras) ||
          !(straight || crossed) || !gammak::is_p_position(params, wm->target)) {
        line.pass = false;
        line.witness = show(Position{x, y}) + " bad move " + gammak::to_string(wm->move);
        break;
      }
    }
  }
  return line;
}

int run_verify(const VerifyOptions& opt) {
  GameParams params(opt.k);
  auto start = std::chrono::steady_clock::now();

  std::vector<CheckLine> checks;
  gammak::GridCheck equal = gammak::verify_p_set(params, opt.bound);
  {
    CheckLine line{"p_set_matches_pairs", equal.ok, ""};
    if (!equal.ok && equal.witness.has_value())
      line.witness = show(*equal.witness) + ": " + equal.detail;
    checks.push_back(line);
  }
  gammak::GridCheck no_link = gammak::check_no_p_to_p(params, opt.bound);
  {
    CheckLine line{"no_p_to_p", no_link.ok, ""};
    if (!no_link.ok && no_link.witness.has_value())
      line.witness = show(*no_link.witness) + " -> " + show(*no_link.witness2);
    checks.push_back(line);
  }
  checks.push_back(audit_winning_moves(params, opt.bound,
                                       gammak::solve_grid(params, opt.bound)));

  bool all = true;
  for (const CheckLine& line : checks) all = all && line.pass;
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  if (opt.format == "json") {
    json out;
    out["k"] = opt.k;
    out["bound"] = opt.bound;
    out["checks"] = json::array();
    for (const CheckLine& line : checks) {
      json entry;
      entry["name"] = line.name;
      entry["pass"] = line.pass;
      if (!line.witness.empty()) entry["witness"] = line.witness;
      out["checks"].push_back(entry);
    }
    out["timings_ms"] = elapsed;
    std::cout << out.dump(2) << '\n';
  } else if (opt.format == "csv") {
    std::cout << "name,pass,witness\n";
    for (const CheckLine& line : checks) {
      std::cout << line.name << ',' << (line.pass ? "true" : "false") << ',' << line.witness
                << '\n';
    }
  } else {
    std::cout << "k=" << opt.k << " bound=" << opt.bound << '\n';
    for (const CheckLine& line : checks) {
      std::cout << "  " << line.name << ": " << (line.pass ? "PASS" : "FAIL");
      if (!line.witness.empty()) std::cout << "  [" << line.witness << "]";
      std::cout << '\n';
    }
    std::cout << "overall: " << (all ? "PASS" : "FAIL") << " (" << elapsed << " ms)\n";
  }
  return all ? 0 : 1;
}

struct BestOptions {
  std::int64_t k = 1;
  std::vector<std::int64_t> heaps;
  std::string format = "table";
};

int run_best(const BestOptions& opt) {
  GameParams params(opt.k);
  Position pos = Position::of(opt.heaps[0], opt.heaps[1]);
  std::optional<gammak::WinningMove> wm = gammak::winning_move(params, pos);
  if (opt.format == "json") {
    json out;
    out["k"] = opt.k;
    out["position"] = {pos.x, pos.y};
    out["p_position"] = !wm.has_value();
    if (wm.has_value()) {
      json move;
      move["kind"] = wm->move.kind == gammak::MoveKind::TypeI    ? "TypeI"
                     : wm->move.kind == gammak::MoveKind::TypeII ? "TypeII"
                                                                 : "TypeIII";
      if (wm->move.kind == gammak::MoveKind::TypeIII) move["i"] = wm->move.i;
      move["u"] = wm->move.u;
      move["v"] = wm->move.v;
      out["move"] = move;
      out["target"] = {wm->target.x, wm->target.y};
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "position " << show(pos) << '\n';
    if (wm.has_value()) {
      std::cout << gammak::to_string(*wm) << '\n';
    } else {
      std::cout << "P-position\n";
    }
  }
  return 0;
}

struct WordOptions {
  std::int64_t k = 1;
  std::int64_t length = 40;
  std::string via = "phi";
  bool check = false;
  std::string format = "table";
};

int run_word(const WordOptions& opt) {
  GameParams params(opt.k);
  gammak::Word word;
  if (opt.via == "beatty") {
    gammak::BeattyTables tables(params, opt.length);
    word = gammak::word_from_steps(tables, opt.length);
  } else if (opt.via == "theta") {
    word = gammak::theta_based_word(params, opt.length);
  } else {
    word = gammak::phi_word(params, opt.length);
  }

  if (opt.format == "json") {
    json out;
    out["k"] = opt.k;
    out["length"] = opt.length;
    out["via"] = opt.via;
    out["letters"] = json::array();
    for (std::int32_t letter : word) out["letters"].push_back(letter_name(letter));
    if (opt.check) {
      gammak::AgreementReport report = gammak::check_constructions_agree(params, opt.length);
      out["constructions_agree"] = report.all_agree;
      if (!report.all_agree) out["first_mismatch"] = report.first_mismatch;
    }
    std::cout << out.dump(2) << '\n';
    if (opt.check && !gammak::check_constructions_agree(params, opt.length).all_agree) return 1;
    return 0;
  }

  std::string dump;
  dump.reserve(word.size());
  for (std::int32_t letter : word) dump.push_back(letter == 0 ? 's' : 't');
  std::cout << dump << '\n';
  if (opt.check) {
    gammak::AgreementReport report = gammak::check_constructions_agree(params, opt.length);
    if (report.all_agree) {
      std::cout << "3/3 constructions agree\n";
    } else {
      std::cout << "constructions disagree at position " << report.first_mismatch << '\n';
      return 1;
    }
  }
  return 0;
}

struct SynthOptions {
  std::int64_t k = 1;
  std::int64_t bound = 100;
  std::string format = "table";
};

int run_synth(const SynthOptions& opt) {
  GameParams params(opt.k);
  gammak::SynthReport report = gammak::compare_with_extra_moves(params, opt.bound);
  if (opt.format == "json") {
    json out;
    out["k"] = opt.k;
    out["bound"] = opt.bound;
    out["order"] = gammak::to_string(report.order);
    out["adjoined"] = json::array();
    for (const auto& [u, v] : report.adjoined) out["adjoined"].push_back({u, v});
    out["matches_extra_moves"] = report.equal;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "adjoined moves (" << gammak::to_string(report.order) << "):";
    if (report.adjoined.empty()) std::cout << " none";
    for (const auto& [u, v] : report.adjoined)
      std::cout << " (" << u << "," << v << ")";
    std::cout << '\n';
    std::cout << "matches extra moves: " << (report.equal ? "yes" : "no") << " (order "
              << gammak::to_string(report.order) << ")\n";
    if (!report.equal) {
      for (const auto& [u, v] : report.only_adjoined)
        std::cout << "  mined only: (" << u << "," << v << ")\n";
      for (const auto& [u, v] : report.only_expected)
        std::cout << "  closed-form only: (" << u << "," << v << ")\n";
    }
  }
  return report.equal ? 0 : 1;
}

struct PlayOptions {
  std::int64_t k = 1;
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool engine_first = false;
};

int run_play(const PlayOptions& opt) {
  GameParams params(opt.k);
  Position pos = Position::of(opt.x, opt.y);
  std::cout << "two-heap take-away, k=" << opt.k << "; reach (0,0) to win\n";
  std::cout << "enter moves as: u v [l|s]  (v leaves the larger heap unless you say s)\n";

  bool engines_turn = opt.engine_first;
  while (true) {
    std::cout << "position " << show(pos) << '\n';
    if (pos == Position{0, 0}) {
      std::cout << (engines_turn ? "you win\n" : "engine wins\n");
      return 0;
    }
    if (engines_turn) {
      std::optional<gammak::WinningMove> wm = gammak::winning_move(params, pos);
      Position next{0, 0};
      std::string text;
      if (wm.has_value()) {
        next = wm->target;
        text = gammak::to_string(*wm);
      } else {
        // lost position: smallest stalling move
        next = Position::of(pos.x, pos.y - 1);
        text = "TypeI (0,1) -> " + show(next);
      }
      std::cout << "engine plays " << text << '\n';
      pos = next;
      engines_turn = false;
      continue;
    }

    std::cout << "> " << std::flush;
    std::string input;
    if (!std::getline(std::cin, input)) {
      std::cout << "\nno input, leaving the game\n";
      return 0;
    }
    std::istringstream stream(input);
    std::int64_t u = 0;
    std::int64_t v = 0;
    std::string orient;
    if (!(stream >> u >> v)) {
      std::cout << "could not parse, expected: u v [l|s]\n";
      continue;
    }
    stream >> orient;
    if (u > v) std::swap(u, v);
    gammak::ExtraMoveTable extras(params, std::max<std::int64_t>(v, 1));
    gammak::MoveClass cls = gammak::classify_move(params, u, v, extras);
    if (!cls.legal) {
      std::cout << "illegal move: (" << u << "," << v << ") is not in the move set\n";
      continue;
    }
    bool can_large = pos.x - u >= 0 && pos.y - v >= 0;
    bool can_small = pos.x - v >= 0 && pos.y - u >= 0;
    Position next_large = can_large ? Position::of(pos.x - u, pos.y - v) : Position{0, 0};
    Position next_small = can_small ? Position::of(pos.x - v, pos.y - u) : Position{0, 0};
    if (!can_large && !can_small) {
      std::cout << "illegal move: a heap would go negative\n";
      continue;
    }
    Position next{0, 0};
    if (orient == "s") {
      if (!can_small) {
        std::cout << "illegal move: that orientation drains a heap below zero\n";
        continue;
      }
      next = next_small;
    } else if (orient == "l" || orient.empty()) {
      if (!can_large && orient == "l") {
        std::cout << "illegal move: that orientation drains a heap below zero\n";
        continue;
      }
      if (orient.empty() && can_large && can_small && next_large != next_small) {
        std::cout << "ambiguous: add l (v from larger heap) or s (v from smaller)\n";
        continue;
      }
      next = can_large ? next_large : next_small;
    } else {
      std::cout << "could not parse, expected: u v [l|s]\n";
      continue;
    }
    std::cout << "you play " << gammak::to_string(cls.move) << " -> " << show(next) << '\n';
    pos = next;
    engines_turn = true;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-heap take-away games whose P-positions are Beatty pairs"};
  app.require_subcommand(1);

  const auto k_range = CLI::Range(static_cast<std::int64_t>(1), static_cast<std::int64_t>(1000000));
  // exact surd arithmetic keeps single-position queries cheap at any size
  const auto heap_range = CLI::Range(static_cast<std::int64_t>(0), static_cast<std::int64_t>(1000000000000000));
  // grids and tables live in memory, so their bounds stay modest
  const auto grid_range = CLI::Range(static_cast<std::int64_t>(1), static_cast<std::int64_t>(30000));
  const auto rows_range = CLI::Range(static_cast<std::int64_t>(0), static_cast<std::int64_t>(1000000));
  const auto len_range = CLI::Range(static_cast<std::int64_t>(1), static_cast<std::int64_t>(1000000));
  const auto format_ok = CLI::IsMember({"table", "csv", "json"});

  SeqOptions seq_opt;
  CLI::App* seq = app.add_subcommand("seq", "dump n, a, b, c, d, letter, index rows");
  seq->add_option("--k", seq_opt.k, "game parameter")->required()->check(k_range);
  seq->add_option("--n,--n-max", seq_opt.n_max, "last row")->required()->check(rows_range);
  seq->add_option("--format", seq_opt.format, "table, csv or json")->check(format_ok);

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "run the P-set checks on a bounded grid");
  verify->add_option("--k", verify_opt.k, "game parameter")->required()->check(k_range);
  verify->add_option("--bound", verify_opt.bound, "grid bound")->required()->check(grid_range);
  verify->add_option("--format", verify_opt.format, "table, csv or json")->check(format_ok);

  BestOptions best_opt;
  CLI::App* best = app.add_subcommand("best", "winning move from a position");
  best->add_option("--k", best_opt.k, "game parameter")->required()->check(k_range);
  best->add_option("heaps", best_opt.heaps, "the two heap sizes")
      ->required()
      ->expected(2)
      ->check(heap_range);
  best->add_option("--format", best_opt.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  PlayOptions play_opt;
  CLI::App* play = app.add_subcommand("play", "interactive game against the engine");
  play->add_option("--k", play_opt.k, "game parameter")->required()->check(k_range);
  play->add_option("--x", play_opt.x, "first heap")->required()->check(heap_range);
  play->add_option("--y", play_opt.y, "second heap")->required()->check(heap_range);
  play->add_flag("--engine-first", play_opt.engine_first, "engine moves first");

  WordOptions word_opt;
  CLI::App* word = app.add_subcommand("word", "dump and cross-check the coding word");
  word->add_option("--k", word_opt.k, "game parameter")->required()->check(k_range);
  word->add_option("--len", word_opt.length, "prefix length")->required()->check(len_range);
  word->add_option("--via", word_opt.via, "construction: beatty, phi or theta")
      ->check(CLI::IsMember({"beatty", "phi", "theta"}));
  word->add_flag("--check", word_opt.check, "compare all three constructions");
  word->add_option("--format", word_opt.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  SynthOptions synth_opt;
  CLI::App* synth = app.add_subcommand("synth", "mine moves greedily and compare");
  synth->add_option("--k", synth_opt.k, "game parameter")->required()->check(k_range);
  synth->add_option("--bound", synth_opt.bound, "traversal bound")->required()->check(grid_range);
  synth->add_option("--format", synth_opt.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }

  try {
    if (*seq) return run_seq(seq_opt);
    if (*verify) return run_verify(verify_opt);
    if (*best) return run_best(best_opt);
    if (*play) return run_play(play_opt);
    if (*word) return run_word(word_opt);
    if (*synth) return run_synth(synth_opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
