#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bmw/brauer.hpp"
#include "bmw/chart_graph.hpp"
#include "bmw/chart_moves.hpp"
#include "bmw/invariants.hpp"
#include "bmw/io.hpp"
#include "bmw/rules.hpp"
#include "bmw/svg.hpp"

using namespace bmw;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kBudget = 3 };

bool color() { return std::getenv("NO_COLOR") == nullptr && ::isatty(STDERR_FILENO); }

int fail(int code, const std::string& msg) {
  if (color())
    std::cerr << "\033[31merror:\033[0m " << msg << '\n';
  else
    std::cerr << "error: " << msg << '\n';
  return code;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

bool looks_like_chart(const nlohmann::json& j) { return j.is_object() && j.contains("vertices"); }

struct RuleArgs {
  std::string tag;
  int i = 1, j = 2, eps = 1, delta = 1, k = 1;

  RuleId id() const {
    auto t = parse_rule_tag(tag);
    if (!t) throw CLI::ValidationError("rule", "unknown rule '" + tag + "'");
    return RuleId{*t, i, j, eps, delta, k};
  }
};

void add_rule_flags(CLI::App* cmd, RuleArgs& r) {
  cmd->add_option("--i", r.i, "first index");
  cmd->add_option("--j", r.j, "second index");
  cmd->add_option("--eps", r.eps, "sign epsilon")->check(CLI::IsMember({-1, 1}));
  cmd->add_option("--delta", r.delta, "sign delta")->check(CLI::IsMember({-1, 1}));
  cmd->add_option("--k", r.k, "power for D23/D24");
}

std::set<MoveKind> parse_kinds(const std::vector<std::string>& names) {
  if (names.empty()) return all_move_kinds();
  std::set<MoveKind> out;
  for (const auto& n : names) {
    auto k = parse_move_kind(n);
    if (!k) throw CLI::ValidationError("--kinds", "unknown move kind '" + n + "'");
    out.insert(*k);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Charts and motion pictures of BMW tangle surfaces"};
  app.require_subcommand(1);
  int degree = 3;
  std::string out_path;
  app.add_option("--degree", degree, "tangle degree n")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "write the result to a file instead of stdout");

  std::string word_text, file_a, file_b, witness_path, target = "chart", direction = "forward";
  std::vector<std::string> kinds;
  std::vector<std::string> categories;
  std::size_t depth = 6, budget = 100000, window = 8, pos = 0;
  unsigned threads = 1;
  bool b2prime = false, no_insertions = false, normalize = false;
  long apply_index = -1;
  RuleArgs rule;

  auto* parse = app.add_subcommand("parse", "parse a word and print its Brauer image");
  parse->add_option("word", word_text, "word such as \"g1 G2 e1\" or 1")->required();

  auto* validate = app.add_subcommand("validate", "validate a movie or chart file");
  validate->add_option("file", file_a)->required()->check(CLI::ExistingFile);

  auto* rewrite = app.add_subcommand("rewrite", "apply a rule, or list applicable base rules");
  rewrite->add_option("word", word_text)->required();
  rewrite->add_option("rule", rule.tag, "rule tag (R1..R14, D15..D24); omit to list applications");
  rewrite->add_option("--pos", pos, "letter offset");
  rewrite->add_option("--dir", direction, "forward or backward")->check(CLI::IsMember({"forward", "backward"}));
  rewrite->add_option("--category", categories, "band, disk, isotopy-regular, isotopy-RI (listing only)");
  rewrite->add_flag("--no-insertions", no_insertions, "omit moves with an empty source side");
  add_rule_flags(rewrite, rule);

  auto* expand = app.add_subcommand("expand", "print and verify the base-rule script of a derived rule");
  expand->add_option("rule", rule.tag)->required();
  add_rule_flags(expand, rule);

  auto* to_chart = app.add_subcommand("chart-from-movie", "convert a movie to a chart graph");
  to_chart->add_option("movie", file_a)->required()->check(CLI::ExistingFile);
  to_chart->add_flag("--normalize", normalize, "replace e-edge extrema first");

  auto* to_movie = app.add_subcommand("movie-from-chart", "sweep a chart graph into a movie");
  to_movie->add_option("chart", file_a)->required()->check(CLI::ExistingFile);
  to_movie->add_flag("--normalize", normalize, "replace e-edge extrema in the result");

  auto* invariants = app.add_subcommand("invariants", "Euler characteristic and boundary data of a movie");
  invariants->add_option("movie", file_a)->required()->check(CLI::ExistingFile);

  auto* moves = app.add_subcommand("moves", "list, apply or replay chart moves");
  moves->add_option("movie", file_a)->required()->check(CLI::ExistingFile);
  moves->add_option("--kinds", kinds, "restrict to these move kinds");
  moves->add_option("--window", window, "longest mirrored span");
  moves->add_flag("--b2prime", b2prime, "composite-vertex variant of the mirrored-span condition");
  moves->add_flag("--no-insertions", no_insertions, "omit loop and white-pair insertions");
  moves->add_option("--apply", apply_index, "apply the move with this list index");
  moves->add_option("--replay", witness_path, "replay a witness log")->check(CLI::ExistingFile);

  auto* search = app.add_subcommand("search", "bounded search for a chart-move sequence from A to B");
  search->add_option("a", file_a)->required()->check(CLI::ExistingFile);
  search->add_option("b", file_b)->required()->check(CLI::ExistingFile);
  search->add_option("--depth", depth, "maximum number of moves");
  search->add_option("--budget", budget, "maximum number of distinct movies");
  search->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("--kinds", kinds, "restrict to these move kinds");
  search->add_option("--window", window, "longest mirrored span");
  search->add_flag("--b2prime", b2prime, "composite-vertex variant of the mirrored-span condition");
  search->add_flag("--no-insertions", no_insertions, "omit loop and white-pair insertions");

  auto* render = app.add_subcommand("render", "render a chart or movie as SVG");
  render->add_option("file", file_a)->required()->check(CLI::ExistingFile);
  render->add_option("--target", target, "chart or strip")->check(CLI::IsMember({"chart", "strip"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kUsage, e.what());
  }

  try {
    MoveOptions mo;
    mo.window = window;
    mo.b2prime = b2prime;
    mo.insertions = !no_insertions;

    if (*parse) {
      const Word w = parse_word(word_text, degree);
      std::cout << word_to_text(w) << '\n' << to_string(brauer_image(w)) << '\n';
      return kOk;
    }
    if (*validate) {
      const auto j = nlohmann::json::parse(read_text_file(file_a));
      if (looks_like_chart(j)) {
        const auto report = validate_chart_graph(chart_from_json(j));
        std::cout << to_string(report);
        return report.valid ? kOk : kInvalid;
      }
      const auto report = validate_movie(movie_from_json(j));
      std::cout << to_string(report);
      return report.valid ? kOk : kInvalid;
    }
    if (*rewrite) {
      const Word w = parse_word(word_text, degree);
      if (rule.tag.empty()) {
        std::set<RuleCategory> cats;
        for (const auto& c : categories.empty()
                                 ? std::vector<std::string>{"band", "disk", "isotopy-regular", "isotopy-RI"}
                                 : categories) {
          bool found = false;
          for (auto rc : {RuleCategory::Band, RuleCategory::Disk, RuleCategory::IsotopyRegular,
                          RuleCategory::IsotopyRI})
            if (to_string(rc) == c) cats.insert(rc), found = true;
          if (!found) return fail(kUsage, "unknown category '" + c + "'");
        }
        for (const auto& a : enumerate_rule_applications(w, cats, {!no_insertions})) {
          const Word r = apply_rule(w, a.rule, a.position, a.direction);
          std::cout << to_string(a.rule) << " @" << a.position
                    << (a.direction == Direction::Forward ? " forward" : " backward") << " -> " << word_to_text(r)
                    << '\n';
        }
        return kOk;
      }
      const RuleId r = rule.id();
      const Direction dir = direction == "forward" ? Direction::Forward : Direction::Backward;
      Word result = w;
      if (is_derived(r.tag)) {
        auto sides = rule_sides(r, degree);
        const auto& src = dir == Direction::Forward ? sides.left : sides.right;
        if (!w.has_factor(pos, src))
          return fail(kInvalid, to_string(r) + ": pattern '" + letters_to_text(src) + "' not found at " +
                                    std::to_string(pos));
        MoveScript s = expand_derived_rule(r, degree);
        if (dir == Direction::Backward) {
          MoveScript rev;
          for (auto it = s.steps.rbegin(); it != s.steps.rend(); ++it) {
            auto st = *it;
            st.direction = st.direction == Direction::Forward ? Direction::Backward : Direction::Forward;
            rev.steps.push_back(st);
          }
          s = rev;
        }
        result = verify_move_script(w, shifted(s, pos));
      } else {
        result = apply_rule(w, r, pos, dir);
      }
      emit(out_path, word_to_text(result) + "\n");
      return kOk;
    }
    if (*expand) {
      const RuleId r = rule.id();
      const auto sides = rule_sides(r, degree);
      const MoveScript s = expand_derived_rule(r, degree);
      const auto words = replay_move_script(Word(degree, sides.left), s);
      std::ostringstream out;
      out << to_string(r) << ": " << letters_to_text(sides.left) << " -> " << letters_to_text(sides.right) << '\n';
      out << "  " << word_to_text(words[0]) << '\n';
      for (std::size_t k = 0; k < s.steps.size(); ++k)
        out << "  " << to_string(s.steps[k].rule) << " @" << s.steps[k].position
            << (s.steps[k].direction == Direction::Forward ? " forward" : " backward") << " -> "
            << word_to_text(words[k + 1]) << '\n';
      const bool ok = words.back() == Word(degree, sides.right);
      out << (ok ? "verified" : "MISMATCH") << '\n';
      emit(out_path, out.str());
      return ok ? kOk : kInvalid;
    }
    if (*to_chart) {
      ChartMovie m = load_movie(read_text_file(file_a));
      if (normalize) m = normalize_caps(m);
      GraphOptions o;
      o.allow_e_caps = true;
      emit(out_path, save_chart(movie_to_chart_graph(m, o)));
      return kOk;
    }
    if (*to_movie) {
      ChartMovie m = chart_graph_to_movie(load_chart(read_text_file(file_a)));
      if (normalize) m = normalize_caps(m);
      emit(out_path, save_movie(m));
      return kOk;
    }
    if (*invariants) {
      ChartMovie m = load_movie(read_text_file(file_a));
      if (has_e_caps(m)) {
        std::cerr << "note: replacing e-edge extrema before computing invariants\n";
        m = normalize_caps(m);
      }
      const auto s = surface_invariants(m);
      emit(out_path, to_string(s) + " regularity=" + to_string(classify(m)) + "\n");
      return kOk;
    }
    if (*moves) {
      ChartMovie m = load_movie(read_text_file(file_a));
      mo.kinds = parse_kinds(kinds);
      if (!witness_path.empty()) {
        emit(out_path, save_movie(replay_witness(m, witness_from_text(read_text_file(witness_path)), mo)));
        return kOk;
      }
      const auto list = applicable_moves(m, mo);
      if (apply_index >= 0) {
        if (static_cast<std::size_t>(apply_index) >= list.size())
          return fail(kUsage, "--apply index out of range (" + std::to_string(list.size()) + " moves)");
        emit(out_path, save_movie(apply_chart_move(m, list[static_cast<std::size_t>(apply_index)], mo)));
        return kOk;
      }
      emit(out_path, witness_to_text(list));
      return kOk;
    }
    if (*search) {
      const ChartMovie a = load_movie(read_text_file(file_a));
      const ChartMovie b = load_movie(read_text_file(file_b));
      SearchOptions so;
      so.depth = depth;
      so.budget = budget;
      so.threads = threads;
      so.moves = mo;
      so.moves.kinds = parse_kinds(kinds);
      const auto r = equivalent_bounded(a, b, so);
      std::cerr << to_string(r.status) << " after " << r.explored << " movies\n";
      if (r.status == SearchStatus::Found) emit(out_path, witness_to_text(r.witness));
      if (r.status == SearchStatus::BudgetExhausted) return kBudget;
      return kOk;
    }
    if (*render) {
      const auto j = nlohmann::json::parse(read_text_file(file_a));
      RenderSpec spec;
      if (looks_like_chart(j)) {
        if (target != "chart") return fail(kUsage, "a chart file can only be rendered as a chart");
        emit(out_path, render_chart_svg(chart_from_json(j), spec));
      } else {
        spec.target = target == "chart" ? RenderTarget::Chart : RenderTarget::MovieStrip;
        if (spec.target == RenderTarget::MovieStrip) spec.width = 160, spec.height = 240;
        emit(out_path, render_svg(movie_from_json(j), spec));
      }
      return kOk;
    }
  } catch (const CLI::ValidationError& e) {
    return fail(kUsage, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(kInvalid, e.what());
  } catch (const std::runtime_error& e) {
    return fail(kInvalid, e.what());
  }
  return kUsage;
}
