// ulam: exact solving, synthesis, verification and bound tables for
// two-batch liar games.
//
// Exit codes: 0 computed (either winner), 1 refusal / failed selftest,
// 2 cap exceeded, 3 invalid input.

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ulam/adversary.hpp"
#include "ulam/bounds.hpp"
#include "ulam/channel.hpp"
#include "ulam/game.hpp"
#include "ulam/json_io.hpp"
#include "ulam/selftest.hpp"
#include "ulam/synth.hpp"

using nlohmann::json;
using namespace ulam;

namespace {

json interval_json(const Interval& v) {
  return json{{"lo", v.lo.get_str()},
              {"hi", v.hi.get_str()},
              {"approx", v.mid()}};
}

json report_json(const BoundReport& r) {
  json j{{"name", r.name}, {"relation", r.relation}, {"satisfied", to_string(r.satisfied)}};
  if (r.lhs) j["lhs"] = interval_json(*r.lhs);
  if (r.rhs) j["rhs"] = interval_json(*r.rhs);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::uint64_t word_cap() {
  if (const char* env = std::getenv("ULAM_MAX_WORDS")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 1ULL << 22;
}

Variant parse_variant(const std::string& s) {
  if (s == "original") return Variant::original;
  if (s == "pathological") return Variant::pathological;
  throw CLI::ValidationError("--variant must be original or pathological");
}

int cmd_solve(const std::string& channel_path, long long n, int q, int q1, int q2,
              const std::string& variant_name, const std::string& mode,
              bool as_json, std::uint64_t tree_budget,
              const std::string& tree_out) {
  Channel c = load_channel(channel_path);
  Variant variant = parse_variant(variant_name);
  json out{{"n", n}, {"variant", variant_name}, {"mode", mode}};
  bool paul = false;
  if (mode == "adaptive") {
    SolveOptions opts;
    opts.tree_node_budget = tree_budget;
    SolveResult r = solve_adaptive(c, n, q, variant, opts);
    paul = r.paul_wins;
    out["q"] = q;
    out["nodes"] = r.nodes;
    if (r.tree && !tree_out.empty()) save_text(tree_out, tree_to_json(*r.tree));
    out["tree_emitted"] = bool(r.tree);
  } else if (mode == "two_batch") {
    TwoBatchOptions opts;
    opts.max_words = word_cap();
    TwoBatchResult r = solve_two_batch(c, n, q1, q2, variant, opts);
    paul = r.paul_wins;
    out["q1"] = q1;
    out["q2"] = q2;
    out["assignments_tried"] = r.assignments_tried;
  } else {
    throw CLI::ValidationError("--mode must be adaptive or two_batch");
  }
  out["winner"] = paul ? "Paul" : "Carole";
  if (variant == Variant::pathological && !paul &&
      !is_nondegenerate(c, Variant::pathological)) {
    // degenerate channel: constant answering kills everything
    for (int b = 0; b < c.t(); ++b) {
      bool has = false;
      for (const LieString& u : c.strings()) {
        bool all = !u.empty();
        for (const Lie& l : u) all = all && l.reply == b;
        has = has || all || u.empty();
      }
      if (!has) {
        out["carole_witness"] = "always answer " + std::to_string(b);
        break;
      }
    }
  }
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << out["winner"].get<std::string>() << "\n";
  return 0;
}

int cmd_maxn(const std::string& channel_path, int q, const std::string& variant_name,
             long long nmax, bool as_json) {
  Channel c = load_channel(channel_path);
  Variant variant = parse_variant(variant_name);
  MaxnResult r = optimal_n_adaptive(c, q, variant, nmax);
  json out{{"q", q}, {"variant", variant_name}, {"n_cap", nmax}};
  out["direction"] = variant == Variant::original ? "max" : "min";
  if (r.value) {
    out["optimal_n"] = *r.value;
    out["capped"] = r.capped;
  } else {
    out["optimal_n"] = nullptr;
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else if (r.value) {
    std::cout << *r.value << (r.capped ? " (cap reached)" : "") << "\n";
  } else {
    std::cout << "none\n";
  }
  return 0;
}

int cmd_synth(const std::string& channel_path, long long n, int q1, int q2,
              const std::string& variant_name, long long alpha, long long alpha_prime,
              int m1, int m2, const std::string& out_path, bool as_json) {
  Channel c = load_channel(channel_path);
  Variant variant = parse_variant(variant_name);
  SynthParams params = SynthParams::defaults(c, q1, q2, alpha, alpha_prime);
  if (m1 > 0) params.m1 = m1;
  if (m2 > 0) params.m2 = m2;
  SynthResult r = variant == Variant::original ? synth_original(n, params, c)
                                               : synth_pathological(n, params, c);
  json out{{"n", n}, {"q1", q1}, {"q2", q2}, {"variant", variant_name},
           {"alpha", alpha}, {"alpha_prime", alpha_prime}};
  json lines = json::array();
  for (const BoundReport& line : r.report.lines) lines.push_back(report_json(line));
  out["conditions"] = lines;
  out["ok"] = r.ok();
  if (!r.ok()) {
    out["reason"] = r.reason;
    std::cout << out.dump(2) << "\n";
    return 1;
  }
  out["verified"] = true;
  if (!out_path.empty()) {
    save_text(out_path, strategy_to_json(*r.strategy));
    out["strategy_file"] = out_path;
  }
  std::cout << (as_json ? out.dump(2) : out.dump(2)) << "\n";
  return 0;
}

int cmd_verify(const std::string& strategy_path, bool as_json) {
  TwoBatchStrategy s = load_strategy(strategy_path);
  std::optional<BreakWitness> witness = s.variant == Variant::original
                                            ? carole_break_original(s)
                                            : carole_break_pathological(s);
  json out{{"n", s.n()}, {"q1", s.q1}, {"q2", s.q2}};
  out["variant"] = s.variant == Variant::original ? "original" : "pathological";
  out["valid"] = !witness.has_value();
  if (witness) {
    out["break"] = {{"response", witness->response.str()},
                    {"survivors", witness->survivors}};
  }
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << (witness ? "fail" : "pass") << "\n";
  return 0;
}

int cmd_adversary(const std::string& strategy_path, const std::string& channel_path,
                  int q1, int q2, bool as_json) {
  json out;
  if (!strategy_path.empty()) {
    TwoBatchStrategy s = load_strategy(strategy_path);
    auto report_break = [&](const char* name,
                            const std::optional<BreakWitness>& w) {
      if (w) {
        out[name] = {{"response", w->response.str()}, {"survivors", w->survivors}};
      } else {
        out[name] = nullptr;
      }
    };
    report_break("break_original", carole_break_original(s));
    report_break("break_pathological", carole_break_pathological(s));
  }
  if (!channel_path.empty()) {
    Channel c = load_channel(channel_path);
    CaroleParams params = CaroleParams::defaults(c, q1, q2);
    BoundConstants constants =
        BoundConstants::defaults(c.t(), c.order(), stats(c).e.at(c.order()));
    json thresholds = json::array();
    for (const BoundReport& r :
         carole_threshold_report(q1, q2, c, params, constants))
      thresholds.push_back(report_json(r));
    out["thresholds"] = thresholds;
  }
  std::cout << (as_json ? out.dump(2) : out.dump(2)) << "\n";
  return 0;
}

int cmd_bounds(int q, int q1, int q2, int k, int t, long long ek,
               const std::string& format) {
  if (q1 + q2 != q) {
    q2 = int(std::max(1.0, std::floor(std::sqrt(double(q)))));
    q1 = q - q2;
  }
  Rat sphere = sphere_bound(q, k, t, ek);
  std::vector<std::pair<std::string, Interval>> rows;
  rows.emplace_back("sphere_bound", Interval(sphere));
  {
    // thresholds need a channel only for k and E_k; fabricate one
    std::vector<LieString> fab;
    // enumerate length-k strings in lex order until E_k of them exist
    std::function<void(LieString&)> gen = [&](LieString& cur) {
      if (static_cast<long long>(fab.size()) >= ek) return;
      if (int(cur.size()) == k) {
        fab.push_back(cur);
        return;
      }
      for (int a = 0; a < t && static_cast<long long>(fab.size()) < ek; ++a)
        for (int b = 0; b < t; ++b) {
          if (a == b) continue;
          cur.push_back(Lie{std::uint8_t(a), std::uint8_t(b)});
          gen(cur);
          cur.pop_back();
          if (static_cast<long long>(fab.size()) >= ek) return;
        }
    };
    LieString cur;
    gen(cur);
    if (static_cast<long long>(fab.size()) < ek)
      throw CLI::ValidationError("--Ek larger than the number of length-k strings");
    Channel c(t, std::move(fab));
    BoundConstants constants = BoundConstants::defaults(t, k, ek);
    for (const BoundReport& r : theorem1_thresholds(q, q1, q2, c, constants))
      if (r.lhs) rows.emplace_back(r.name, *r.lhs);
    for (const BoundReport& r : theorem2_thresholds(q, q1, q2, c, constants))
      if (r.lhs) rows.emplace_back(r.name, *r.lhs);
  }
  if (format == "csv") {
    std::cout << "q,q1,q2,name,value,approx\n";
    for (const auto& [name, value] : rows)
      std::cout << q << "," << q1 << "," << q2 << "," << name << ","
                << value.lo.get_str() << "," << value.mid() << "\n";
  } else {
    json out = json::array();
    for (const auto& [name, value] : rows)
      out.push_back({{"q", q}, {"q1", q1}, {"q2", q2}, {"name", name},
                     {"value", interval_json(value)}});
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_selftest(std::uint64_t seed, long long cases, bool as_json) {
  SelftestResult lemma4 = run_lemma4_suite(seed, cases);
  SelftestResult suffix = run_suffix_suite(seed + 1, cases);
  json out{{"seed", seed},
           {"lemma4", {{"cases", lemma4.cases}, {"failures", lemma4.failures}}},
           {"suffix", {{"cases", suffix.cases}, {"failures", suffix.failures}}}};
  bool ok = lemma4.ok() && suffix.ok();
  out["ok"] = ok;
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << (ok ? "pass" : "fail") << " (" << lemma4.cases + suffix.cases
              << " cases)\n";
  if (!ok) std::cerr << lemma4.log << suffix.log;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact two-batch liar game toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string channel_path, strategy_path, out_path, tree_out;
  std::string variant_name = "original", mode = "adaptive", format = "csv";
  long long n = 0, nmax = 64, alpha = 1, alpha_prime = 0, ek = 1, cases = 1000;
  int q = 0, q1 = 0, q2 = 0, k = 1, t = 2, m1 = 0, m2 = 0;
  std::uint64_t tree_budget = 0, seed = 1;

  CLI::App* solve = app.add_subcommand("solve", "solve a game exactly");
  solve->add_option("--channel", channel_path)->required();
  solve->add_option("--n", n)->required();
  solve->add_option("--q", q);
  solve->add_option("--q1", q1);
  solve->add_option("--q2", q2);
  solve->add_option("--variant", variant_name);
  solve->add_option("--mode", mode);
  solve->add_option("--tree-budget", tree_budget);
  solve->add_option("--tree-out", tree_out);

  CLI::App* maxn = app.add_subcommand("maxn", "optimal n by bisection");
  maxn->add_option("--channel", channel_path)->required();
  maxn->add_option("--q", q)->required();
  maxn->add_option("--variant", variant_name);
  maxn->add_option("--nmax", nmax);

  CLI::App* synth = app.add_subcommand("synth", "construct a two-batch strategy");
  synth->add_option("--channel", channel_path)->required();
  synth->add_option("--n", n)->required();
  synth->add_option("--q1", q1)->required();
  synth->add_option("--q2", q2)->required();
  synth->add_option("--variant", variant_name);
  synth->add_option("--alpha", alpha);
  synth->add_option("--alpha-prime", alpha_prime);
  synth->add_option("--m1", m1);
  synth->add_option("--m2", m2);
  synth->add_option("--out", out_path);

  CLI::App* verify = app.add_subcommand("verify", "replay a strategy file");
  verify->add_option("--strategy", strategy_path)->required();

  CLI::App* adversary = app.add_subcommand("adversary", "break search / thresholds");
  adversary->add_option("--strategy", strategy_path);
  adversary->add_option("--channel", channel_path);
  adversary->add_option("--q1", q1);
  adversary->add_option("--q2", q2);

  CLI::App* bounds = app.add_subcommand("bounds", "bound tables");
  bounds->add_option("--q", q)->required();
  bounds->add_option("--q1", q1);
  bounds->add_option("--q2", q2);
  bounds->add_option("--k", k);
  bounds->add_option("--t", t);
  bounds->add_option("--Ek", ek);
  bounds->add_option("--format", format);

  CLI::App* selftest = app.add_subcommand("selftest", "randomized property checks");
  selftest->add_option("--seed", seed);
  selftest->add_option("--cases", cases);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return cmd_solve(channel_path, n, q, q1, q2, variant_name, mode, as_json,
                       tree_budget, tree_out);
    if (maxn->parsed()) return cmd_maxn(channel_path, q, variant_name, nmax, as_json);
    if (synth->parsed())
      return cmd_synth(channel_path, n, q1, q2, variant_name, alpha, alpha_prime,
                       m1, m2, out_path, as_json);
    if (verify->parsed()) return cmd_verify(strategy_path, as_json);
    if (adversary->parsed())
      return cmd_adversary(strategy_path, channel_path, q1, q2, as_json);
    if (bounds->parsed())
      return cmd_bounds(q, q1, q2, k, t, ek, as_json ? "json" : format);
    if (selftest->parsed()) return cmd_selftest(seed, cases, as_json);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
