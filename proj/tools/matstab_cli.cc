// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// matstab: solve, check, enumerate, generate and benchmark instances.
//
// Exit codes: 0 a stable set exists / the set is stable, 1 none exists / the
// set is not stable, 2 bad input or usage.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matstab/generators.h"
#include "matstab/instance_io.h"
#include "matstab/solver.h"
#include "matstab/stability.h"

namespace {

using matstab::Instance;
using nlohmann::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string verdict_line(const Instance& inst, const matstab::Outcome& out) {
  const auto& g = inst.ground;
  switch (out.halt) {
    case matstab::Halt::kStable:
      return "stable set " + g.format(out.stable_set);
    case matstab::Halt::kRankDeficit: {
      const auto& inner = out.trace.outer.back().inner.back();
      return "no stable set (rank deficit: rk_D(E\\P) = " +
             std::to_string(inner.rank_d) +
             " < rk_H(K) = " + std::to_string(inner.rank_h) + ")";
    }
    case matstab::Halt::kInsertableRemoved:
      return "no stable set (removed element " + g.id(*out.insertable) +
             " can be added to I in M_H)";
  }
  return "";
}

void print_violations(const std::vector<matstab::Violation>& violations) {
  std::cerr << "invalid instance:\n";
  for (const auto& v : violations) std::cerr << "  " << v.message() << '\n';
}

int cmd_solve(const std::string& path, bool trace, bool as_json) {
  Instance inst = matstab::load_instance(path);
  if (auto violations = matstab::validate(inst); !violations.empty()) {
    print_violations(violations);
    return kError;
  }
  matstab::Outcome out = matstab::solve(inst);
  if (as_json) {
    json doc = matstab::trace_to_json(inst, out);
    if (!trace) doc.erase("outer");
    std::cout << doc.dump(2) << '\n';
  } else if (trace) {
    std::cout << matstab::explain(inst, out);
  } else {
    std::cout << verdict_line(inst, out) << '\n';
  }
  return out.exists() ? kYes : kNo;
}

int cmd_check(const std::string& path, const std::string& set_text,
              bool as_json) {
  Instance inst = matstab::load_instance(path);
  if (auto violations = matstab::validate(inst); !violations.empty()) {
    print_violations(violations);
    return kError;
  }
  const matstab::ElementSet set = inst.ground.set_of(split_ids(set_text));
  matstab::StabilityCheck check = matstab::is_stable(inst, set);
  json doc = {{"set", matstab::set_to_json(inst.ground, set)},
              {"stable", check.stable}};
  std::vector<matstab::BlockReport> reports;
  if (check.reason) {
    doc["reason"] = *check.reason;
  } else {
    reports = matstab::blocking_reports(inst, set);
    json list = json::array();
    for (const auto& r : reports) {
      list.push_back(matstab::report_to_json(inst.ground, r));
    }
    doc["blocking"] = list;
  }
  if (as_json) {
    std::cout << doc.dump(2) << '\n';
  } else if (check.stable) {
    std::cout << "stable: " << inst.ground.format(set) << '\n';
  } else if (check.reason) {
    std::cout << "not stable: " << *check.reason << '\n';
  } else {
    std::cout << "not stable: " << inst.ground.format(set) << '\n';
    for (const auto& r : reports) {
      std::cout << "  " << inst.ground.id(r.element) << " blocks ["
                << (inst.e1.contains(r.element) ? "E1" : "E2") << "]";
      for (matstab::Side side : matstab::kSides) {
        const int s = static_cast<int>(side);
        std::cout << ' ' << matstab::side_name(side)
                  << ": weak=" << (r.weak[s] ? "yes" : "no")
                  << " strong=" << (r.strong[s] ? "yes" : "no");
        if (r.witness_f[s]) {
          std::cout << " f=" << inst.ground.id(*r.witness_f[s]);
        }
      }
      std::cout << '\n';
    }
  }
  return check.stable ? kYes : kNo;
}

std::size_t oracle_bound(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MATSTAB_ORACLE_MAX")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw matstab::DomainError(
          std::string("MATSTAB_ORACLE_MAX is not a number: ") + env);
    }
  }
  return matstab::kDefaultOracleBound;
}

int cmd_oracle(const std::string& path, std::optional<std::size_t> max_size,
               bool as_json) {
  Instance inst = matstab::load_instance(path);
  if (auto violations = matstab::validate(inst); !violations.empty()) {
    print_violations(violations);
    return kError;
  }
  auto sets = matstab::brute_force_stable_sets(inst, oracle_bound(max_size));
  if (as_json) {
    json list = json::array();
    for (const auto& s : sets)
      list.push_back(matstab::set_to_json(inst.ground, s));
    std::cout << list.dump() << '\n';
  } else {
    for (const auto& s : sets) std::cout << inst.ground.format(s) << '\n';
    std::cout << sets.size() << " stable set(s)\n";
  }
  return sets.empty() ? kNo : kYes;
}

matstab::E1Mode parse_e1(const std::string& mode) {
  if (mode == "all") return matstab::E1Mode::kAll;
  if (mode == "none") return matstab::E1Mode::kNone;
  if (mode == "random") return matstab::E1Mode::kRandom;
  throw matstab::DomainError("--e1 must be all, none or random");
}

struct GenOptions {
  std::string kind;
  std::uint64_t seed = 0;
  int men = 2;
  int women = 2;
  int levels = 1;
  double density = 1.0;
  int size = 8;
  std::string e1 = "all";
};

Instance generate(const GenOptions& o) {
  if (o.kind == "marriage-ties") {
    matstab::MarriageParams p;
    p.men = o.men;
    p.women = o.women;
    p.tier_levels = o.levels;
    p.density = o.density;
    p.e1 = parse_e1(o.e1);
    return matstab::generate_marriage(p, o.seed);
  }
  matstab::RandomParams p;
  p.size = o.size;
  p.tier_levels = o.levels;
  p.e1 = parse_e1(o.e1);
  if (o.kind == "random-partition") {
    return matstab::generate_random_partition(p, o.seed);
  }
  if (o.kind == "random-explicit") {
    return matstab::generate_random_explicit(p, o.seed);
  }
  throw matstab::DomainError("unknown generator kind: " + o.kind);
}

int cmd_gen(const GenOptions& options) {
  std::cout << matstab::render_instance(generate(options)).dump(2) << '\n';
  return 0;
}

struct BenchOptions {
  std::vector<int> sizes{8, 16, 32};
  std::uint64_t seeds = 3;
  std::string kind = "random-partition";
  int levels = 3;
  std::string e1 = "random";
};

// Calls allowed for a ground set of size n: ten times n^6.
double call_budget(int n) {
  double p = 1;
  for (int i = 0; i < 6; ++i) p *= n;
  return 10.0 * p;
}

int cmd_bench(const BenchOptions& o) {
  std::cout << "size,seed,verdict,outer_rounds,inner_rounds,oracle_calls,"
               "call_budget,wall_ms\n";
  bool within_budget = true;
  for (int n : o.sizes) {
    for (std::uint64_t seed = 0; seed < o.seeds; ++seed) {
      GenOptions g;
      g.kind = o.kind;
      g.seed = seed;
      g.size = n;
      g.levels = o.levels;
      g.e1 = o.e1;
      Instance inst = generate(g);
      auto counter = std::make_shared<matstab::OracleCounter>();
      Instance counted = inst.instrumented(counter);
      const auto start = std::chrono::steady_clock::now();
      matstab::Outcome out = matstab::solve(counted, {.audit = false});
      const auto stop = std::chrono::steady_clock::now();
      std::size_t inner = 0;
      for (const auto& r : out.trace.outer) inner += r.inner.size();
      const double budget = call_budget(static_cast<int>(inst.size()));
      if (static_cast<double>(counter->calls()) > budget) within_budget = false;
      const double ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
      std::cout << inst.size() << ',' << seed << ','
                << (out.exists() ? "yes" : "no") << ','
                << out.trace.outer.size() << ',' << inner << ','
                << counter->calls() << ',' << static_cast<std::uint64_t>(budget)
                << ',' << ms << '\n';
    }
  }
  if (!within_budget) {
    std::cerr << "oracle calls exceeded 10 * n^6 on some run\n";
    return kNo;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable common independent sets of two matroids with ties"};
  app.require_subcommand(1);

  std::string path;
  bool trace = false;
  bool as_json = false;
  auto* solve = app.add_subcommand(
      "solve", "Decide existence and construct a stable set");
  solve->add_option("instance", path, "Instance JSON file")->required();
  solve->add_flag("--trace", trace, "Print every round of the solver");
  solve->add_flag("--json", as_json, "Emit JSON");

  std::string set_text;
  auto* check =
      app.add_subcommand("check", "Check whether a given set is stable");
  check->add_option("instance", path, "Instance JSON file")->required();
  check->add_option("--set", set_text, "Comma-separated element ids")
      ->required();
  check->add_flag("--json", as_json, "Emit JSON");

  std::optional<std::size_t> max_size;
  auto* oracle =
      app.add_subcommand("oracle", "List every stable set by enumeration");
  oracle->add_option("instance", path, "Instance JSON file")->required();
  oracle->add_option(
      "--max-size", max_size,
      "Largest ground set to enumerate (env MATSTAB_ORACLE_MAX)");
  oracle->add_flag("--json", as_json, "Emit JSON");

  GenOptions gen_options;
  auto* gen = app.add_subcommand("gen", "Generate an instance on stdout");
  gen->add_option("kind", gen_options.kind,
                  "marriage-ties | random-partition | random-explicit")
      ->required()
      ->check(CLI::IsMember(
          {"marriage-ties", "random-partition", "random-explicit"}));
  gen->add_option("--seed", gen_options.seed, "Random seed");
  gen->add_option("--men", gen_options.men, "Men (marriage-ties)");
  gen->add_option("--women", gen_options.women, "Women (marriage-ties)");
  gen->add_option("--levels", gen_options.levels, "Number of preference tiers");
  gen->add_option("--density", gen_options.density,
                  "Probability a pair is acceptable (marriage-ties)");
  gen->add_option("--size", gen_options.size, "Ground set size (random kinds)");
  gen->add_option("--e1", gen_options.e1, "E1 membership: all | none | random");

  BenchOptions bench_options;
  auto* bench = app.add_subcommand(
      "bench", "Count oracle calls over generated instances");
  bench->add_option("--sizes", bench_options.sizes, "Ground set sizes")
      ->delimiter(',');
  bench->add_option("--seeds", bench_options.seeds,
                    "Seeds per size (0, 1, ...)");
  bench
      ->add_option("--kind", bench_options.kind,
                   "random-partition | random-explicit")
      ->check(CLI::IsMember({"random-partition", "random-explicit"}));
  bench->add_option("--levels", bench_options.levels,
                    "Number of preference tiers");
  bench->add_option("--e1", bench_options.e1,
                    "E1 membership: all | none | random");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*solve) return cmd_solve(path, trace, as_json);
    if (*check) return cmd_check(path, set_text, as_json);
    if (*oracle) return cmd_oracle(path, max_size, as_json);
    if (*gen) return cmd_gen(gen_options);
    if (*bench) return cmd_bench(bench_options);
  } catch (const matstab::InvalidInstanceError& e) {
    print_violations(e.violations());
    return kError;
  } catch (const matstab::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const matstab::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return kError;
}
