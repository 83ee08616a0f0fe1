#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "mwbis/errors.hpp"
#include "mwbis/gen.hpp"
#include "mwbis/greedy.hpp"
#include "mwbis/instance.hpp"
#include "mwbis/interval.hpp"
#include "mwbis/io.hpp"
#include "mwbis/oracle.hpp"
#include "mwbis/planar.hpp"
#include "mwbis/reductions.hpp"
#include "mwbis/tree.hpp"

using namespace mwbis;

namespace {

constexpr const char* kCsvHeader =
    "solver,instance,n,B,weight,budget,micros,oracle,ratio_num,ratio_den";

struct Report {
  std::string solver;
  std::string instance;
  std::int64_t n = 0;
  Budget B = 0;
  Weight weight = 0;
  Budget budget = 0;
  std::int64_t micros = 0;
  std::optional<Weight> oracle;
  std::vector<std::string> notes;  // text mode only
};

std::pair<Weight, Weight> reduced_ratio(Weight weight, Weight oracle) {
  if (weight == 0 && oracle == 0) return {1, 1};
  const Weight g = std::gcd(weight, oracle);
  return {weight / g, oracle / g};
}

void print_report(const Report& r, const std::string& format,
                  bool with_header) {
  if (format == "csv") {
    if (with_header) std::cout << kCsvHeader << '\n';
    std::cout << r.solver << ',' << r.instance << ',' << r.n << ',' << r.B
              << ',' << r.weight << ',' << r.budget << ',' << r.micros << ',';
    if (r.oracle) {
      const auto [num, den] = reduced_ratio(r.weight, *r.oracle);
      std::cout << *r.oracle << ',' << num << ',' << den;
    } else {
      std::cout << ",,";
    }
    std::cout << '\n';
    return;
  }
  std::cout << "solver: " << r.solver << '\n'
            << "instance: " << r.instance << '\n'
            << "n: " << r.n << '\n'
            << "B: " << r.B << '\n'
            << "weight: " << r.weight << '\n'
            << "budget: " << r.budget << '\n'
            << "micros: " << r.micros << '\n';
  if (r.oracle) {
    const auto [num, den] = reduced_ratio(r.weight, *r.oracle);
    std::cout << "oracle: " << *r.oracle << '\n'
              << "ratio: " << num << '/' << den << '\n';
  }
  for (const auto& note : r.notes) std::cout << note << '\n';
}

template <typename F>
auto timed(std::int64_t& micros, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  auto result = f();
  const auto t1 = std::chrono::steady_clock::now();
  micros =
      std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
  return result;
}

[[noreturn]] void incompatible(const std::string& solver,
                               const std::string& kind) {
  throw SolverError(ErrorCode::IncompatibleSolver,
                    "solver '" + solver + "' cannot run on a " + kind +
                        " file");
}

std::optional<Weight> graph_oracle(const Instance& inst) {
  if (inst.n > kDefaultOracleCap) {
    std::cerr << "oracle skipped: n=" << inst.n << " exceeds cap "
              << kDefaultOracleCap << '\n';
    return std::nullopt;
  }
  return brute_force_mwbis(inst).total_weight;
}

std::string join_ids(const std::vector<VertexId>& ids) {
  std::string out;
  for (VertexId v : ids) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

struct RunFlags {
  bool oracle = false;
  bool keep_scanning = false;
  int check_claw = 0;  // 0 = off
  int k = 1;
};

Solution dispatch_graph(const std::string& solver, const Instance& inst,
                        std::optional<VertexId> root,
                        const LeveledPlanarInstance* lp,
                        const RunFlags& flags) {
  if (solver == "tree") return solve_tree(inst, root.value_or(0));
  if (solver == "forest") return solve_forest(inst);
  if (solver == "cycle") return solve_cycle(inst, inst.B);
  if (solver == "oracle") return brute_force_mwbis(inst);
  if (solver == "mbf") {
    const GreedyTrace trace =
        flags.keep_scanning ? mbf_keep_scanning(inst) : mbf(inst);
    return make_solution(inst, trace.picks);
  }
  if (solver == "mwbrf") return make_solution(inst, mwbrf(inst));
  if (solver == "band") {
    if (!lp) incompatible(solver, "graph");
    return solve_band(*lp, lp->instance.B).solution_at(lp->instance.B);
  }
  if (solver == "ptas") {
    if (!lp) incompatible(solver, "graph");
    return ptas(*lp, flags.k, lp->instance.B);
  }
  throw ValidationError(ErrorCode::BadParams, "unknown solver '" + solver +
                                                  "'");
}

void enforce_claw_check(const Instance& inst, int d) {
  if (!verify_claw_free(inst, d)) {
    throw ValidationError(ErrorCode::BadParams,
                          "a vertex has more than " + std::to_string(d) +
                              " pairwise non-adjacent neighbors");
  }
}

int cmd_run(const std::string& solver, const std::string& path,
            const RunFlags& flags, const std::string& format) {
  const FileKind kind = sniff_kind(path);
  Report r;
  r.solver = solver;
  r.instance = path;

  if (kind == FileKind::Intervals) {
    if (solver != "interval" && solver != "oracle") {
      incompatible(solver, "intervals");
    }
    const IntervalSet iset = parse_intervals_file(path);
    r.n = static_cast<std::int64_t>(iset.intervals.size());
    r.B = iset.B;
    const Instance graph = intersection_graph(iset);
    const Solution sol = timed(r.micros, [&] {
      return solver == "interval" ? solve_intervals(iset)
                                  : brute_force_mwbis(graph);
    });
    r.weight = sol.total_weight;
    r.budget = sol.total_budget;
    if (flags.oracle) r.oracle = graph_oracle(graph);
    if (solver == "interval") {
      r.notes.push_back("intervals: " + join_ids(sol.vertices));
    } else {
      r.notes.push_back("vertices: " + join_ids(sol.vertices));
    }
    print_report(r, format, true);
    return 0;
  }

  if (kind == FileKind::Knapsack) {
    if (solver != "knapsack") incompatible(solver, "knapsack");
    const KnapsackInstance kp = parse_knapsack_file(path);
    r.n = static_cast<std::int64_t>(kp.items.size());
    r.B = kp.capacity;
    const RootedTree star = knapsack_to_star(kp);
    const Solution sol = timed(r.micros, [&] { return solve_tree(star); });
    r.weight = sol.total_weight;
    r.budget = sol.total_budget;
    if (flags.oracle) r.oracle = solve_knapsack_dp(kp);
    std::vector<VertexId> items;
    for (VertexId v : sol.vertices) items.push_back(v - 1);
    r.notes.push_back("items: " + join_ids(items));
    print_report(r, format, true);
    return 0;
  }

  std::optional<LeveledPlanarInstance> lp;
  std::optional<VertexId> root;
  Instance inst;
  if (kind == FileKind::Leveled) {
    if (solver == "tree" || solver == "forest" || solver == "cycle" ||
        solver == "interval" || solver == "knapsack") {
      incompatible(solver, "leveled");
    }
    lp = parse_leveled_file(path);
    inst = lp->instance;
  } else {
    if (solver == "interval" || solver == "knapsack" || solver == "band" ||
        solver == "ptas") {
      incompatible(solver, "graph");
    }
    GraphFile gf = parse_graph_file(path);
    inst = std::move(gf.instance);
    root = gf.root;
  }
  if (flags.check_claw > 0) {
    if (solver != "mbf" && solver != "mwbrf") {
      throw ValidationError(ErrorCode::BadParams,
                            "--check-claw applies to mbf and mwbrf only");
    }
    enforce_claw_check(inst, flags.check_claw);
    r.notes.push_back("claw-free: verified for d=" +
                      std::to_string(flags.check_claw));
  }
  r.n = inst.n;
  r.B = inst.B;
  const Solution sol = timed(r.micros, [&] {
    return dispatch_graph(solver, inst, root, lp ? &*lp : nullptr, flags);
  });
  r.weight = sol.total_weight;
  r.budget = sol.total_budget;
  if (flags.oracle) r.oracle = graph_oracle(inst);
  r.notes.push_back("vertices: " + join_ids(sol.vertices));
  print_report(r, format, true);
  return 0;
}

int cmd_validate(const std::string& path) {
  switch (sniff_kind(path)) {
    case FileKind::Graph: {
      const GraphFile gf = parse_graph_file(path);
      std::cout << "graph: n=" << gf.instance.n
                << " m=" << edge_list(gf.instance).size()
                << " B=" << gf.instance.B;
      if (gf.root) std::cout << " root=" << *gf.root;
      std::cout << '\n';
      break;
    }
    case FileKind::Leveled: {
      const LeveledPlanarInstance lp = parse_leveled_file(path);
      std::size_t face = 0;
      for (const auto& level : lp.levels) face += level.size();
      std::cout << "leveled: n=" << lp.instance.n
                << " levels=" << lp.levels.size()
                << " cross=" << edge_list(lp.instance).size() - face
                << " B=" << lp.instance.B << '\n';
      break;
    }
    case FileKind::Intervals: {
      const IntervalSet iset = parse_intervals_file(path);
      std::cout << "intervals: n=" << iset.intervals.size()
                << " B=" << iset.B << '\n';
      break;
    }
    case FileKind::Knapsack: {
      const KnapsackInstance kp = parse_knapsack_file(path);
      std::cout << "knapsack: n=" << kp.items.size()
                << " capacity=" << kp.capacity << '\n';
      break;
    }
  }
  return 0;
}

struct GenArgs {
  std::string family;
  std::string out = "-";
  std::uint64_t seed = 1;
  std::int32_t n = 10;
  std::int32_t trees = 3;
  int permille = 300;
  int d = 2;
  std::int64_t M = 4;
  std::int64_t span = 100;
  std::vector<std::int32_t> level_sizes{4, 5, 6};
  int spokes = 700;
  Weight wmax = 20;
  Budget bmax = 5;
  Budget B = 15;
  std::int64_t capacity = 40;
  std::int64_t vmax = 20;
  std::int64_t smax = 10;
};

int cmd_generate(const GenArgs& a) {
  std::ofstream file;
  if (a.out != "-") {
    file.open(a.out);
    if (!file) {
      throw ValidationError(ErrorCode::BadParams, "cannot write " + a.out);
    }
  }
  std::ostream& out = a.out == "-" ? std::cout : file;
  Rng rng(a.seed);
  if (a.family == "tree") {
    write_graph(out, gen_tree(rng, a.n, a.wmax, a.bmax, a.B), 0);
  } else if (a.family == "forest") {
    write_graph(out, gen_forest(rng, a.n, a.trees, a.wmax, a.bmax, a.B));
  } else if (a.family == "cycle") {
    write_graph(out, gen_cycle(rng, a.n, a.wmax, a.bmax, a.B));
  } else if (a.family == "graph") {
    write_graph(out, gen_graph(rng, a.n, a.permille, a.wmax, a.bmax, a.B));
  } else if (a.family == "intervals") {
    write_intervals(out,
                    gen_intervals(rng, a.n, a.span, a.wmax, a.bmax, a.B));
  } else if (a.family == "claw-free") {
    write_graph(out, gen_claw_free(rng, a.n, a.d, a.permille, a.wmax, a.bmax,
                                   a.B));
  } else if (a.family == "mbf-tight") {
    write_graph(out, gen_mbf_tight(a.d));
  } else if (a.family == "mwbrf-bad") {
    write_graph(out, gen_mwbrf_bad(a.d, a.M));
  } else if (a.family == "simply-nested") {
    write_leveled(out, gen_simply_nested(rng, a.level_sizes, a.spokes, a.wmax,
                                         a.bmax, a.B));
  } else if (a.family == "knapsack") {
    write_knapsack(out, gen_knapsack(rng, a.n, a.capacity, a.vmax, a.smax));
  } else {
    throw ValidationError(ErrorCode::BadParams,
                          "unknown family '" + a.family + "'");
  }
  return 0;
}

int cmd_reduce(const std::string& mode, const std::string& in,
               const std::string& out_path) {
  if (mode != "knapsack-to-star") {
    throw ValidationError(ErrorCode::BadParams,
                          "unknown reduction '" + mode + "'");
  }
  const KnapsackInstance kp = parse_knapsack_file(in);
  const RootedTree star = knapsack_to_star(kp);
  std::ofstream file;
  if (out_path != "-") {
    file.open(out_path);
    if (!file) {
      throw ValidationError(ErrorCode::BadParams,
                            "cannot write " + out_path);
    }
  }
  std::ostream& out = out_path == "-" ? std::cout : file;
  write_graph(out, star.instance, star.root);
  return 0;
}

struct BenchArgs {
  std::string solver;
  std::vector<std::int64_t> sizes{50, 100, 200};
  Budget B = 100;
  Weight wmax = 20;
  Budget bmax = 5;
  std::uint64_t seed = 1;
  int reps = 3;
  int k = 1;
  std::string format = "text";
};

int cmd_bench(const BenchArgs& a) {
  bool header = true;
  for (std::size_t idx = 0; idx < a.sizes.size(); ++idx) {
    const auto n = static_cast<std::int32_t>(a.sizes[idx]);
    Rng rng(a.seed + idx);
    Report r;
    r.solver = a.solver;
    r.B = a.B;

    std::optional<Instance> inst;
    std::optional<IntervalSet> iset;
    std::optional<LeveledPlanarInstance> lp;
    std::optional<KnapsackInstance> kp;
    if (a.solver == "tree") {
      inst = gen_tree(rng, n, a.wmax, a.bmax, a.B);
    } else if (a.solver == "forest") {
      inst = gen_forest(rng, n, std::max(1, n / 8), a.wmax, a.bmax, a.B);
    } else if (a.solver == "cycle") {
      inst = gen_cycle(rng, n, a.wmax, a.bmax, a.B);
    } else if (a.solver == "mbf" || a.solver == "mwbrf" ||
               a.solver == "oracle") {
      inst = gen_graph(rng, n, 300, a.wmax, a.bmax, a.B);
    } else if (a.solver == "interval") {
      iset = gen_intervals(rng, n, 4 * static_cast<std::int64_t>(n), a.wmax,
                           a.bmax, a.B);
    } else if (a.solver == "knapsack") {
      kp = gen_knapsack(rng, n, a.B, a.wmax, a.bmax);
    } else if (a.solver == "band" || a.solver == "ptas") {
      const std::int32_t q = std::max(3, n / 3);
      lp = gen_simply_nested(rng, {q, q, q}, 800, a.wmax, a.bmax, a.B);
    } else {
      throw ValidationError(ErrorCode::BadParams,
                            "solver '" + a.solver + "' has no bench family");
    }

    r.instance = a.solver + "(n=" + std::to_string(n) +
                 ",seed=" + std::to_string(a.seed + idx) + ")";
    std::int64_t best_micros = 0;
    for (int rep = 0; rep < a.reps; ++rep) {
      std::int64_t micros = 0;
      Weight weight = 0;
      Budget budget = 0;
      if (inst) {
        RunFlags flags;
        flags.k = a.k;
        const Solution sol = timed(micros, [&] {
          return dispatch_graph(a.solver, *inst, 0, nullptr, flags);
        });
        weight = sol.total_weight;
        budget = sol.total_budget;
        r.n = inst->n;
      } else if (iset) {
        const Solution sol = timed(micros, [&] { return solve_intervals(*iset); });
        weight = sol.total_weight;
        budget = sol.total_budget;
        r.n = static_cast<std::int64_t>(iset->intervals.size());
      } else if (kp) {
        const RootedTree star = knapsack_to_star(*kp);
        const Solution sol = timed(micros, [&] { return solve_tree(star); });
        weight = sol.total_weight;
        budget = sol.total_budget;
        r.n = static_cast<std::int64_t>(kp->items.size());
      } else {
        RunFlags flags;
        flags.k = a.k;
        const Solution sol = timed(micros, [&] {
          return dispatch_graph(a.solver, lp->instance, 0, &*lp, flags);
        });
        weight = sol.total_weight;
        budget = sol.total_budget;
        r.n = lp->instance.n;
      }
      if (rep == 0 || micros < best_micros) best_micros = micros;
      r.weight = weight;
      r.budget = budget;
    }
    r.micros = best_micros;
    print_report(r, a.format, header);
    header = false;
    if (a.format == "text") std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum weight budgeted independent set toolkit"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "parse and check a file");
  std::string validate_path;
  validate->add_option("file", validate_path, "instance file")->required();

  auto* generate =
      app.add_subcommand("generate", "write a random or gadget instance");
  GenArgs gen_args;
  generate->add_option("family", gen_args.family,
                       "tree forest cycle graph intervals claw-free "
                       "mbf-tight mwbrf-bad simply-nested knapsack")
      ->required();
  generate->add_option("output", gen_args.out, "output path or - for stdout");
  generate->add_option("--seed", gen_args.seed, "rng seed");
  generate->add_option("-n", gen_args.n, "vertex / interval / item count");
  generate->add_option("--trees", gen_args.trees, "forest component count");
  generate->add_option("--p", gen_args.permille, "edge rate per mille");
  generate->add_option("--d", gen_args.d, "claw bound / gadget degree");
  generate->add_option("--M", gen_args.M, "gadget leaf budget");
  generate->add_option("--span", gen_args.span, "interval coordinate span");
  generate->add_option("--levels", gen_args.level_sizes,
                       "cycle sizes per level, outermost first");
  generate->add_option("--spokes", gen_args.spokes,
                       "spoke keep rate per mille");
  generate->add_option("--wmax", gen_args.wmax, "max weight in whole units");
  generate->add_option("--bmax", gen_args.bmax, "max vertex budget");
  generate->add_option("-B", gen_args.B, "global budget cap");
  generate->add_option("--capacity", gen_args.capacity, "knapsack capacity");
  generate->add_option("--vmax", gen_args.vmax, "max item value in units");
  generate->add_option("--smax", gen_args.smax, "max item size");

  auto* run = app.add_subcommand("run", "solve an instance file");
  std::string run_solver;
  std::string run_path;
  std::string run_format = "text";
  RunFlags run_flags;
  run->add_option("solver", run_solver,
                  "tree forest cycle interval mbf mwbrf band ptas oracle "
                  "knapsack")
      ->required();
  run->add_option("file", run_path, "instance file")->required();
  run->add_flag("--oracle", run_flags.oracle,
                "compare against the brute-force optimum");
  run->add_flag("--keep-scanning", run_flags.keep_scanning,
                "mbf variant that skips unaffordable vertices");
  run->add_option("--check-claw", run_flags.check_claw,
                  "verify no vertex has d+1 pairwise non-adjacent neighbors");
  run->add_option("-k", run_flags.k, "ptas accuracy parameter");
  run->add_option("--format", run_format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  auto* greedy = app.add_subcommand("greedy", "run a greedy heuristic");
  std::string greedy_algo = "mbf";
  std::string greedy_path;
  std::string greedy_format = "text";
  RunFlags greedy_flags;
  greedy->add_option("--algo", greedy_algo, "mbf or mwbrf")
      ->check(CLI::IsMember({"mbf", "mwbrf"}));
  greedy->add_option("file", greedy_path, "graph or leveled file")->required();
  greedy->add_flag("--oracle", greedy_flags.oracle,
                   "compare against the brute-force optimum");
  greedy->add_flag("--keep-scanning", greedy_flags.keep_scanning,
                   "mbf variant that skips unaffordable vertices");
  greedy->add_option("--check-claw", greedy_flags.check_claw,
                     "verify no vertex has d+1 pairwise non-adjacent "
                     "neighbors");
  greedy->add_option("--format", greedy_format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  auto* reduce = app.add_subcommand("reduce", "rewrite an instance");
  std::string reduce_mode;
  std::string reduce_in;
  std::string reduce_out = "-";
  reduce->add_option("mode", reduce_mode, "knapsack-to-star")->required();
  reduce->add_option("input", reduce_in, "knapsack file")->required();
  reduce->add_option("output", reduce_out, "output path or - for stdout");

  auto* bench = app.add_subcommand("bench", "time a solver on generated sizes");
  BenchArgs bench_args;
  bench->add_option("solver", bench_args.solver, "solver to time")->required();
  bench->add_option("--sizes", bench_args.sizes, "instance sizes");
  bench->add_option("-B", bench_args.B, "global budget cap");
  bench->add_option("--wmax", bench_args.wmax, "max weight in whole units");
  bench->add_option("--bmax", bench_args.bmax, "max vertex budget");
  bench->add_option("--seed", bench_args.seed, "rng seed");
  bench->add_option("--reps", bench_args.reps, "repetitions per size");
  bench->add_option("-k", bench_args.k, "ptas accuracy parameter");
  bench->add_option("--format", bench_args.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(validate_path);
    if (generate->parsed()) return cmd_generate(gen_args);
    if (run->parsed()) {
      return cmd_run(run_solver, run_path, run_flags, run_format);
    }
    if (greedy->parsed()) {
      return cmd_run(greedy_algo, greedy_path, greedy_flags, greedy_format);
    }
    if (reduce->parsed()) return cmd_reduce(reduce_mode, reduce_in, reduce_out);
    if (bench->parsed()) return cmd_bench(bench_args);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
