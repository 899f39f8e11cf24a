#include "dispgal/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "dispgal/dp.hpp"
#include "dispgal/exact.hpp"
#include "dispgal/instances.hpp"
#include "dispgal/svg.hpp"
#include "dispgal/worstcase.hpp"

namespace dispgal {

namespace {

Rat parse_rat_arg(const std::string& s, const std::string& name) {
  auto r = rat_parse(s);
  if (!r) throw CLI::ValidationError(name, "expected an integer or \"a/b\"");
  return *r;
}

Solution solve_with(const std::string& method, const Instance& inst,
                    double timeout) {
  if (method == "sat") {
    PolyContext ctx = build_context(inst.poly);
    SolveBudget budget;
    budget.seconds = timeout;
    return max_dispersion(ctx, budget);
  }
  if (!inst.office)
    throw std::runtime_error("method '" + method +
                             "' needs the office structure in the instance file");
  if (method == "dp") return max_dispersion_dp(*inst.office);
  if (method == "wc3") return wc3(*inst.office);
  if (method == "wc2") return wc2(*inst.office);
  throw std::runtime_error("unknown method " + method);
}

double default_timeout() {
  if (const char* env = std::getenv("DISPGAL_TIMEOUT")) {
    try {
      return std::stod(env);
    } catch (...) {
    }
  }
  return 0.0;  // unlimited
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"Dispersive art gallery solvers for orthogonal polygons"};
  app.require_subcommand(1);

  // --- gen -----------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->require_subcommand(1);
  std::string gen_out;

  auto* gen_office = gen->add_subcommand("office", "random office polygon");
  std::uint64_t seed = 1;
  int rooms = 5, size_lo = 3, size_hi = 8;
  bool holes = false;
  gen_office->add_option("--rooms", rooms, "number of rooms");
  gen_office->add_option("--seed", seed, "random seed");
  gen_office->add_option("--min-size", size_lo, "minimum room side");
  gen_office->add_option("--max-size", size_hi, "maximum room side");
  gen_office->add_flag("--holes", holes, "add cycle-closing corridors");
  gen_office->add_option("-o,--out", gen_out, "output file")->required();

  auto* gen_pack = gen->add_subcommand("packing", "c-eps-packing");
  int pack_c = 11;
  std::string eps_s = "1/2", tau_s = "1/8";
  gen_pack->add_option("--c", pack_c, "number of corridors");
  gen_pack->add_option("--eps", eps_s, "eps (rational)");
  gen_pack->add_option("--tau", tau_s, "tau (rational, 0 < tau < eps/2)");
  gen_pack->add_option("-o,--out", gen_out, "output file")->required();

  auto* gen_ratio = gen->add_subcommand("ratio", "stacked-rooms ratio family");
  int ratio_k = 2;
  gen_ratio->add_option("--k", ratio_k, "family parameter (k >= 2)");
  gen_ratio->add_option("-o,--out", gen_out, "output file")->required();

  auto* gen_fig = gen->add_subcommand("fig-disp3", "integer instance with optimum 3");
  gen_fig->add_option("-o,--out", gen_out, "output file")->required();

  // --- solve ----------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "solve an instance");
  std::string solve_file, method = "sat", sol_out;
  solve->add_option("file", solve_file, "instance file")->required();
  solve->add_option("--method", method, "sat|dp|wc3|wc2")
      ->check(CLI::IsMember({"sat", "dp", "wc3", "wc2"}));
  solve->add_option("-o,--out", sol_out, "write the solution file");
  double solve_timeout = default_timeout();
  solve->add_option("--timeout", solve_timeout, "seconds (sat method)");

  // --- verify ---------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "verify a solution file");
  std::string verify_inst, verify_sol;
  verify->add_option("instance", verify_inst)->required();
  verify->add_option("solution", verify_sol)->required();

  // --- render ---------------------------------------------------------
  auto* render = app.add_subcommand("render", "draw an instance (SVG)");
  std::string render_inst, render_sol, render_out;
  render->add_option("instance", render_inst)->required();
  render->add_option("solution", render_sol);
  render->add_option("-o,--out", render_out, "output .svg")->required();

  // --- bench ----------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "run a corpus directory");
  std::string bench_dir, bench_method = "sat";
  double bench_timeout = default_timeout();
  bench->add_option("dir", bench_dir, "directory of instance files")->required();
  bench->add_option("--method", bench_method, "sat|dp|wc3|wc2")
      ->check(CLI::IsMember({"sat", "dp", "wc3", "wc2"}));
  bench->add_option("--timeout", bench_timeout, "per-instance seconds");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (gen_office->parsed()) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n_rooms = rooms;
    cfg.size_lo = size_lo;
    cfg.size_hi = size_hi;
    cfg.allow_holes = holes;
    write_instance(gen_out, instance_from_office(gen_random_office(cfg)));
    return 0;
  }
  if (gen_pack->parsed()) {
    Rat eps = parse_rat_arg(eps_s, "--eps");
    Rat tau = parse_rat_arg(tau_s, "--tau");
    write_instance(gen_out, instance_from_office(gen_packing(pack_c, eps, tau)));
    return 0;
  }
  if (gen_ratio->parsed()) {
    write_instance(gen_out, instance_from_office(gen_ratio_family(ratio_k)));
    return 0;
  }
  if (gen_fig->parsed()) {
    write_instance(gen_out, instance_from_office(gen_fig_disp3()));
    return 0;
  }

  if (solve->parsed()) {
    Instance inst = read_instance(solve_file);
    Solution sol = solve_with(method, inst, solve_timeout);
    std::cout << "dispersion " << dispersion_str(sol.dispersion) << "\n";
    if (!sol_out.empty()) write_solution(sol_out, sol);
    return 0;
  }

  if (verify->parsed()) {
    Instance inst = read_instance(verify_inst);
    Solution sol = read_solution(verify_sol);
    PolyContext ctx = build_context(inst.poly);
    VerifyReport rep = verify_solution(ctx, sol);
    std::cout << rep.message << "\n";
    return rep.ok ? 0 : 1;
  }

  if (render->parsed()) {
    Instance inst = read_instance(render_inst);
    if (!render_sol.empty()) {
      Solution sol = read_solution(render_sol);
      write_svg(render_out, inst, &sol);
    } else {
      write_svg(render_out, inst, nullptr);
    }
    return 0;
  }

  if (bench->parsed()) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(bench_dir))
      if (e.is_regular_file() && e.path().extension() == ".json")
        files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    std::cout << "instance\tvertices\tdispersion\tmillis\n";
    for (const auto& f : files) {
      Instance inst = read_instance(f);
      auto t0 = std::chrono::steady_clock::now();
      std::string value = "timeout";
      try {
        Solution sol = solve_with(bench_method, inst, bench_timeout);
        value = dispersion_str(sol.dispersion);
      } catch (const std::runtime_error&) {
        // budget exceeded: report the row and continue
      }
      std::chrono::duration<double, std::milli> ms =
          std::chrono::steady_clock::now() - t0;
      std::cout << fs::path(f).filename().string() << "\t"
                << inst.poly.vertex_count() << "\t" << value << "\t"
                << static_cast<long>(ms.count()) << "\n";
    }
    return 0;
  }
  return 2;
}

}  // namespace

int cli_run(const std::vector<std::string>& args) {
  try {
    return run(args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace dispgal
