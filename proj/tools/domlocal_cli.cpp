// Command-line front end: generate instances, run the pipeline, verify
// against the exact oracle, and batch-benchmark to CSV.
//
// Exit code is 0 iff every produced set dominates and no contract error
// occurred.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "domlocal/gen.hpp"
#include "domlocal/oracle.hpp"
#include "domlocal/pipeline.hpp"

using namespace domlocal;

namespace {

Graph generate(const std::string& cls, int n, std::uint64_t seed, int gamma, int m, double d) {
  if (cls == "planar") return gen_planar(n, seed);
  if (cls == "triangle_free_planar") return gen_triangle_free_planar(n, seed);
  if (cls == "bipartite_planar") return gen_bipartite_planar(n, seed);
  if (cls == "girth5_planar") return gen_girth5_planar(n, seed);
  if (cls == "outerplanar") return gen_outerplanar(n, seed);
  if (cls == "sparse_er") return gen_sparse_er(n, d, seed);
  if (cls == "g_gamma_m") return g_gamma_m(gamma, m);
  throw parse_error("unknown graph class: " + cls);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  return load_edge_list(in);
}

std::string default_generator_for(const std::string& preset) {
  if (preset == "planar") return "planar";
  if (preset == "triangle_free_planar") return "triangle_free_planar";
  if (preset == "bipartite_planar") return "bipartite_planar";
  if (preset == "girth5_planar") return "girth5_planar";
  if (preset == "outerplanar") return "outerplanar";
  return "planar";
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw parse_error("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
}

ClassPreset make_preset(const std::string& name, double eps, const std::string& params_json) {
  if (!params_json.empty()) {
    std::ifstream in(params_json);
    if (!in) throw parse_error("cannot open " + params_json);
    nlohmann::json j;
    in >> j;
    ClassParams p = ClassParams::from_json(j);
    p.epsilon = eps;
    return preset_custom(p);
  }
  return preset_by_name(name, eps);
}

nlohmann::json verify_one(const Graph& g, const ClassPreset& preset, const RunOptions& opts,
                          long long oracle_budget) {
  RunReport report = run_pipeline(g, preset, opts);
  nlohmann::json j;
  j["run"] = report.to_json();
  try {
    int gamma = static_cast<int>(exact_min_dominating_set(g, g.vertices(), oracle_budget).size());
    int alg = static_cast<int>(report.dominating_set().size());
    double bound = preset.guarantee_factor();
    j["gamma"] = gamma;
    j["alg_size"] = alg;
    j["ratio"] = gamma > 0 ? static_cast<double>(alg) / gamma : 0.0;
    j["bound"] = bound;
    j["within_bound"] = gamma == 0 || alg <= bound * gamma + 1e-9;
  } catch (const search_aborted&) {
    j["gamma"] = nullptr;
    j["within_bound"] = nullptr;
    j["note"] = "oracle budget exceeded; instance skipped";
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LOCAL-model dominating-set approximation toolkit"};
  app.require_subcommand(1);

  // gen
  std::string g_class = "planar", g_out;
  int g_n = 100, g_gamma = 3, g_m = 5;
  double g_d = 3.0;
  std::uint64_t g_seed = 1;
  auto* cmd_gen = app.add_subcommand("gen", "generate an instance as an edge list");
  cmd_gen->add_option("--class", g_class,
                      "planar|triangle_free_planar|bipartite_planar|girth5_planar|outerplanar|"
                      "sparse_er|g_gamma_m");
  cmd_gen->add_option("--n", g_n, "vertex count (base size for derived classes)");
  cmd_gen->add_option("--seed", g_seed, "RNG seed");
  cmd_gen->add_option("--gamma", g_gamma, "gamma for g_gamma_m");
  cmd_gen->add_option("--m", g_m, "m for g_gamma_m");
  cmd_gen->add_option("--d", g_d, "expected degree for sparse_er");
  cmd_gen->add_option("--out", g_out, "output path (default stdout)");

  // run
  std::string r_graph, r_preset = "planar", r_phase3 = "lp", r_out, r_params;
  double r_eps = 1.0;
  bool r_strict = false;
  auto* cmd_run = app.add_subcommand("run", "run the pipeline on a graph file");
  cmd_run->add_option("--graph", r_graph, "edge-list file")->required();
  cmd_run->add_option("--preset", r_preset,
                      "planar|triangle_free_planar|bipartite_planar|girth5_planar|outerplanar|"
                      "k3t:<nabla1>:<t>|general:<nabla1>");
  cmd_run->add_option("--params-json", r_params, "custom params JSON file (overrides preset)");
  cmd_run->add_option("--phase3", r_phase3, "lp|greedy");
  cmd_run->add_option("--epsilon", r_eps, "approximation slack (default 1)");
  cmd_run->add_flag("--strict", r_strict, "abort on violated class promises");
  cmd_run->add_option("--out", r_out, "report path (default stdout)");

  // verify
  std::string v_graph, v_preset = "planar", v_phase3 = "lp", v_out, v_params;
  double v_eps = 1.0;
  bool v_strict = false;
  long long v_budget = 100'000'000;
  auto* cmd_verify = app.add_subcommand("verify", "run pipeline and compare to the exact oracle");
  cmd_verify->add_option("--graph", v_graph, "edge-list file")->required();
  cmd_verify->add_option("--preset", v_preset, "preset name");
  cmd_verify->add_option("--params-json", v_params, "custom params JSON file");
  cmd_verify->add_option("--phase3", v_phase3, "lp|greedy");
  cmd_verify->add_option("--epsilon", v_eps, "approximation slack");
  cmd_verify->add_flag("--strict", v_strict, "abort on violated class promises");
  cmd_verify->add_option("--budget", v_budget, "oracle branch-node budget");
  cmd_verify->add_option("--out", v_out, "report path (default stdout)");

  // bench
  std::string b_class = "planar", b_preset, b_out = "bench.csv";
  int b_count = 20, b_nmin = 20, b_nmax = 40;
  double b_eps = 1.0;
  std::uint64_t b_seed = 1;
  long long b_budget = 100'000'000;
  auto* cmd_bench = app.add_subcommand("bench", "batch verify to CSV");
  cmd_bench->add_option("--class", b_class, "generator class");
  cmd_bench->add_option("--preset", b_preset, "preset (default: matches class)");
  cmd_bench->add_option("--count", b_count, "instance count");
  cmd_bench->add_option("--n-min", b_nmin, "smallest n");
  cmd_bench->add_option("--n-max", b_nmax, "largest n");
  cmd_bench->add_option("--epsilon", b_eps, "approximation slack");
  cmd_bench->add_option("--seed", b_seed, "base seed");
  cmd_bench->add_option("--budget", b_budget, "oracle branch-node budget");
  cmd_bench->add_option("--out", b_out, "CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_gen) {
      Graph g = generate(g_class, g_n, g_seed, g_gamma, g_m, g_d);
      if (g_out.empty()) {
        save_edge_list(g, std::cout);
      } else {
        std::ofstream out(g_out);
        if (!out) throw parse_error("cannot write " + g_out);
        save_edge_list(g, out);
      }
      return 0;
    }
    if (*cmd_run) {
      Graph g = load_graph(r_graph);
      ClassPreset preset = make_preset(r_preset, r_eps, r_params);
      RunOptions opts;
      opts.phase3 = r_phase3 == "greedy" ? Phase3Kind::Greedy : Phase3Kind::Lp;
      opts.strict = r_strict;
      RunReport report = run_pipeline(g, preset, opts);
      emit(report.to_json(), r_out);
      return report.dominates ? 0 : 1;
    }
    if (*cmd_verify) {
      Graph g = load_graph(v_graph);
      ClassPreset preset = make_preset(v_preset, v_eps, v_params);
      RunOptions opts;
      opts.phase3 = v_phase3 == "greedy" ? Phase3Kind::Greedy : Phase3Kind::Lp;
      opts.strict = v_strict;
      nlohmann::json j = verify_one(g, preset, opts, v_budget);
      emit(j, v_out);
      return j["run"]["dominates"].get<bool>() ? 0 : 1;
    }
    if (*cmd_bench) {
      std::string preset_name = b_preset.empty() ? default_generator_for(b_class) : b_preset;
      std::ofstream csv(b_out);
      if (!csv) throw parse_error("cannot write " + b_out);
      csv << "seed,n,m,gamma,alg_lp,alg_greedy,ratio_lp,ratio_greedy,rounds_lp,rounds_greedy\n";
      Rng rng(b_seed);
      for (int i = 0; i < b_count; ++i) {
        std::uint64_t seed = b_seed + i;
        int n = b_nmin + (b_nmax > b_nmin ? static_cast<int>(rng.below(b_nmax - b_nmin + 1)) : 0);
        Graph g = generate(b_class, n, seed, g_gamma, g_m, g_d);
        ClassPreset preset = preset_by_name(preset_name, b_eps);
        RunOptions lp_opts, greedy_opts;
        lp_opts.phase3 = Phase3Kind::Lp;
        greedy_opts.phase3 = Phase3Kind::Greedy;
        RunReport lp_rep = run_pipeline(g, preset, lp_opts);
        RunReport gr_rep = run_pipeline(g, preset, greedy_opts);
        std::string gamma_s = "NA", ratio_lp = "NA", ratio_gr = "NA";
        try {
          int gamma =
              static_cast<int>(exact_min_dominating_set(g, g.vertices(), b_budget).size());
          gamma_s = std::to_string(gamma);
          if (gamma > 0) {
            ratio_lp = std::to_string(static_cast<double>(lp_rep.dominating_set().size()) / gamma);
            ratio_gr = std::to_string(static_cast<double>(gr_rep.dominating_set().size()) / gamma);
          }
        } catch (const search_aborted&) {
        }
        csv << seed << ',' << g.vertex_count() << ',' << g.edge_count() << ',' << gamma_s << ','
            << lp_rep.dominating_set().size() << ',' << gr_rep.dominating_set().size() << ','
            << ratio_lp << ',' << ratio_gr << ',' << lp_rep.rounds.total() << ','
            << gr_rep.rounds.total() << '\n';
      }
      return 0;
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
