#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclebasis/ballsbins.hpp"
#include "cyclebasis/baselines.hpp"
#include "cyclebasis/engine.hpp"
#include "cyclebasis/experiments.hpp"
#include "cyclebasis/gf2.hpp"
#include "cyclebasis/multigraph.hpp"
#include "cyclebasis/randgraph.hpp"
#include "cyclebasis/serialize.hpp"

namespace {

using namespace cyclebasis;

struct Global {
  std::uint64_t seed = 12345;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string out_dir = ".";
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text(out_path, text);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

std::string in_out_dir(const Global& g, const std::string& name) {
  return (std::filesystem::path(g.out_dir) / name).string();
}

MultiGraph load_or_generate(const std::string& input, int gen_n, int gen_d,
                            std::uint64_t seed) {
  if (!input.empty()) return read_edge_list_file(input);
  if (gen_n <= 0) throw CLI::ValidationError("need an input file or --gen-n/--gen-d");
  return random_regular_connected(gen_n, gen_d, seed);
}

TrialRecord record_from(const MultiGraph& g, int variant, std::uint64_t seed,
                        const RunStats& stats, double runtime_ms) {
  TrialRecord rec;
  rec.n = g.vertex_count();
  rec.d = g.vertex_count() > 0
              ? static_cast<int>(std::lround(2.0 * g.edge_count() / g.vertex_count()))
              : 0;
  rec.variant = variant;
  rec.seed = seed;
  rec.mu = stats.mu;
  rec.case1 = stats.case1;
  rec.case2a = stats.case2a;
  rec.case2b = stats.case2b;
  rec.case3 = stats.case3;
  rec.max_case3_len = stats.max_case3_len;
  rec.runtime_ms = runtime_ms;
  return rec;
}

int run(int argc, char** argv) {
  CLI::App app{"cycle bases of multigraphs with low maximum edge participation"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "master RNG seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads for trial sweeps")->capture_default_str();
  app.add_option("--out-dir", g.out_dir, "directory for generated files")->capture_default_str();

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a random d-regular graph as an edge list");
  int gen_n = 0, gen_d = 3;
  bool gen_disconnected = false;
  std::string gen_out;
  gen->add_option("-n,--n", gen_n, "vertex count")->required();
  gen->add_option("-d,--d", gen_d, "degree")->capture_default_str();
  gen->add_flag("--allow-disconnected", gen_disconnected, "skip the connectivity resample");
  gen->add_option("-o,--out", gen_out, "output path (default stdout)");
  gen->callback([&] {
    MultiGraph graph = gen_disconnected ? random_regular(gen_n, gen_d, g.seed)
                                        : random_regular_connected(gen_n, gen_d, g.seed);
    emit(to_edge_list(graph), gen_out);
  });

  // ---- basis --------------------------------------------------------------
  auto* basis_cmd = app.add_subcommand("basis", "build a cycle basis and report statistics");
  std::string basis_input, basis_variant = "v0", basis_out, basis_csv;
  int basis_gen_n = 0, basis_gen_d = 3;
  bool basis_audit = false;
  basis_cmd->add_option("input", basis_input, "edge-list file");
  basis_cmd->add_option("--gen-n", basis_gen_n, "generate a random regular graph instead");
  basis_cmd->add_option("--gen-d", basis_gen_d, "degree for --gen-n")->capture_default_str();
  basis_cmd->add_option("--variant", basis_variant, "v0..v4")->capture_default_str();
  basis_cmd->add_flag("--audit", basis_audit, "run per-iteration internal invariant checks");
  basis_cmd->add_option("-o,--out", basis_out, "basis JSON path (default stdout)");
  basis_cmd->add_option("--csv", basis_csv, "also write the stats CSV row here");
  basis_cmd->callback([&] {
    MultiGraph graph = load_or_generate(basis_input, basis_gen_n, basis_gen_d, g.seed);
    int variant = parse_variant(basis_variant);
    VariantConfig cfg = variant_config(variant);
    cfg.audit = basis_audit;
    auto t0 = std::chrono::steady_clock::now();
    auto [basis, stats] = build_cycle_basis(graph, cfg, g.seed);
    auto t1 = std::chrono::steady_clock::now();
    emit(basis_to_json(graph, basis, stats, variant_name(variant), g.seed), basis_out);
    if (!basis_csv.empty()) {
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      write_text(basis_csv, raw_csv_header() + raw_csv_row(record_from(graph, variant, g.seed, stats, ms)));
    }
  });

  // ---- verify -------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "verify a basis JSON against a graph");
  std::string verify_graph, verify_basis_path, verify_out;
  verify_cmd->add_option("graph", verify_graph, "edge-list file")->required();
  verify_cmd->add_option("basis", verify_basis_path, "basis JSON file")->required();
  verify_cmd->add_option("-o,--out", verify_out, "report path (default stdout)");
  verify_cmd->callback([&] {
    MultiGraph graph = read_edge_list_file(verify_graph);
    std::vector<Cycle> cycles = cycles_from_json(slurp(verify_basis_path));
    emit(report_to_json(graph, cycles), verify_out);
    BasisReport rep = verify_basis(graph, cycles);
    if (!rep.is_basis || !verify_weakly_fundamental(cycles)) std::exit(2);
  });

  // ---- experiment ---------------------------------------------------------
  auto* exp_cmd = app.add_subcommand("experiment", "run the trial schedule, write raw + aggregate CSVs");
  bool exp_full = false;
  std::vector<std::string> exp_entries;
  std::string exp_variants = "v0,v1,v2,v3,v4";
  exp_cmd->add_flag("--full", exp_full, "full-size schedule (expect days)");
  exp_cmd->add_option("--entry", exp_entries,
                      "custom schedule entry n,d,trials (repeatable; overrides the default)");
  exp_cmd->add_option("--variants", exp_variants, "comma-separated variant list")->capture_default_str();
  exp_cmd->callback([&] {
    std::vector<ScheduleEntry> schedule;
    if (!exp_entries.empty()) {
      for (const std::string& s : exp_entries) {
        ScheduleEntry e{};
        if (std::sscanf(s.c_str(), "%d,%d,%d", &e.n, &e.d, &e.trials) != 3)
          throw CLI::ValidationError("--entry expects n,d,trials");
        schedule.push_back(e);
      }
    } else {
      schedule = exp_full ? full_schedule() : desk_schedule();
    }
    std::vector<int> variants;
    std::stringstream ss(exp_variants);
    std::string item;
    while (std::getline(ss, item, ',')) variants.push_back(parse_variant(item));
    RunScheduleResult res = run_schedule(schedule, variants, g.seed, g.jobs);
    std::string raw = raw_csv_header();
    for (const TrialRecord& r : res.raw) raw += raw_csv_row(r);
    std::string agg = aggregate_csv_header();
    for (const AggregateRow& r : res.rows) agg += aggregate_csv_row(r);
    write_text(in_out_dir(g, "raw.csv"), raw);
    write_text(in_out_dir(g, "aggregate.csv"), agg);
    std::cout << "wrote " << res.raw.size() << " trials to " << in_out_dir(g, "raw.csv")
              << " and " << res.rows.size() << " rows to " << in_out_dir(g, "aggregate.csv")
              << "\n";
  });

  // ---- fit ----------------------------------------------------------------
  auto* fit_cmd = app.add_subcommand("fit", "fit c*f(n) to aggregate medians");
  std::string fit_input, fit_variant = "v0", fit_model = "log2sq";
  int fit_d = 3;
  fit_cmd->add_option("input", fit_input, "aggregate CSV")->required();
  fit_cmd->add_option("--variant", fit_variant)->capture_default_str();
  fit_cmd->add_option("--d", fit_d, "degree filter")->capture_default_str();
  fit_cmd->add_option("--model", fit_model, "log2 or log2sq")->capture_default_str();
  fit_cmd->callback([&] {
    std::vector<AggregateRow> rows = read_aggregate_csv(slurp(fit_input));
    int variant = parse_variant(fit_variant);
    FitModel model;
    if (fit_model == "log2")
      model = FitModel::log2_n;
    else if (fit_model == "log2sq")
      model = FitModel::log2_squared_n;
    else
      throw CLI::ValidationError("--model must be log2 or log2sq");
    std::vector<std::pair<double, double>> points;
    std::vector<int> ns;
    for (const AggregateRow& r : rows)
      if (r.variant == variant && r.d == fit_d) {
        points.emplace_back(r.n, r.median_mu);
        ns.push_back(r.n);
      }
    FitResult fr = fit_coefficient(points, model);
    std::cout << "c," << fr.c << "\n";
    std::cout << "n,ratio\n";
    for (std::size_t i = 0; i < ns.size(); ++i)
      std::cout << ns[i] << ',' << fr.ratios[i] << "\n";
  });

  // ---- bins ---------------------------------------------------------------
  auto* bins = app.add_subcommand("bins", "balls-into-bins proxy processes");
  bins->require_subcommand(1);
  auto* p1 = bins->add_subcommand("process1", "per-iteration removal process");
  int p1_m = 3 * (1 << 12), p1_mmin = 12;
  std::string p1_out;
  p1->add_option("--m", p1_m, "initial bucket count")->capture_default_str();
  p1->add_option("--m-min", p1_mmin, "termination threshold")->capture_default_str();
  p1->add_option("-o,--out", p1_out, "trajectory CSV path (default stdout)");
  p1->callback([&] {
    Process1Result res = process1(p1_m, p1_mmin, g.seed);
    emit(process1_csv(res), p1_out);
    std::cerr << "max_load=" << res.max_load << (res.early_stop ? " (early stop)" : "") << "\n";
  });
  auto* p2 = bins->add_subcommand("process2", "delayed-removal epoch process");
  int p2_m = 3 * (1 << 12), p2_mmin = 12;
  double p2_c = 0.1;
  std::string p2_balls = "k", p2_out;
  p2->add_option("--m", p2_m, "initial bucket count")->capture_default_str();
  p2->add_option("--m-min", p2_mmin, "termination threshold")->capture_default_str();
  p2->add_option("--bad-c", p2_c, "bad-bucket constant c")->capture_default_str();
  p2->add_option("--balls", p2_balls, "balls per round: k or k-3")->capture_default_str();
  p2->add_option("-o,--out", p2_out, "trajectory CSV path (default stdout)");
  p2->callback([&] {
    BallsPerRound flavor;
    if (p2_balls == "k")
      flavor = BallsPerRound::k_full;
    else if (p2_balls == "k-3")
      flavor = BallsPerRound::k_minus_3;
    else
      throw CLI::ValidationError("--balls must be k or k-3");
    Process2Result res = process2(p2_m, p2_mmin, g.seed, p2_c, flavor);
    emit(process2_csv(res), p2_out);
    std::cerr << "max_load=" << res.max_load
              << " theorem_bound(c=0.1)=" << theorem_bound(0.1, p2_m)
              << (res.early_stop ? " (early stop)" : "") << "\n";
  });
  auto* cp = bins->add_subcommand("couple", "coupled P1/P1a/P2 domination run");
  int cp_m = 48, cp_k = 0;
  cp->add_option("--m", cp_m, "bins (divisible by 6)")->capture_default_str();
  cp->add_option("--k", cp_k, "balls per round (default 2*ceil(log2(2m/3)))");
  cp->callback([&] {
    int k = cp_k;
    if (k == 0) {
      int n = 2 * cp_m / 3, lg = 0;
      while ((1 << lg) < n) ++lg;
      k = 2 * lg;
    }
    CoupledResult res = coupled_run(cp_m, k, g.seed);
    nlohmann::ordered_json j;
    j["m"] = cp_m;
    j["k"] = k;
    j["p1"] = res.p1;
    j["p1a"] = res.p1a;
    j["p2"] = res.p2;
    j["total_balls"] = res.total_balls;
    j["dominates"] = res.dominates();
    std::cout << j.dump(2) << "\n";
    if (!res.dominates()) std::exit(2);
  });

  // ---- cheeger ------------------------------------------------------------
  auto* ch = app.add_subcommand("cheeger", "exact Cheeger constant of a small graph");
  std::string ch_input;
  ch->add_option("input", ch_input, "edge-list file")->required();
  ch->callback([&] {
    MultiGraph graph = read_edge_list_file(ch_input);
    Rational h = cheeger_constant(graph);
    std::cout << h.num << "/" << h.den << " = " << h.value() << "\n";
  });

  // ---- minbasis -----------------------------------------------------------
  auto* mb = app.add_subcommand("minbasis", "minimum total-length cycle basis");
  std::string mb_input, mb_out;
  mb->add_option("input", mb_input, "edge-list file")->required();
  mb->add_option("-o,--out", mb_out, "basis JSON path (default stdout)");
  mb->callback([&] {
    MultiGraph graph = read_edge_list_file(mb_input);
    CycleBasis basis = min_weight_cycle_basis(graph);
    RunStats stats;
    stats.mu = max_edge_participation(basis.cycles);
    stats.load_histogram = participation_histogram(graph, basis.cycles);
    emit(basis_to_json(graph, basis, stats, "minbasis", g.seed), mb_out);
  });

  // ---- cases --------------------------------------------------------------
  auto* cases = app.add_subcommand("cases", "mean case-frequency report");
  int cases_n = 256, cases_d = 3, cases_trials = 25;
  std::string cases_variant = "v0";
  cases->add_option("--n", cases_n)->capture_default_str();
  cases->add_option("--d", cases_d)->capture_default_str();
  cases->add_option("--trials", cases_trials)->capture_default_str();
  cases->add_option("--variant", cases_variant)->capture_default_str();
  cases->callback([&] {
    auto shares = case_frequency_report(cases_n, cases_d, parse_variant(cases_variant),
                                        cases_trials, g.seed, g.jobs);
    std::cout << "case,share\n";
    std::cout << "case1," << shares[0] << "\n";
    std::cout << "case2a," << shares[1] << "\n";
    std::cout << "case2b," << shares[2] << "\n";
    std::cout << "case3," << shares[3] << "\n";
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
