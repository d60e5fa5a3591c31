#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "cyclebasis/experiments.hpp"
#include "cyclebasis/serialize.hpp"
#include "oracles.hpp"

using namespace cyclebasis;

TEST_CASE("schedules match the published trial counts") {
  auto desk = desk_schedule();
  REQUIRE(desk.size() == 12);
  for (std::size_t i = 0; i < 6; ++i) CHECK(desk[i].d == 3);
  for (std::size_t i = 6; i < 12; ++i) CHECK(desk[i].d == 8);
  CHECK(desk[0].n == 32);
  CHECK(desk[0].trials == 400);
  CHECK(desk[3].n == 256);
  CHECK(desk[3].trials == 200);
  CHECK(desk[5].n == 1024);
  CHECK(desk[5].trials == 50);
  CHECK(desk[8].n == 128);
  CHECK(desk[8].trials == 200);
  CHECK(desk[11].n == 1024);
  CHECK(desk[11].trials == 25);
  for (const auto& e : desk) {
    CHECK(e.trials >= 20);
    CHECK((static_cast<long long>(e.n) * e.d) % 2 == 0);
    CHECK(e.n <= 1024);
  }
  auto full = full_schedule();
  REQUIRE(full.size() == 19);
  CHECK(full[0].trials == 4000);
  CHECK(full[9].n == 16384);
  CHECK(full[9].trials == 20);
  CHECK(full[18].n == 8192);
  CHECK(full[18].d == 8);
  CHECK(full[18].trials == 20);
}

TEST_CASE("quantiles interpolate linearly") {
  std::vector<double> v{1, 2, 3, 4};
  CHECK(quantile_sorted(v, 0.25) == doctest::Approx(1.75));
  CHECK(quantile_sorted(v, 0.5) == doctest::Approx(2.5));
  CHECK(quantile_sorted(v, 0.75) == doctest::Approx(3.25));
  CHECK(quantile_sorted(v, 0.0) == doctest::Approx(1.0));
  CHECK(quantile_sorted(v, 1.0) == doctest::Approx(4.0));
  CHECK(quantile_sorted({5}, 0.75) == doctest::Approx(5.0));
  CHECK(quantile_sorted({1, 2}, 0.5) == doctest::Approx(1.5));
  CHECK_THROWS_AS(quantile_sorted({}, 0.5), std::invalid_argument);
}

static TrialRecord rec_with_mu(int mu) {
  TrialRecord r;
  r.n = 16;
  r.d = 3;
  r.mu = mu;
  r.case1 = 1;
  r.case2a = 1;
  r.case2b = 1;
  r.case3 = 1;
  return r;
}

TEST_CASE("aggregation: quartiles, whiskers, outliers, case shares") {
  std::vector<TrialRecord> trials;
  for (int mu : {1, 2, 2, 3, 10}) trials.push_back(rec_with_mu(mu));
  AggregateRow row = aggregate_trials(16, 3, 0, trials);
  CHECK(row.trials == 5);
  CHECK(row.median_mu == doctest::Approx(2.0));
  CHECK(row.q1 == doctest::Approx(2.0));
  CHECK(row.q3 == doctest::Approx(3.0));
  // fences at q1 - 1.5*iqr = 0.5 and q3 + 1.5*iqr = 4.5, clamped to data
  CHECK(row.whisker_lo == doctest::Approx(1.0));
  CHECK(row.whisker_hi == doctest::Approx(3.0));
  CHECK(row.outliers == 1);
  CHECK(row.pct_case1 == doctest::Approx(25.0));
  CHECK(row.pct_case3 == doctest::Approx(25.0));
}

TEST_CASE("fit recovers exact coefficients") {
  std::vector<std::pair<double, double>> pts;
  for (double n : {32.0, 64.0, 128.0, 256.0}) pts.emplace_back(n, 2.0 * std::log2(n));
  FitResult fit = fit_coefficient(pts, FitModel::log2_n);
  CHECK(fit.c == doctest::Approx(2.0));
  for (double r : fit.ratios) CHECK(r == doctest::Approx(1.0));

  pts.clear();
  for (double n : {32.0, 64.0, 128.0, 256.0}) {
    double l = std::log2(n);
    pts.emplace_back(n, 0.5 * l * l);
  }
  FitResult sq = fit_coefficient(pts, FitModel::log2_squared_n);
  CHECK(sq.c == doctest::Approx(0.5));
  for (double r : sq.ratios) CHECK(r == doctest::Approx(1.0));

  // quadratic growth pushed through the linear model: ratios must climb
  FitResult wrong = fit_coefficient(pts, FitModel::log2_n);
  for (std::size_t i = 1; i < wrong.ratios.size(); ++i)
    CHECK(wrong.ratios[i] > wrong.ratios[i - 1]);

  FitResult dup = fit_coefficient({{64.0, 7.0}, {64.0, 7.0}}, FitModel::log2_n);
  CHECK(dup.c == doctest::Approx(7.0 / 6.0));
  CHECK(dup.ratios[0] == doctest::Approx(1.0));

  CHECK_THROWS_AS(fit_coefficient({{64.0, 7.0}}, FitModel::log2_n),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_coefficient({{1.0, 7.0}, {64.0, 7.0}}, FitModel::log2_n),
                  std::invalid_argument);
}

TEST_CASE("run_schedule produces verified, seeded, ordered records") {
  RunScheduleResult res = run_schedule({{32, 3, 50}}, {0, 3}, 1000, 1);
  REQUIRE(res.raw.size() == 100);
  REQUIRE(res.rows.size() == 2);
  for (int t = 0; t < 50; ++t) {
    const TrialRecord& a = res.raw[2 * t];
    const TrialRecord& b = res.raw[2 * t + 1];
    CHECK(a.variant == 0);
    CHECK(b.variant == 3);
    CHECK(a.seed == 1000 + static_cast<std::uint64_t>(t));
    CHECK(b.seed == a.seed);
    CHECK(a.n == 32);
    CHECK(a.d == 3);
    CHECK(a.mu >= 1);
    CHECK(b.mu >= 1);
  }
  CHECK(res.rows[0].variant == 0);
  CHECK(res.rows[1].variant == 3);
  CHECK(res.rows[0].trials == 50);
  CHECK(res.rows[0].median_mu >= res.rows[1].median_mu);
}

TEST_CASE("parallel execution reproduces the serial result") {
  RunScheduleResult serial = run_schedule({{24, 3, 20}, {12, 8, 10}}, {0, 2}, 7, 1);
  RunScheduleResult parallel = run_schedule({{24, 3, 20}, {12, 8, 10}}, {0, 2}, 7, 4);
  REQUIRE(serial.raw.size() == parallel.raw.size());
  for (std::size_t i = 0; i < serial.raw.size(); ++i) {
    CHECK(serial.raw[i].mu == parallel.raw[i].mu);
    CHECK(serial.raw[i].seed == parallel.raw[i].seed);
    CHECK(serial.raw[i].case3 == parallel.raw[i].case3);
  }
  REQUIRE(serial.rows.size() == parallel.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i)
    CHECK(serial.rows[i].median_mu == parallel.rows[i].median_mu);
}

TEST_CASE("root-targeted removal beats uniform removal at 256 vertices") {
  RunScheduleResult res = run_schedule({{256, 3, 200}}, {0, 3}, 5000, 2);
  double v0 = res.rows[0].median_mu;
  double v3 = res.rows[1].median_mu;
  CHECK(v3 <= v0);
  CHECK(v3 < v0);  // at this size the gap is well established
}

TEST_CASE("variant ladder is ordered at 512 vertices") {
  RunScheduleResult res = run_schedule({{512, 3, 200}}, {0, 1, 2, 3, 4}, 6000, 2);
  double med[5];
  for (const AggregateRow& row : res.rows) med[row.variant] = row.median_mu;
  // adjacent ties allowed; the chain v3 <= v2 <= v4 <= v1 <= v0 must hold
  CHECK(med[3] <= med[2]);
  CHECK(med[2] <= med[4]);
  CHECK(med[4] <= med[1]);
  CHECK(med[1] <= med[0]);
  CHECK(med[3] < med[0]);
}

TEST_CASE("denser graphs shift work into bfs emissions") {
  auto sparse = case_frequency_report(128, 3, 0, 25, 42, 2);
  auto dense = case_frequency_report(128, 8, 0, 25, 42, 2);
  double sum_sparse = sparse[0] + sparse[1] + sparse[2] + sparse[3];
  double sum_dense = dense[0] + dense[1] + dense[2] + dense[3];
  CHECK(sum_sparse == doctest::Approx(1.0));
  CHECK(sum_dense == doctest::Approx(1.0));
  CHECK(dense[3] > sparse[3]);  // case-3 share grows with density
}

TEST_CASE("verification errors carry their coordinates") {
  VerificationError err(256, 3, 2, 77, "rank 5 != cycle space dimension 6");
  CHECK(err.n == 256);
  CHECK(err.variant == 2);
  std::string msg = err.what();
  CHECK(msg.find("n=256") != std::string::npos);
  CHECK(msg.find("d=3") != std::string::npos);
  CHECK(msg.find("variant=v2") != std::string::npos);
  CHECK(msg.find("seed=77") != std::string::npos);
}

TEST_CASE("run_on_file benchmarks a fixed graph plus the minimum basis") {
  std::string path = "run_on_file_fixture.edges";
  {
    std::ofstream out(path);
    out << to_edge_list(oracles::petersen());
  }
  auto rows = run_on_file(path, 5, 2024, 1);
  std::remove(path.c_str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].variant == 0);
  CHECK(rows[1].variant == 3);
  CHECK(rows[2].variant == 5);
  CHECK(rows[0].trials == 5);
  CHECK(rows[2].trials == 1);
  for (const auto& row : rows) {
    CHECK(row.n == 10);
    CHECK(row.d == 3);
    CHECK(row.median_mu >= 2.0);  // participation lower bound of the graph
  }
  // triangle: every method produces the one cycle with participation 1
  std::string tri = "triangle_fixture.edges";
  {
    std::ofstream out(tri);
    out << "3 3\n0 1\n1 2\n2 0\n";
  }
  auto trows = run_on_file(tri, 3, 1, 1);
  std::remove(tri.c_str());
  for (const auto& row : trows) {
    CHECK(row.median_mu == doctest::Approx(1.0));
    CHECK(row.whisker_lo == doctest::Approx(1.0));
    CHECK(row.whisker_hi == doctest::Approx(1.0));
  }
}

// ---- serialization ----------------------------------------------------------

TEST_CASE("csv headers are pinned") {
  CHECK(raw_csv_header() ==
        "n,d,variant,seed,mu,case1,case2a,case2b,case3,max_case3_cycle_len,runtime_ms\n");
  CHECK(aggregate_csv_header() ==
        "n,d,variant,trials,median_mu,q1,q3,whisker_lo,whisker_hi,outliers,"
        "pct_case1,pct_case2a,pct_case2b,pct_case3\n");
  CHECK(variant_column(0) == "v0");
  CHECK(variant_column(4) == "v4");
  CHECK(variant_column(5) == "minbasis");
}

TEST_CASE("raw csv rows format the runtime to fixed precision") {
  TrialRecord rec = rec_with_mu(4);
  rec.variant = 2;
  rec.seed = 9;
  rec.max_case3_len = 6;
  rec.runtime_ms = 1.23456;
  CHECK(raw_csv_row(rec) == "16,3,v2,9,4,1,1,1,1,6,1.235\n");
}

TEST_CASE("aggregate csv roundtrips") {
  std::vector<TrialRecord> trials;
  for (int mu : {2, 3, 3, 4, 5, 9}) trials.push_back(rec_with_mu(mu));
  AggregateRow row = aggregate_trials(64, 3, 1, trials);
  std::string text = aggregate_csv_header() + aggregate_csv_row(row);
  auto parsed = read_aggregate_csv(text);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].n == 64);
  CHECK(parsed[0].variant == 1);
  CHECK(parsed[0].trials == 6);
  CHECK(parsed[0].median_mu == doctest::Approx(row.median_mu));
  CHECK(parsed[0].q3 == doctest::Approx(row.q3));
  CHECK(parsed[0].pct_case2a == doctest::Approx(row.pct_case2a));
  CHECK_THROWS_AS(read_aggregate_csv("n,d\n1,2\n"), std::runtime_error);
}

TEST_CASE("basis json is byte-stable and roundtrips cycles") {
  auto g = oracles::petersen();
  auto [basis, stats] = build_cycle_basis(g, variant_config(2), 31337);
  std::string j1 = basis_to_json(g, basis, stats, "v2", 31337);
  auto [basis2, stats2] = build_cycle_basis(g, variant_config(2), 31337);
  std::string j2 = basis_to_json(g, basis2, stats2, "v2", 31337);
  CHECK(j1 == j2);
  CHECK(j1.find("\"method\": \"v2\"") != std::string::npos);
  CHECK(j1.find("\"runtime") == std::string::npos);  // no wall-clock noise
  std::vector<Cycle> parsed = cycles_from_json(j1);
  CHECK(parsed == basis.cycles);
}

TEST_CASE("verification report json") {
  auto g = oracles::complete_graph(4);
  std::string good = report_to_json(g, {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}});
  CHECK(good.find("\"is_basis\": true") != std::string::npos);
  CHECK(good.find("\"weakly_fundamental\": true") != std::string::npos);
  std::string bad = report_to_json(g, {{0, 1, 3}});
  CHECK(bad.find("\"is_basis\": false") != std::string::npos);
}

TEST_CASE("process csv formats") {
  Process1Result p1 = process1(12, 9, 3);
  std::string csv1 = process1_csv(p1);
  CHECK(csv1.rfind("iteration,m,k,max_load\n", 0) == 0);
  CHECK(csv1.find("1,12,6,1") != std::string::npos);
  Process2Result p2 = process2(96, 12, 3);
  std::string csv2 = process2_csv(p2);
  CHECK(csv2.rfind("epoch,m,k,max_load,bad_buckets\n", 0) == 0);
}
