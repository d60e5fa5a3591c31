#include "cyclebasis/serialize.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cyclebasis {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_ms(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string basis_to_json(const MultiGraph& g, const CycleBasis& basis,
                          const RunStats& stats, const std::string& method,
                          std::uint64_t seed) {
  ordered_json j;
  j["method"] = method;
  j["seed"] = seed;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["dim"] = g.edge_count() - g.vertex_count() + g.component_count();
  j["mu"] = stats.mu;
  j["case1"] = stats.case1;
  j["case2a"] = stats.case2a;
  j["case2b"] = stats.case2b;
  j["case3"] = stats.case3;
  j["iterations"] = stats.iterations();
  j["max_case3_cycle_len"] = stats.max_case3_len;
  j["load_histogram"] = stats.load_histogram;
  j["cycles"] = basis.cycles;
  return j.dump(2) + "\n";
}

std::string report_to_json(const MultiGraph& g, const std::vector<Cycle>& cycles) {
  BasisReport rep = verify_basis(g, cycles);
  ordered_json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["cycles"] = cycles.size();
  j["expected_dim"] = rep.expected_dim;
  j["rank"] = rep.rank;
  j["is_cycles"] = rep.is_cycles;
  j["independent"] = rep.independent;
  j["is_basis"] = rep.is_basis;
  j["weakly_fundamental"] = verify_weakly_fundamental(cycles);
  j["mu"] = max_edge_participation(cycles);
  j["detail"] = rep.detail;
  return j.dump(2) + "\n";
}

std::vector<Cycle> cycles_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("cycles")) throw std::runtime_error("JSON document has no \"cycles\" array");
  return j["cycles"].get<std::vector<Cycle>>();
}

std::string raw_csv_header() {
  return "n,d,variant,seed,mu,case1,case2a,case2b,case3,max_case3_cycle_len,runtime_ms\n";
}

std::string raw_csv_row(const TrialRecord& rec) {
  std::ostringstream oss;
  oss << rec.n << ',' << rec.d << ',' << variant_column(rec.variant) << ','
      << rec.seed << ',' << rec.mu << ',' << rec.case1 << ',' << rec.case2a << ','
      << rec.case2b << ',' << rec.case3 << ',' << rec.max_case3_len << ','
      << fmt_ms(rec.runtime_ms) << '\n';
  return oss.str();
}

std::string aggregate_csv_header() {
  return "n,d,variant,trials,median_mu,q1,q3,whisker_lo,whisker_hi,outliers,"
         "pct_case1,pct_case2a,pct_case2b,pct_case3\n";
}

std::string aggregate_csv_row(const AggregateRow& row) {
  std::ostringstream oss;
  oss << row.n << ',' << row.d << ',' << variant_column(row.variant) << ','
      << row.trials << ',' << fmt_g(row.median_mu) << ',' << fmt_g(row.q1) << ','
      << fmt_g(row.q3) << ',' << fmt_g(row.whisker_lo) << ','
      << fmt_g(row.whisker_hi) << ',' << row.outliers << ','
      << fmt_g(row.pct_case1) << ',' << fmt_g(row.pct_case2a) << ','
      << fmt_g(row.pct_case2b) << ',' << fmt_g(row.pct_case3) << '\n';
  return oss.str();
}

std::vector<AggregateRow> read_aggregate_csv(const std::string& text) {
  std::istringstream iss(text);
  std::string line;
  if (!std::getline(iss, line)) throw std::runtime_error("empty aggregate CSV");
  std::vector<AggregateRow> rows;
  int lineno = 1;
  while (std::getline(iss, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 14)
      throw std::runtime_error("aggregate CSV line " + std::to_string(lineno) +
                               ": expected 14 fields, got " + std::to_string(fields.size()));
    AggregateRow row;
    try {
      row.n = std::stoi(fields[0]);
      row.d = std::stoi(fields[1]);
      row.variant = fields[2] == "minbasis" ? 5 : parse_variant(fields[2]);
      row.trials = std::stoi(fields[3]);
      row.median_mu = std::stod(fields[4]);
      row.q1 = std::stod(fields[5]);
      row.q3 = std::stod(fields[6]);
      row.whisker_lo = std::stod(fields[7]);
      row.whisker_hi = std::stod(fields[8]);
      row.outliers = std::stoi(fields[9]);
      row.pct_case1 = std::stod(fields[10]);
      row.pct_case2a = std::stod(fields[11]);
      row.pct_case2b = std::stod(fields[12]);
      row.pct_case3 = std::stod(fields[13]);
    } catch (const std::exception&) {
      throw std::runtime_error("aggregate CSV line " + std::to_string(lineno) + ": bad field");
    }
    rows.push_back(row);
  }
  return rows;
}

std::string process1_csv(const Process1Result& res) {
  std::ostringstream oss;
  oss << "iteration,m,k,max_load\n";
  for (const auto& s : res.trajectory)
    oss << s.iteration << ',' << s.m << ',' << s.k << ',' << s.max_load << '\n';
  return oss.str();
}

std::string process2_csv(const Process2Result& res) {
  std::ostringstream oss;
  oss << "epoch,m,k,max_load,bad_buckets\n";
  for (const auto& e : res.epochs)
    oss << e.epoch << ',' << e.m_start << ',' << e.k << ',' << e.max_load_end << ','
        << e.bad_buckets << '\n';
  return oss.str();
}

std::string variant_column(int variant) {
  if (variant == 5) return "minbasis";
  return variant_name(variant);
}

}  // namespace cyclebasis
