#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclebasis/ballsbins.hpp"
#include "cyclebasis/engine.hpp"
#include "cyclebasis/experiments.hpp"
#include "cyclebasis/gf2.hpp"
#include "cyclebasis/multigraph.hpp"

namespace cyclebasis {

// Pretty-printed JSON for a produced basis: header fields, the cycles as
// sorted edge-id arrays in emission order, and the run statistics. Contains
// no wall-clock data, so equal inputs give byte-equal output.
std::string basis_to_json(const MultiGraph& g, const CycleBasis& basis,
                          const RunStats& stats, const std::string& method,
                          std::uint64_t seed);

// JSON verification report for a (graph, cycle list) pair.
std::string report_to_json(const MultiGraph& g, const std::vector<Cycle>& cycles);

// Cycles from the "cycles" array of a basis JSON document.
std::vector<Cycle> cycles_from_json(const std::string& text);

std::string raw_csv_header();
std::string raw_csv_row(const TrialRecord& rec);
std::string aggregate_csv_header();
std::string aggregate_csv_row(const AggregateRow& row);
// Aggregate rows parsed back from CSV text (used by the fit subcommand).
std::vector<AggregateRow> read_aggregate_csv(const std::string& text);

std::string process1_csv(const Process1Result& res);
std::string process2_csv(const Process2Result& res);

// Stable name for the variant column: v0..v4, 5 = "minbasis".
std::string variant_column(int variant);

}  // namespace cyclebasis
