#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ldpsim/harness/experiment.hpp"

namespace ldpsim {

// Fixed CSV schema: the config echo followed by the result fields. Wall
// time is only written when asked for, so default rows are reproducible
// from (config, seed).
std::vector<std::string> csv_columns(bool include_timing = false);
void write_csv_header(std::ostream& out, bool include_timing = false);
void write_csv_row(std::ostream& out, const ExperimentConfig& config,
                   const ExperimentResult& result, bool include_timing = false);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                     SweepAxis axis, bool include_timing = false);

// Same fields as the CSV, as one JSON object {"config": .., "result": ..}.
std::string result_json(const ExperimentConfig& config,
                        const ExperimentResult& result,
                        bool include_timing = true);
std::string sweep_json(const std::vector<SweepRow>& rows, SweepAxis axis,
                       bool include_timing = true);

// Loads config keys (problem, solver, B, L, k, l, epsilon, group, threshold,
// trials, seed, gamma, eta) from a JSON object on top of `base`. Throws
// FormatError.
ExperimentConfig config_from_json(const std::string& text,
                                  ExperimentConfig base = {});

}  // namespace ldpsim
