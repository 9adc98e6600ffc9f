#include "ldpsim/harness/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "ldpsim/core/errors.hpp"

namespace ldpsim {
namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> row_values(const ExperimentConfig& c,
                                    const ExperimentResult& r,
                                    bool include_timing) {
  std::vector<std::string> v = {
      to_string(c.problem),
      to_string(c.solver),
      std::to_string(c.branching),
      std::to_string(c.num_layers),
      std::to_string(c.k),
      std::to_string(c.l),
      num(c.epsilon),
      std::to_string(c.group),
      num(c.effective_threshold()),
      std::to_string(c.trials),
      std::to_string(c.seed),
      std::to_string(r.success_count),
      num(r.success_rate),
      num(r.ci_lo),
      num(r.ci_hi),
      num(r.mean_sample_complexity),
      num(r.mean_round_complexity),
      num(r.max_user_audit),
      std::to_string(r.decode_failures),
      std::to_string(r.wrong_answers),
      std::to_string(r.engine_errors),
  };
  if (include_timing) v.push_back(num(r.wall_time_seconds));
  return v;
}

json config_object(const ExperimentConfig& c) {
  return json{{"problem", to_string(c.problem)},
              {"solver", to_string(c.solver)},
              {"B", c.branching},
              {"L", c.num_layers},
              {"k", c.k},
              {"l", c.l},
              {"epsilon", c.epsilon},
              {"group", c.group},
              {"threshold", c.effective_threshold()},
              {"trials", c.trials},
              {"seed", c.seed},
              {"gamma", c.gamma_target},
              {"eta", c.eta}};
}

json result_object(const ExperimentResult& r, bool include_timing) {
  json j{{"success_count", r.success_count},
         {"trials", r.trials},
         {"success_rate", r.success_rate},
         {"ci_lo", r.ci_lo},
         {"ci_hi", r.ci_hi},
         {"mean_sample_complexity", r.mean_sample_complexity},
         {"mean_round_complexity", r.mean_round_complexity},
         {"max_user_audit", r.max_user_audit},
         {"decode_failures", r.decode_failures},
         {"wrong_answers", r.wrong_answers},
         {"engine_errors", r.engine_errors}};
  if (!r.first_error.empty()) j["first_error"] = r.first_error;
  if (include_timing) j["wall_time_s"] = r.wall_time_seconds;
  return j;
}

void write_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

}  // namespace

std::vector<std::string> csv_columns(bool include_timing) {
  std::vector<std::string> cols = {
      "problem", "solver", "B", "L", "k", "l", "epsilon", "group",
      "threshold", "trials", "seed", "success_count", "success_rate",
      "ci_lo", "ci_hi", "mean_sample_complexity", "mean_round_complexity",
      "max_user_audit", "decode_failures", "wrong_answers", "engine_errors"};
  if (include_timing) cols.push_back("wall_time_s");
  return cols;
}

void write_csv_header(std::ostream& out, bool include_timing) {
  write_line(out, csv_columns(include_timing));
}

void write_csv_row(std::ostream& out, const ExperimentConfig& config,
                   const ExperimentResult& result, bool include_timing) {
  write_line(out, row_values(config, result, include_timing));
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                     SweepAxis axis, bool include_timing) {
  auto cols = csv_columns(include_timing);
  cols.insert(cols.begin(), {"axis", "value"});
  cols.push_back("error");
  write_line(out, cols);
  for (const SweepRow& row : rows) {
    auto cells = row_values(row.config, row.result, include_timing);
    cells.insert(cells.begin(), {to_string(axis), num(row.value)});
    std::string err = row.error;
    for (char& ch : err) {
      if (ch == ',' || ch == '\n') ch = ' ';
    }
    cells.push_back(err);
    write_line(out, cells);
  }
}

std::string result_json(const ExperimentConfig& config,
                        const ExperimentResult& result, bool include_timing) {
  return json{{"config", config_object(config)},
              {"result", result_object(result, include_timing)}}
      .dump(2);
}

std::string sweep_json(const std::vector<SweepRow>& rows, SweepAxis axis,
                       bool include_timing) {
  json arr = json::array();
  for (const SweepRow& row : rows) {
    json j{{"axis", to_string(axis)},
           {"value", row.value},
           {"config", config_object(row.config)}};
    if (row.error.empty()) {
      j["result"] = result_object(row.result, include_timing);
    } else {
      j["error"] = row.error;
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

ExperimentConfig config_from_json(const std::string& text,
                                  ExperimentConfig base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("config: expected a JSON object");
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& key = it.key();
      const json& v = it.value();
      if (key == "problem") base.problem = parse_problem(v.get<std::string>());
      else if (key == "solver") base.solver = parse_solver(v.get<std::string>());
      else if (key == "B") base.branching = v.get<std::uint32_t>();
      else if (key == "L") base.num_layers = v.get<std::uint32_t>();
      else if (key == "k") base.k = v.get<std::uint32_t>();
      else if (key == "l") base.l = v.get<std::uint32_t>();
      else if (key == "epsilon") base.epsilon = v.get<double>();
      else if (key == "group" || key == "n" || key == "m") base.group = v.get<std::uint32_t>();
      else if (key == "threshold") base.threshold = v.get<double>();
      else if (key == "trials") base.trials = v.get<std::uint32_t>();
      else if (key == "seed") base.seed = v.get<std::uint64_t>();
      else if (key == "gamma") base.gamma_target = v.get<double>();
      else if (key == "eta") base.eta = v.get<double>();
      else throw FormatError("config: unknown key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  return base;
}

}  // namespace ldpsim
