#pragma once

#include "kdebw/selector.hpp"

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>

namespace kdebw {

//! One selection run, serialized with exactly these fields.
struct ExperimentReport
{
  std::string experiment_id;
  std::string kernel;
  std::size_t np = 0;
  std::optional<std::uint64_t> seed;
  double selected_h = 0.0;
  std::optional<double> analytic_h;
  std::optional<double> relative_error;
  std::size_t iterations = 0;
  std::size_t backoffs = 0;
  bool converged = false;
  std::int64_t wall_time_ms = 0;
  std::string rng_name;

  //! Fills the selection fields from a trace and, when given, the analytic
  //! bandwidth and (selected - analytic) / analytic.
  void set_result(const BandwidthTrace& trace, std::optional<double> analytic);
};

nlohmann::ordered_json to_json(const ExperimentReport& report);
//! Throws InvalidArgument on missing or unknown keys.
ExperimentReport report_from_json(const nlohmann::json& doc);

nlohmann::ordered_json to_json(const BandwidthTrace& trace);

} // namespace kdebw
