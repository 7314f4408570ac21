#include "kdebw/report.hpp"

#include "kdebw/errors.hpp"

#include <set>

namespace kdebw {

namespace {

const std::set<std::string> report_keys = { "experiment_id", "kernel",         "Np",
                                            "seed",          "selected_h",     "analytic_h",
                                            "relative_error", "iterations",    "backoffs",
                                            "converged",     "wall_time_ms",   "rng_name" };

template <class T>
nlohmann::ordered_json optional_value(const std::optional<T>& v)
{
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

} // namespace

void ExperimentReport::set_result(const BandwidthTrace& trace, std::optional<double> analytic)
{
  selected_h = trace.final_h;
  iterations = trace.update_steps();
  backoffs = trace.backoffs();
  converged = trace.converged;
  analytic_h = analytic;
  if (analytic)
    relative_error = (selected_h - *analytic) / *analytic;
  else
    relative_error.reset();
}

nlohmann::ordered_json to_json(const ExperimentReport& r)
{
  nlohmann::ordered_json j;
  j["experiment_id"] = r.experiment_id;
  j["kernel"] = r.kernel;
  j["Np"] = r.np;
  j["seed"] = optional_value(r.seed);
  j["selected_h"] = r.selected_h;
  j["analytic_h"] = optional_value(r.analytic_h);
  j["relative_error"] = optional_value(r.relative_error);
  j["iterations"] = r.iterations;
  j["backoffs"] = r.backoffs;
  j["converged"] = r.converged;
  j["wall_time_ms"] = r.wall_time_ms;
  j["rng_name"] = r.rng_name;
  return j;
}

ExperimentReport report_from_json(const nlohmann::json& doc)
{
  if (!doc.is_object())
    throw InvalidArgument("report must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!report_keys.contains(key))
      throw InvalidArgument("unknown report field '" + key + "'");
  }
  for (const auto& key : report_keys) {
    if (!doc.contains(key))
      throw InvalidArgument("report field '" + key + "' is missing");
  }
  ExperimentReport r;
  r.experiment_id = doc.at("experiment_id").get<std::string>();
  r.kernel = doc.at("kernel").get<std::string>();
  r.np = doc.at("Np").get<std::size_t>();
  if (!doc.at("seed").is_null())
    r.seed = doc.at("seed").get<std::uint64_t>();
  r.selected_h = doc.at("selected_h").get<double>();
  if (!doc.at("analytic_h").is_null())
    r.analytic_h = doc.at("analytic_h").get<double>();
  if (!doc.at("relative_error").is_null())
    r.relative_error = doc.at("relative_error").get<double>();
  r.iterations = doc.at("iterations").get<std::size_t>();
  r.backoffs = doc.at("backoffs").get<std::size_t>();
  r.converged = doc.at("converged").get<bool>();
  r.wall_time_ms = doc.at("wall_time_ms").get<std::int64_t>();
  r.rng_name = doc.at("rng_name").get<std::string>();
  return r;
}

nlohmann::ordered_json to_json(const BandwidthTrace& trace)
{
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& it : trace.iterations) {
    steps.push_back({ { "h", it.h },
                      { "raw_roughness", it.raw_roughness },
                      { "corrected_roughness", it.corrected_roughness },
                      { "backoff_applied", it.backoff_applied },
                      { "next_h", it.next_h } });
  }
  nlohmann::ordered_json j;
  j["converged"] = trace.converged;
  j["final_h"] = trace.final_h;
  j["iterations"] = std::move(steps);
  return j;
}

} // namespace kdebw
