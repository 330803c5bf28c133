#include "svrpll/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "svrpll/errors.hpp"

namespace svrpll {
namespace {

using nlohmann::json;

json points_to_json(const std::vector<Point2>& pts) {
  json arr = json::array();
  for (const Point2& p : pts) arr.push_back({p.x, p.y});
  return arr;
}

std::vector<Point2> points_from_json(const json& arr, const char* field) {
  if (!arr.is_array()) {
    throw IoError(std::string("field '") + field + "' must be an array");
  }
  std::vector<Point2> out;
  for (const json& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
        !p[1].is_number()) {
      throw IoError(std::string("field '") + field +
                    "' must hold [x, y] number pairs");
    }
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw IoError(std::string("missing field '") + name + "'");
  }
  return obj.at(name);
}

template <typename T>
T get(const json& obj, const char* name) {
  try {
    return field(obj, name).get<T>();
  } catch (const json::type_error& e) {
    throw IoError(std::string("field '") + name + "' has wrong type: " +
                  e.what());
  }
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  json j;
  j["targets"] = points_to_json(inst.targets);
  j["sites"] = points_to_json(inst.candidate_sites);
  j["sensing_range"] = inst.sensing_range;
  j["landmark_cost"] = inst.landmark_cost;
  j["seed"] = inst.seed;
  return j.dump() + "\n";
}

Instance instance_from_json(const std::string& text) {
  const json j = parse(text);
  Instance inst;
  inst.targets = points_from_json(field(j, "targets"), "targets");
  inst.candidate_sites = points_from_json(field(j, "sites"), "sites");
  inst.sensing_range = get<double>(j, "sensing_range");
  inst.landmark_cost = get<std::vector<double>>(j, "landmark_cost");
  inst.seed = get<std::int64_t>(j, "seed");
  try {
    check_instance(inst);
  } catch (const ParameterError& e) {
    throw IoError(std::string("invalid instance: ") + e.what());
  }
  return inst;
}

std::string solution_to_json(const Solution& sol) {
  json j;
  j["order"] = sol.visit_order;
  json edges = json::array();
  for (const EdgeId& e : sol.tour_edges) edges.push_back({e.i, e.j});
  j["edges"] = edges;
  j["sites"] = sol.placed_sites;
  j["travel_cost"] = sol.travel_cost;
  j["landmark_cost"] = sol.landmark_cost;
  j["objective"] = sol.objective;
  return j.dump() + "\n";
}

Solution solution_from_json(const std::string& text) {
  const json j = parse(text);
  Solution sol;
  sol.visit_order = get<std::vector<int>>(j, "order");
  for (const auto& pair : get<std::vector<std::vector<int>>>(j, "edges")) {
    if (pair.size() != 2) throw IoError("edges must be [i, j] pairs");
    sol.tour_edges.push_back(
        {std::min(pair[0], pair[1]), std::max(pair[0], pair[1])});
  }
  sol.placed_sites = get<std::vector<int>>(j, "sites");
  sol.travel_cost = get<double>(j, "travel_cost");
  sol.landmark_cost = get<double>(j, "landmark_cost");
  sol.objective = get<double>(j, "objective");
  return sol;
}

std::vector<double> costs_from_json(const std::string& text) {
  const json j = parse(text);
  try {
    return j.get<std::vector<double>>();
  } catch (const json::type_error&) {
    throw IoError("landmark cost file must be a JSON array of numbers");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

void write_trace_csv(std::ostream& os, const Trace& trace) {
  os << kTraceCsvHeader << '\n';
  os << std::setprecision(10);
  for (const TraceStep& s : trace.steps) {
    os << s.step << ',' << s.t << ',' << s.truth.x << ',' << s.truth.y << ','
       << s.truth.psi << ',' << s.estimate.x << ',' << s.estimate.y << ','
       << s.estimate.psi << ',' << s.cov_diag[0] << ',' << s.cov_diag[1]
       << ',' << s.cov_diag[2] << ',' << s.n_visible << ',' << s.waypoint
       << ',' << s.omega << '\n';
  }
}

std::string summary_json(const Trace& trace, const ErrorReport& report) {
  json j;
  j["steps"] = trace.steps.size();
  j["completed"] = trace.completed;
  j["diverged"] = trace.diverged;
  j["waypoints"] = trace.waypoints.size();
  j["waypoints_reached"] = trace.waypoints_reached;
  j["landmarks"] = trace.landmarks.size();
  j["skipped_measurements"] = trace.skipped_measurements;
  j["rmse"] = {{"x", report.rmse[0]}, {"y", report.rmse[1]},
               {"psi", report.rmse[2]}};
  j["position_rmse"] = report.position_rmse;
  j["containment_3sigma"] = {{"x", report.containment[0]},
                             {"y", report.containment[1]},
                             {"psi", report.containment[2]}};
  j["two_visible_fraction"] = report.two_visible_fraction;
  return j.dump(2) + "\n";
}

}  // namespace svrpll
