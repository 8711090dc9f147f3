#include "swarmplan/environment.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "swarmplan/errors.hpp"

namespace swarmplan {

using nlohmann::json;

namespace {

const char* const kScenarioKeys[] = {"bounds", "obstacles", "uavs", "tasks", "r_safe",
                                     "cruise_speed", "weights", "energy_coeffs"};

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) { known = true; break; }
        if (!known) throw ParseError(where + ": unknown key \"" + it.key() + "\"");
    }
}

Vec3 parse_vec3(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number())
        throw ParseError(field + ": expected [x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json vec3_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

void require_finite(const Vec3& v, const std::string& field) {
    if (!v.finite()) throw ValidationError(field + ": must be finite");
}

} // namespace

bool inside_bounds(const Vec3& p, const WorldBounds& b) {
    return p.x >= b.min_corner.x && p.x <= b.max_corner.x &&
           p.y >= b.min_corner.y && p.y <= b.max_corner.y &&
           p.z >= b.min_corner.z && p.z <= b.max_corner.z;
}

double clearance(const Vec3& point, const Scenario& scenario) {
    double best = std::numeric_limits<double>::infinity();
    for (const Obstacle& o : scenario.obstacles)
        best = std::min(best, distance(point, o.center) - o.radius);
    return best;
}

void Scenario::validate() const {
    if (!bounds.min_corner.finite() || !bounds.max_corner.finite())
        throw ValidationError("bounds: must be finite");
    if (!(bounds.min_corner.x < bounds.max_corner.x &&
          bounds.min_corner.y < bounds.max_corner.y &&
          bounds.min_corner.z < bounds.max_corner.z))
        throw ValidationError("bounds: min must be strictly below max in every component");
    if (!(r_safe > 0.0) || !std::isfinite(r_safe))
        throw ValidationError("r_safe: must be > 0");
    if (!(cruise_speed > 0.0) || !std::isfinite(cruise_speed))
        throw ValidationError("cruise_speed: must be > 0");
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        const std::string field = "obstacles[" + std::to_string(i) + "]";
        require_finite(obstacles[i].center, field + ".center");
        if (!(obstacles[i].radius > 0.0) || !std::isfinite(obstacles[i].radius))
            throw ValidationError(field + ".radius: must be > 0");
    }
    if (uav_starts.empty()) throw ValidationError("uavs: need at least one UAV");
    if (tasks.empty()) throw ValidationError("tasks: need at least one task");
    if (energy_budgets.size() != uav_starts.size())
        throw ValidationError("uavs: energy budget count must match UAV count");
    double weight_sum = 0.0;
    for (std::size_t i = 0; i < trajectory_weights.size(); ++i) {
        if (!(trajectory_weights[i] >= 0.0) || !std::isfinite(trajectory_weights[i]))
            throw ValidationError("weights.trajectory[" + std::to_string(i) + "]: must be >= 0");
        weight_sum += trajectory_weights[i];
    }
    if (weight_sum <= 0.0)
        throw ValidationError("weights.trajectory: at least one weight must be > 0");
    for (std::size_t i = 0; i < allocation_weights.size(); ++i)
        if (!(allocation_weights[i] >= 0.0) || !std::isfinite(allocation_weights[i]))
            throw ValidationError("weights.allocation[" + std::to_string(i) + "]: must be >= 0");
    if (!(energy_alpha >= 0.0) || !(energy_beta >= 0.0))
        throw ValidationError("energy_coeffs: alpha and beta must be >= 0");
    for (std::size_t i = 0; i < uav_starts.size(); ++i) {
        const std::string field = "uavs[" + std::to_string(i) + "].start";
        require_finite(uav_starts[i], field);
        if (!inside_bounds(uav_starts[i], bounds))
            throw ValidationError(field + ": outside world bounds");
        if (clearance(uav_starts[i], *this) < r_safe)
            throw ValidationError(field + ": inside an inflated obstacle (clearance < r_safe)");
        if (std::isnan(energy_budgets[i]) || energy_budgets[i] <= 0.0)
            throw ValidationError("uavs[" + std::to_string(i) + "].energy_budget: must be > 0");
    }
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const std::string field = "tasks[" + std::to_string(i) + "]";
        require_finite(tasks[i], field);
        if (!inside_bounds(tasks[i], bounds))
            throw ValidationError(field + ": outside world bounds");
        if (clearance(tasks[i], *this) < r_safe)
            throw ValidationError(field + ": inside an inflated obstacle (clearance < r_safe)");
    }
}

Scenario load_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("scenario: top level must be an object");
    reject_unknown_keys(doc, {kScenarioKeys[0], kScenarioKeys[1], kScenarioKeys[2], kScenarioKeys[3],
                              kScenarioKeys[4], kScenarioKeys[5], kScenarioKeys[6], kScenarioKeys[7]},
                        "scenario");

    Scenario s;
    if (!doc.contains("bounds")) throw ParseError("bounds: required");
    reject_unknown_keys(doc["bounds"], {"min", "max"}, "bounds");
    if (!doc["bounds"].contains("min") || !doc["bounds"].contains("max"))
        throw ParseError("bounds: needs min and max");
    s.bounds.min_corner = parse_vec3(doc["bounds"]["min"], "bounds.min");
    s.bounds.max_corner = parse_vec3(doc["bounds"]["max"], "bounds.max");

    if (doc.contains("obstacles")) {
        if (!doc["obstacles"].is_array()) throw ParseError("obstacles: expected an array");
        for (std::size_t i = 0; i < doc["obstacles"].size(); ++i) {
            const json& jo = doc["obstacles"][i];
            const std::string field = "obstacles[" + std::to_string(i) + "]";
            reject_unknown_keys(jo, {"center", "radius"}, field);
            if (!jo.contains("center") || !jo.contains("radius"))
                throw ParseError(field + ": needs center and radius");
            Obstacle o;
            o.center = parse_vec3(jo["center"], field + ".center");
            if (!jo["radius"].is_number()) throw ParseError(field + ".radius: expected a number");
            o.radius = jo["radius"].get<double>();
            s.obstacles.push_back(o);
        }
    }

    if (!doc.contains("uavs")) throw ParseError("uavs: required");
    if (!doc["uavs"].is_array()) throw ParseError("uavs: expected an array");
    for (std::size_t i = 0; i < doc["uavs"].size(); ++i) {
        const json& ju = doc["uavs"][i];
        const std::string field = "uavs[" + std::to_string(i) + "]";
        reject_unknown_keys(ju, {"start", "energy_budget"}, field);
        if (!ju.contains("start")) throw ParseError(field + ": needs start");
        s.uav_starts.push_back(parse_vec3(ju["start"], field + ".start"));
        double budget = std::numeric_limits<double>::infinity();
        if (ju.contains("energy_budget")) {
            if (!ju["energy_budget"].is_number()) throw ParseError(field + ".energy_budget: expected a number");
            budget = ju["energy_budget"].get<double>();
        }
        s.energy_budgets.push_back(budget);
    }

    if (!doc.contains("tasks")) throw ParseError("tasks: required");
    if (!doc["tasks"].is_array()) throw ParseError("tasks: expected an array");
    for (std::size_t i = 0; i < doc["tasks"].size(); ++i)
        s.tasks.push_back(parse_vec3(doc["tasks"][i], "tasks[" + std::to_string(i) + "]"));

    if (doc.contains("r_safe")) {
        if (!doc["r_safe"].is_number()) throw ParseError("r_safe: expected a number");
        s.r_safe = doc["r_safe"].get<double>();
    }
    if (doc.contains("cruise_speed")) {
        if (!doc["cruise_speed"].is_number()) throw ParseError("cruise_speed: expected a number");
        s.cruise_speed = doc["cruise_speed"].get<double>();
    }
    if (doc.contains("weights")) {
        const json& jw = doc["weights"];
        reject_unknown_keys(jw, {"trajectory", "allocation"}, "weights");
        if (jw.contains("trajectory")) {
            if (!jw["trajectory"].is_array() || jw["trajectory"].size() != 5)
                throw ParseError("weights.trajectory: expected 5 numbers");
            for (std::size_t i = 0; i < 5; ++i) s.trajectory_weights[i] = jw["trajectory"][i].get<double>();
        }
        if (jw.contains("allocation")) {
            if (!jw["allocation"].is_array() || jw["allocation"].size() != 3)
                throw ParseError("weights.allocation: expected 3 numbers");
            for (std::size_t i = 0; i < 3; ++i) s.allocation_weights[i] = jw["allocation"][i].get<double>();
        }
    }
    if (doc.contains("energy_coeffs")) {
        const json& je = doc["energy_coeffs"];
        reject_unknown_keys(je, {"alpha", "beta"}, "energy_coeffs");
        if (je.contains("alpha")) s.energy_alpha = je["alpha"].get<double>();
        if (je.contains("beta")) s.energy_beta = je["beta"].get<double>();
    }

    s.validate();
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scenario(buf.str());
}

std::string save_scenario(const Scenario& s) {
    json doc;
    doc["bounds"] = {{"min", vec3_to_json(s.bounds.min_corner)}, {"max", vec3_to_json(s.bounds.max_corner)}};
    doc["obstacles"] = json::array();
    for (const Obstacle& o : s.obstacles)
        doc["obstacles"].push_back({{"center", vec3_to_json(o.center)}, {"radius", o.radius}});
    doc["uavs"] = json::array();
    for (std::size_t i = 0; i < s.uav_starts.size(); ++i) {
        json ju = {{"start", vec3_to_json(s.uav_starts[i])}};
        if (std::isfinite(s.energy_budgets[i])) ju["energy_budget"] = s.energy_budgets[i];
        doc["uavs"].push_back(ju);
    }
    doc["tasks"] = json::array();
    for (const Vec3& t : s.tasks) doc["tasks"].push_back(vec3_to_json(t));
    doc["r_safe"] = s.r_safe;
    doc["cruise_speed"] = s.cruise_speed;
    doc["weights"] = {{"trajectory", s.trajectory_weights}, {"allocation", s.allocation_weights}};
    doc["energy_coeffs"] = {{"alpha", s.energy_alpha}, {"beta", s.energy_beta}};
    return doc.dump(2) + "\n";
}

std::string scenario_schema_help() {
    return R"(Scenario file schema (JSON, strict: unknown keys are rejected):
{
  "bounds":        {"min": [x,y,z], "max": [x,y,z]},   required; meters
  "obstacles":     [{"center": [x,y,z], "radius": r}], optional; default []
  "uavs":          [{"start": [x,y,z],
                     "energy_budget": E}],             required; budget optional
                                                       (default: unconstrained)
  "tasks":         [[x,y,z], ...],                     required
  "r_safe":        r,                                  optional; default 1.0 m
  "cruise_speed":  v,                                  optional; default 5.0 m/s
  "weights":       {"trajectory": [w1,w2,w3,w4,w5],    optional; defaults
                    "allocation": [w1,w2,w3]},         [1,10,1,0.01,1] / [1,1,1]
  "energy_coeffs": {"alpha": a, "beta": b}             optional; default {1, 0.1}
}
All lengths in meters, speeds in m/s. Starts and tasks must lie inside the
bounds with clearance >= r_safe from every obstacle.)";
}

} // namespace swarmplan
