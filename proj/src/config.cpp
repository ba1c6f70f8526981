#include "attsim/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace attsim {

namespace {
using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ValidationError(origin + ": " + what);
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& origin, const std::string& prefix) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      fail(origin, "unknown key '" + prefix + item.key() + "'");
    }
  }
}

double number_at(const json& obj, const std::string& key,
                 const std::string& origin, const std::string& prefix,
                 double fallback) {
  if (!obj.contains(key)) {
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_number()) {
    fail(origin, "'" + prefix + key + "' must be a number");
  }
  return v.get<double>();
}

Vec3 vec3_at(const json& obj, const std::string& key,
             const std::string& origin, const Vec3& fallback) {
  if (!obj.contains(key)) {
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_array() || v.size() != 3 ||
      !std::all_of(v.begin(), v.end(),
                   [](const json& x) { return x.is_number(); })) {
    fail(origin, "'" + key + "' must be an array of 3 numbers");
  }
  return Vec3(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
}

Mat3 mat3_at(const json& v, const std::string& origin) {
  if (!v.is_array() || v.size() != 3) {
    fail(origin, "'J_full' must be a 3x3 array of numbers");
  }
  Mat3 m;
  for (int r = 0; r < 3; ++r) {
    const json& rowj = v[static_cast<std::size_t>(r)];
    if (!rowj.is_array() || rowj.size() != 3 ||
        !std::all_of(rowj.begin(), rowj.end(),
                     [](const json& x) { return x.is_number(); })) {
      fail(origin, "'J_full' must be a 3x3 array of numbers");
    }
    for (int c = 0; c < 3; ++c) {
      m(r, c) = rowj[static_cast<std::size_t>(c)].get<double>();
    }
  }
  return m;
}
} // namespace

SimulationSetup parse_config_text(const std::string& json_text,
                                  const std::string& origin) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& ex) {
    fail(origin, std::string("JSON parse error: ") + ex.what());
  }
  if (!root.is_object()) {
    fail(origin, "top-level JSON value must be an object");
  }
  reject_unknown(root,
                 {"sigma0", "sigma_d", "J_diag", "J_full", "disturbance", "dt",
                  "duration", "ufsmc", "smc"},
                 origin, "");

  SimulationSetup setup = builtin_setup("A");
  Scenario& scn = setup.scenario;
  scn.name = "config";

  scn.sigma0 = vec3_at(root, "sigma0", origin, scn.sigma0);
  scn.sigma_d = vec3_at(root, "sigma_d", origin, scn.sigma_d);

  if (root.contains("J_diag") && root.contains("J_full")) {
    fail(origin, "'J_diag' and 'J_full' are mutually exclusive");
  }
  try {
    if (root.contains("J_diag")) {
      scn.J = InertiaMatrix::diagonal(
          vec3_at(root, "J_diag", origin, Vec3::Zero()));
    } else if (root.contains("J_full")) {
      scn.J = InertiaMatrix(mat3_at(root.at("J_full"), origin));
    }
  } catch (const ValidationError& ex) {
    fail(origin, ex.what());
  }

  if (root.contains("disturbance")) {
    const json& d = root.at("disturbance");
    if (!d.is_object()) {
      fail(origin, "'disturbance' must be an object");
    }
    reject_unknown(d, {"scale", "freq"}, origin, "disturbance.");
    scn.disturbance.scale =
        number_at(d, "scale", origin, "disturbance.", scn.disturbance.scale);
    scn.disturbance.frequency =
        number_at(d, "freq", origin, "disturbance.", scn.disturbance.frequency);
  }

  scn.step.dt = number_at(root, "dt", origin, "", scn.step.dt);
  scn.step.duration = number_at(root, "duration", origin, "", scn.step.duration);

  if (root.contains("ufsmc")) {
    const json& u = root.at("ufsmc");
    if (!u.is_object()) {
      fail(origin, "'ufsmc' must be an object");
    }
    reject_unknown(u, {"alpha", "gamma1", "eps1", "eps2"}, origin, "ufsmc.");
    setup.ufsmc.alpha = number_at(u, "alpha", origin, "ufsmc.", setup.ufsmc.alpha);
    setup.ufsmc.gamma1 =
        number_at(u, "gamma1", origin, "ufsmc.", setup.ufsmc.gamma1);
    setup.ufsmc.epsilon1 =
        number_at(u, "eps1", origin, "ufsmc.", setup.ufsmc.epsilon1);
    setup.ufsmc.epsilon2 =
        number_at(u, "eps2", origin, "ufsmc.", setup.ufsmc.epsilon2);
  }

  if (root.contains("smc")) {
    const json& s = root.at("smc");
    if (!s.is_object()) {
      fail(origin, "'smc' must be an object");
    }
    reject_unknown(s, {"k", "lambda", "eps"}, origin, "smc.");
    setup.smc.k = number_at(s, "k", origin, "smc.", setup.smc.k);
    setup.smc.lambda = number_at(s, "lambda", origin, "smc.", setup.smc.lambda);
    setup.smc.epsilon = number_at(s, "eps", origin, "smc.", setup.smc.epsilon);
  }

  try {
    scn.validate();
    setup.ufsmc.validate(scn.disturbance.bound());
    setup.smc.validate();
  } catch (const ValidationError& ex) {
    fail(origin, ex.what());
  }
  return setup;
}

SimulationSetup parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("error reading config file '" + path + "'");
  }
  return parse_config_text(buffer.str(), path);
}

} // namespace attsim
