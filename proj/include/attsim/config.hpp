/// config.hpp — JSON run configuration.
///
/// Schema (all keys optional; absent keys take the built-in Scenario A
/// defaults):
///   {
///     "sigma0":      [x, y, z],
///     "sigma_d":     [x, y, z],
///     "J_diag":      [Jx, Jy, Jz],          // or:
///     "J_full":      [[...],[...],[...]],   // 3x3, symmetric positive definite
///     "disturbance": { "scale": s, "freq": f },
///     "dt":          1e-3,
///     "duration":    20.0,
///     "ufsmc":       { "alpha": a, "gamma1": g, "eps1": e1, "eps2": e2 },
///     "smc":         { "k": k, "lambda": l, "eps": e }
///   }
/// Unknown keys are rejected. Validation failures throw ValidationError with
/// the offending key path in the message.
#pragma once

#include <string>

#include "attsim/simharness.hpp"

namespace attsim {

/// Parses and fully validates a configuration file. Missing keys default to
/// the built-in Scenario A setup. Throws IoError when the file cannot be
/// read and ValidationError on schema or invariant violations.
SimulationSetup parse_config(const std::string& path);

/// Same, from an in-memory JSON text (used by tests; `origin` names the
/// source in error messages).
SimulationSetup parse_config_text(const std::string& json_text,
                                  const std::string& origin = "config");

} // namespace attsim
