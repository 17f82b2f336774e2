#include "nullshock/tolerances.hpp"

#include <cstdlib>
#include <string>

#include "nullshock/errors.hpp"

namespace nullshock {

double tolerance_scale() {
  static const double scale = [] {
    const char* env = std::getenv("NULLSHOCK_TOL_SCALE");
    if (env == nullptr || *env == '\0') return 1.0;
    try {
      size_t used = 0;
      const double v = std::stod(env, &used);
      if (used != std::string(env).size() || !(v > 0.0))
        throw ConfigError("NULLSHOCK_TOL_SCALE must be a positive real");
      return v;
    } catch (const ConfigError&) {
      throw;
    } catch (...) {
      throw ConfigError("NULLSHOCK_TOL_SCALE must be a positive real");
    }
  }();
  return scale;
}

double scaled_tol(double base) { return base * tolerance_scale(); }

}  // namespace nullshock
