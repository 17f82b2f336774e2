#pragma once

namespace nullshock {

// Global tolerance scale, read once from NULLSHOCK_TOL_SCALE (default 1.0).
// Verification thresholds multiply by this so the whole suite can be
// loosened uniformly on exotic hardware without touching pinned values.
double tolerance_scale();

// base * tolerance_scale()
double scaled_tol(double base);

}  // namespace nullshock
