#pragma once

#include <complex>
#include <functional>

#include "volcal/market.hpp"
#include "volcal/params.hpp"

// Characteristic functions of the log-price for the supported models,
// time-independent and piecewise-constant-parameter variants. All complex
// square roots, logs and powers use the principal branch.

namespace volcal {

using Complex = std::complex<double>;

// Evaluates u -> phi_t(u) for a fixed (model, schedule, market, maturity).
using CharFn = std::function<Complex(Complex)>;

struct HestonDG {
    Complex d;  // principal root of (rho*sigma*u*i - kappa)^2 + sigma^2*(iu + u^2)
    Complex g2; // (kappa - rho*sigma*iu - d) / (kappa - rho*sigma*iu + d), |g2| <= 1 for real u
};

HestonDG heston_dg(const HestonParams& p, Complex u);

// Stable representation ("little Heston trap" form); bounded for all valid
// parameters and maturities.
Complex heston_cf_stable(const HestonParams& p, const MarketContext& ctx, double t, Complex u);

// Heston's original representation. Kept for cross-validation only: its
// complex log picks up branch-cut discontinuities for long maturities.
Complex heston_cf_original(const HestonParams& p, const MarketContext& ctx, double t, Complex u);

// Running Riccati accumulators for the piecewise-constant recursion.
// Both start at zero on the sub-interval adjacent to maturity.
struct HestonCfState {
    Complex c{0.0, 0.0};
    Complex d_acc{0.0, 0.0};
};

// Advances (C, D) across one sub-interval of length dt with constant
// parameters, taking the incoming state as initial conditions.
HestonCfState heston_segment_step(const HestonParams& p, double rate, double dt, Complex u,
                                  const HestonCfState& state);

// Piecewise-constant Heston cf: runs the segment recursion from the
// maturity-adjacent sub-interval backward to t = 0 and returns
// exp(C + D*v0 + iu*ln spot) with v0 taken from the earliest segment.
// A maturity strictly inside a segment truncates that segment.
Complex heston_cf_piecewise(const ParamSchedule<HestonParams>& sched, const MarketContext& ctx,
                            double t, Complex u);

// Compound-Poisson lognormal jump factor, including the -lambda*mu_j*t
// drift compensator.
Complex bates_jump_cf(const JumpParams& j, double t, Complex u);

Complex bates_cf(const HestonParams& p, const JumpParams& j, const MarketContext& ctx, double t,
                 Complex u);

// Product of per-segment jump factors; increments over disjoint
// sub-intervals are independent.
Complex bates_jump_cf_piecewise(const ParamSchedule<JumpParams>& sched, double t, Complex u);

// Diffusion and jump parts stay independent segment by segment; the two
// schedules must share breakpoints.
Complex bates_cf_piecewise(const ParamSchedule<HestonParams>& sched_h,
                           const ParamSchedule<JumpParams>& sched_j, const MarketContext& ctx,
                           double t, Complex u);

// Variance-Gamma cf with the martingale drift correction omega.
Complex vg_cf(const VGParams& p, const MarketContext& ctx, double t, Complex u);

// Piecewise VG: independent gamma-time increments, omega applied per
// segment so the martingale property holds on every sub-interval.
Complex vg_cf_piecewise(const ParamSchedule<VGParams>& sched, const MarketContext& ctx, double t,
                        Complex u);

} // namespace volcal
