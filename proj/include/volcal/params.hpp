#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "volcal/errors.hpp"

namespace volcal {

// Heston (1993) square-root stochastic volatility parameters.
struct HestonParams {
    double kappa = 1.0;  // mean-reversion rate, 1/year
    double theta = 0.04; // long-term variance
    double sigma = 0.3;  // vol of vol
    double rho = -0.5;   // spot/variance correlation
    double v0 = 0.04;    // initial variance

    bool feller_satisfied() const { return 2.0 * kappa * theta > sigma * sigma; }

    void validate() const {
        if (!(kappa > 0.0) || !std::isfinite(kappa))
            throw DomainError("HestonParams: kappa must be > 0");
        if (!(theta > 0.0) || !std::isfinite(theta))
            throw DomainError("HestonParams: theta must be > 0");
        if (!(sigma > 0.0) || !std::isfinite(sigma))
            throw DomainError("HestonParams: sigma must be > 0");
        if (!(rho > -1.0 && rho < 1.0))
            throw DomainError("HestonParams: rho must lie in (-1, 1)");
        if (!(v0 >= 0.0) || !std::isfinite(v0))
            throw DomainError("HestonParams: v0 must be >= 0");
    }
};

// Lognormal jump overlay (Bates 1996): intensity lambda, mean percentage
// jump size mu_j, std dev of ln(1+J) sigma_j.
struct JumpParams {
    double lambda = 0.0;
    double mu_j = 0.0;
    double sigma_j = 0.0;

    void validate() const {
        if (!(lambda >= 0.0) || !std::isfinite(lambda))
            throw DomainError("JumpParams: lambda must be >= 0");
        if (!(mu_j > -1.0) || !std::isfinite(mu_j))
            throw DomainError("JumpParams: mu_j must be > -1");
        if (!(sigma_j >= 0.0) || !std::isfinite(sigma_j))
            throw DomainError("JumpParams: sigma_j must be >= 0");
    }
};

// Variance-Gamma: Brownian motion with drift run on a gamma clock.
struct VGParams {
    double sigma = 0.2;  // Brownian volatility
    double nu = 0.2;     // variance rate of the gamma time change
    double drift = 0.0;  // Brownian drift (the VG "theta")

    // 1 - drift*nu - sigma^2*nu/2 must stay positive for the martingale
    // correction omega to be real.
    double omega_argument() const { return 1.0 - drift * nu - sigma * sigma * nu / 2.0; }
    double omega() const { return std::log(omega_argument()) / nu; }

    void validate() const {
        if (!(sigma > 0.0) || !std::isfinite(sigma))
            throw DomainError("VGParams: sigma must be > 0");
        if (!(nu > 0.0) || !std::isfinite(nu))
            throw DomainError("VGParams: nu must be > 0");
        if (!(omega_argument() > 0.0))
            throw DomainError("VGParams: 1 - drift*nu - sigma^2*nu/2 must be > 0");
    }
};

// Piecewise-constant parameter term structure: segment k applies on
// [t_k, t_{k+1}) with t_0 = 0; the last segment is open-ended.
template <class P>
struct ParamSchedule {
    std::vector<double> breakpoints; // strictly increasing, all > 0
    std::vector<P> segments;         // breakpoints.size() + 1 entries

    std::size_t size() const { return segments.size(); }

    const P& segment_at(double t) const {
        std::size_t k = 0;
        while (k < breakpoints.size() && t >= breakpoints[k]) ++k;
        return segments[k];
    }

    // Start time of segment k.
    double start_of(std::size_t k) const { return k == 0 ? 0.0 : breakpoints[k - 1]; }

    void validate() const {
        if (segments.empty())
            throw DomainError("ParamSchedule: needs at least one segment");
        if (segments.size() != breakpoints.size() + 1)
            throw DomainError("ParamSchedule: segments.size() must equal breakpoints.size() + 1");
        double prev = 0.0;
        for (double b : breakpoints) {
            if (!(b > prev) || !std::isfinite(b))
                throw DomainError("ParamSchedule: breakpoints must be strictly increasing and > 0");
            prev = b;
        }
        for (const P& s : segments) s.validate();
    }
};

inline ParamSchedule<HestonParams> single_segment(const HestonParams& p) { return {{}, {p}}; }
inline ParamSchedule<JumpParams> single_segment(const JumpParams& p) { return {{}, {p}}; }
inline ParamSchedule<VGParams> single_segment(const VGParams& p) { return {{}, {p}}; }

} // namespace volcal
