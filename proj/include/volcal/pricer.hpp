#pragma once

#include <cstddef>
#include <vector>

#include "volcal/charfn.hpp"
#include "volcal/market.hpp"

// Plain-vanilla European pricing from a characteristic function: Carr-Madan
// FFT for the strike grid, plus a slow quadrature pricer kept as an
// independent reference.

namespace volcal {

enum class StrikeInterpolation { linear_log_strike };

struct PricerConfig {
    double alpha = 0.75;   // damping exponent
    double eta = 0.015;    // integration grid step
    std::size_t n = 65536; // FFT size, power of two
    StrikeInterpolation interpolation = StrikeInterpolation::linear_log_strike;

    void validate() const {
        if (!(alpha > 0.0)) throw DomainError("PricerConfig: alpha must be > 0");
        if (!(eta > 0.0)) throw DomainError("PricerConfig: eta must be > 0");
        if (n < 1024 || (n & (n - 1)) != 0)
            throw DomainError("PricerConfig: n must be a power of two >= 1024");
    }

    // FFT-conjugate log-strike spacing 2*pi/(N*eta).
    double log_strike_spacing() const { return 2.0 * 3.141592653589793 / (double(n) * eta); }
};

// Undiscounted-strike call prices C_T(k) on an equally spaced log-strike
// grid centered at ln(spot).
struct PriceGrid {
    std::vector<double> log_strikes;
    std::vector<double> calls;
    double maturity = 0.0;
    MarketContext context;
    std::size_t cleanup_count = 0;     // negative FFT outputs clamped to zero
    std::size_t cf_truncations = 0;    // grid nodes where the cf overflowed

    double min_log_strike() const { return log_strikes.front(); }
    double max_log_strike() const { return log_strikes.back(); }
};

// Fourier transform of the damped call price:
// exp(-r t) * cf(v - (alpha+1)i) / (alpha^2 + alpha - v^2 + i(2 alpha + 1)v).
Complex psi(const CharFn& cf, double v, double alpha, double rate, double t);

// Single size-N FFT of the damped transform, trapezoid half-weight on the
// first node; negative prices are clamped to zero and counted.
PriceGrid carr_madan_fft(const CharFn& cf, const PricerConfig& cfg, const MarketContext& ctx,
                         double t);

// Linear interpolation of the call price in log-strike.
double interpolate_price(const PriceGrid& grid, double strike);

double put_from_call(double call, double strike, const MarketContext& ctx, double t);

struct QuadratureProbabilities {
    double pi1 = 0.0;
    double pi2 = 0.0;
    double achieved_tolerance = 0.0;
};

// In-the-money probabilities under the stock and money-market numeraires,
// by adaptive Gauss-Kronrod quadrature of the two semi-infinite integrals.
// Panels stop where the integrand magnitude drops below 1e-15, capped at
// u = 5000.
QuadratureProbabilities quadrature_probabilities(const CharFn& cf, double strike,
                                                 const MarketContext& ctx, double t);

// Reference pricer: spot*Pi1 - K*exp(-r t)*Pi2.
double call_price_quadrature(const CharFn& cf, double strike, const MarketContext& ctx, double t);

} // namespace volcal
