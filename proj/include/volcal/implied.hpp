#pragma once

#include "volcal/market.hpp"

// Black-Scholes pricing, vega, delta, bisection implied volatility and the
// FX delta-to-strike transform.

namespace volcal {

enum class OptionSide { call, put };

enum class QuoteType { delta_call, strike, atm };

// One surface point: moneyness is a strike for QuoteType::strike, a call
// delta in (0,1) for QuoteType::delta_call, and ignored for QuoteType::atm
// (the strike is the forward).
struct Quote {
    double maturity = 0.0;
    QuoteType type = QuoteType::strike;
    double moneyness = 0.0;
    double vol = 0.0;

    void validate() const;
};

double norm_cdf(double x);
double norm_pdf(double x);

// Inverse standard normal CDF: rational approximation polished with one
// Newton step; absolute error well below 1e-12 on (0, 1).
double norm_inv(double p);

double bs_price(const MarketContext& ctx, double strike, double t, double vol, OptionSide side);
double bs_vega(const MarketContext& ctx, double strike, double t, double vol);

// Spot delta of a call, N(d1).
double bs_delta(const MarketContext& ctx, double strike, double t, double vol);

// Inverts bs_price by bisection on [1e-6, 5], expanded once to 10 if the
// price is not bracketed; stops when the vol bracket is below 1e-8.
// Throws DomainError when the price violates no-arbitrage bounds.
double implied_vol_bisection(double price, const MarketContext& ctx, double strike, double t,
                             OptionSide side);

// K = S / exp(Ninv(delta)*vol*sqrt(t) - (r + vol^2/2)*t); inverts the spot
// call delta at the quoted vol.
double delta_to_strike(double delta, double vol, const MarketContext& ctx, double t);

// Strike substituted for at-the-money quotes: the forward S*exp(r*t).
double atm_forward_strike(const MarketContext& ctx, double t);

} // namespace volcal
