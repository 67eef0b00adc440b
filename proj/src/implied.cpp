#include "volcal/implied.hpp"

#include <algorithm>
#include <cmath>

#include "volcal/errors.hpp"

namespace volcal {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2Pi = 0.3989422804014327;

constexpr double kVolBracketLo = 1e-6;
constexpr double kVolBracketHi = 5.0;
constexpr double kVolBracketHiExpanded = 10.0;
constexpr double kVolTolerance = 1e-8;
constexpr int kMaxBisections = 200;

} // namespace

void Quote::validate() const {
    if (!(maturity > 0.0)) throw DomainError("Quote: maturity must be > 0");
    if (!(vol > 0.0)) throw DomainError("Quote: vol must be > 0");
    if (type == QuoteType::delta_call && !(moneyness > 0.0 && moneyness < 1.0))
        throw DomainError("Quote: delta must lie strictly in (0, 1)");
    if (type == QuoteType::strike && !(moneyness > 0.0))
        throw DomainError("Quote: strike must be > 0");
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double norm_inv(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("norm_inv: p must lie in (0, 1)");

    // Acklam's piecewise rational approximation.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // One Newton step against the full-precision CDF.
    const double err = norm_cdf(x) - p;
    x -= err / norm_pdf(x);
    return x;
}

namespace {

struct D1D2 {
    double d1, d2;
};

D1D2 bs_d(const MarketContext& ctx, double strike, double t, double vol) {
    const double sq = vol * std::sqrt(t);
    const double d1 = (std::log(ctx.spot / strike) + (ctx.rate + vol * vol / 2.0) * t) / sq;
    return {d1, d1 - sq};
}

void check_bs_inputs(const MarketContext& ctx, double strike, double t) {
    ctx.validate();
    if (!(strike > 0.0)) throw DomainError("Black-Scholes: strike must be > 0");
    if (!(t > 0.0)) throw DomainError("Black-Scholes: t must be > 0");
}

} // namespace

double bs_price(const MarketContext& ctx, double strike, double t, double vol, OptionSide side) {
    check_bs_inputs(ctx, strike, t);
    if (!(vol >= 0.0)) throw DomainError("Black-Scholes: vol must be >= 0");

    const double df = ctx.discount(t);
    if (vol * std::sqrt(t) < 1e-14) {
        const double intr = ctx.spot - strike * df;
        return side == OptionSide::call ? std::max(intr, 0.0) : std::max(-intr, 0.0);
    }
    const auto [d1, d2] = bs_d(ctx, strike, t, vol);
    if (side == OptionSide::call)
        return ctx.spot * norm_cdf(d1) - strike * df * norm_cdf(d2);
    return strike * df * norm_cdf(-d2) - ctx.spot * norm_cdf(-d1);
}

double bs_vega(const MarketContext& ctx, double strike, double t, double vol) {
    check_bs_inputs(ctx, strike, t);
    if (!(vol > 0.0)) throw DomainError("bs_vega: vol must be > 0");
    const auto [d1, d2] = bs_d(ctx, strike, t, vol);
    (void)d2;
    return ctx.spot * norm_pdf(d1) * std::sqrt(t);
}

double bs_delta(const MarketContext& ctx, double strike, double t, double vol) {
    check_bs_inputs(ctx, strike, t);
    if (!(vol > 0.0)) throw DomainError("bs_delta: vol must be > 0");
    return norm_cdf(bs_d(ctx, strike, t, vol).d1);
}

double implied_vol_bisection(double price, const MarketContext& ctx, double strike, double t,
                             OptionSide side) {
    check_bs_inputs(ctx, strike, t);

    const double df = ctx.discount(t);
    const double intrinsic = side == OptionSide::call ? std::max(ctx.spot - strike * df, 0.0)
                                                      : std::max(strike * df - ctx.spot, 0.0);
    const double upper = side == OptionSide::call ? ctx.spot : strike * df;
    const double slack = 1e-12 * (1.0 + ctx.spot);
    if (price < intrinsic - slack)
        throw DomainError("implied_vol_bisection: price below intrinsic value");
    if (price > upper + slack)
        throw DomainError("implied_vol_bisection: price above upper no-arbitrage bound");

    auto f = [&](double vol) { return bs_price(ctx, strike, t, vol, side) - price; };

    double lo = kVolBracketLo;
    double hi = kVolBracketHi;
    const double flo = f(lo);
    if (flo >= 0.0) return lo; // price at (or numerically below) the zero-vol limit
    if (f(hi) < 0.0) {
        hi = kVolBracketHiExpanded;
        if (f(hi) < 0.0)
            throw DomainError("implied_vol_bisection: price not bracketed below vol = 10");
    }

    for (int i = 0; i < kMaxBisections && hi - lo > kVolTolerance; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double delta_to_strike(double delta, double vol, const MarketContext& ctx, double t) {
    ctx.validate();
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError("delta_to_strike: delta must lie strictly in (0, 1)");
    if (!(vol > 0.0)) throw DomainError("delta_to_strike: vol must be > 0");
    if (!(t > 0.0)) throw DomainError("delta_to_strike: t must be > 0");
    return ctx.spot /
           std::exp(norm_inv(delta) * vol * std::sqrt(t) - (ctx.rate + vol * vol / 2.0) * t);
}

double atm_forward_strike(const MarketContext& ctx, double t) {
    ctx.validate();
    if (!(t >= 0.0)) throw DomainError("atm_forward_strike: t must be >= 0");
    return ctx.forward(t);
}

} // namespace volcal
