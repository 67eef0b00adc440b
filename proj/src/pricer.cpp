#include "volcal/pricer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace volcal {

namespace {

constexpr double kPi = 3.141592653589793238462643;
const Complex kI{0.0, 1.0};

// In-place iterative radix-2 Cooley-Tukey, forward transform
// X_m = sum_j x_j exp(-2 pi i j m / N).
void fft_inplace(std::vector<Complex>& x) {
    const std::size_t n = x.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * kPi / double(len);
        const Complex wlen{std::cos(ang), std::sin(ang)};
        for (std::size_t i = 0; i < n; i += len) {
            Complex w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex even = x[i + k];
                const Complex odd = x[i + k + len / 2] * w;
                x[i + k] = even + odd;
                x[i + k + len / 2] = even - odd;
                w *= wlen;
            }
        }
    }
}

} // namespace

Complex psi(const CharFn& cf, double v, double alpha, double rate, double t) {
    const Complex shifted = cf(Complex{v, -(alpha + 1.0)});
    const Complex denom{alpha * alpha + alpha - v * v, (2.0 * alpha + 1.0) * v};
    return std::exp(-rate * t) * shifted / denom;
}

PriceGrid carr_madan_fft(const CharFn& cf, const PricerConfig& cfg, const MarketContext& ctx,
                         double t) {
    cfg.validate();
    ctx.validate();
    if (!(t > 0.0)) throw DomainError("carr_madan_fft: t must be > 0");

    const std::size_t n = cfg.n;
    const double lambda = cfg.log_strike_spacing();
    const double half_span = 0.5 * double(n) * lambda;
    const double log_spot = std::log(ctx.spot);
    const double k0 = log_spot - half_span;

    PriceGrid grid;
    grid.maturity = t;
    grid.context = ctx;
    grid.log_strikes.resize(n);
    grid.calls.resize(n);

    std::vector<Complex> work(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double v = cfg.eta * double(j);
        Complex value;
        try {
            value = psi(cf, v, cfg.alpha, ctx.rate, t);
        } catch (const DomainError&) {
            // Overflowing cf values act as integrand truncation.
            value = Complex{0.0, 0.0};
            ++grid.cf_truncations;
        }
        const double phase = v * (half_span - log_spot);
        Complex weighted = value * std::exp(kI * phase) * cfg.eta;
        if (j == 0) weighted *= 0.5; // trapezoid half-weight on the first node
        work[j] = weighted;
    }
    fft_inplace(work);

    for (std::size_t m = 0; m < n; ++m) {
        const double k = k0 + lambda * double(m);
        double call = std::exp(-cfg.alpha * k) / kPi * work[m].real();
        if (call < 0.0) {
            call = 0.0;
            ++grid.cleanup_count;
        }
        grid.log_strikes[m] = k;
        grid.calls[m] = call;
    }
    return grid;
}

double interpolate_price(const PriceGrid& grid, double strike) {
    if (!(strike > 0.0)) throw DomainError("interpolate_price: strike must be > 0");
    const double k = std::log(strike);
    if (k < grid.min_log_strike() || k > grid.max_log_strike()) {
        std::ostringstream os;
        os << "interpolate_price: log-strike " << k << " outside grid ["
           << grid.min_log_strike() << ", " << grid.max_log_strike() << "]";
        throw DomainError(os.str());
    }
    const double spacing = grid.log_strikes[1] - grid.log_strikes[0];
    std::size_t idx = std::size_t((k - grid.log_strikes[0]) / spacing);
    idx = std::min(idx, grid.log_strikes.size() - 2);
    const double w = (k - grid.log_strikes[idx]) / spacing;
    return (1.0 - w) * grid.calls[idx] + w * grid.calls[idx + 1];
}

double put_from_call(double call, double strike, const MarketContext& ctx, double t) {
    return call - ctx.spot + strike * ctx.discount(t);
}

namespace {

// Gauss(7)/Kronrod(15) nodes and weights on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                                     0.417959183673469};

struct GkEstimate {
    double value;
    double error;
    double max_abs; // largest |f| seen on the panel
};

template <class F>
GkEstimate gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    double max_abs = std::abs(fc);
    for (int i = 0; i < 7; ++i) {
        const double f1 = f(c - h * kKronrodNodes[i]);
        const double f2 = f(c + h * kKronrodNodes[i]);
        kron += kKronrodWeights[i] * (f1 + f2);
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (f1 + f2);
        max_abs = std::max({max_abs, std::abs(f1), std::abs(f2)});
    }
    return {kron * h, std::abs(kron - gauss) * h, max_abs};
}

struct PanelResult {
    double value = 0.0;
    double error = 0.0;
    double max_abs = 0.0;
};

// Adaptive bisection within one panel.
template <class F>
PanelResult integrate_panel(const F& f, double a, double b, double tol, int depth = 0) {
    const auto est = gk15(f, a, b);
    if (est.error <= tol || depth >= 24)
        return {est.value, est.error, est.max_abs};
    const double mid = 0.5 * (a + b);
    const auto left = integrate_panel(f, a, mid, tol / 2.0, depth + 1);
    const auto right = integrate_panel(f, mid, b, tol / 2.0, depth + 1);
    return {left.value + right.value, left.error + right.error,
            std::max(left.max_abs, right.max_abs)};
}

constexpr double kPanelWidth = 16.0;
constexpr double kUpperCutoff = 5000.0;
constexpr double kDecayThreshold = 1e-15;
constexpr double kPanelTolerance = 1e-12;

// 1/2 + (1/pi) * integral of f over [0, inf), marching fixed panels until
// the integrand has decayed or the cutoff is reached.
template <class F>
std::pair<double, double> semi_infinite_probability(const F& f) {
    double total = 0.0;
    double err = 0.0;
    for (double a = 0.0; a < kUpperCutoff; a += kPanelWidth) {
        const double b = std::min(a + kPanelWidth, kUpperCutoff);
        const auto panel = integrate_panel(f, a, b, kPanelTolerance);
        total += panel.value;
        err += panel.error;
        if (panel.max_abs < kDecayThreshold) break;
    }
    return {0.5 + total / kPi, err / kPi};
}

} // namespace

QuadratureProbabilities quadrature_probabilities(const CharFn& cf, double strike,
                                                 const MarketContext& ctx, double t) {
    ctx.validate();
    if (!(strike > 0.0)) throw DomainError("quadrature_probabilities: strike must be > 0");
    if (!(t > 0.0)) throw DomainError("quadrature_probabilities: t must be > 0");

    const double log_k = std::log(strike);
    const Complex cf_minus_i = cf(Complex{0.0, -1.0});

    const auto pi2_integrand = [&](double u) -> double {
        if (u < 1e-10) u = 1e-10; // removable singularity at u = 0
        const Complex z = std::exp(-kI * u * log_k) * cf(Complex{u, 0.0}) / (kI * u);
        return z.real();
    };
    const auto pi1_integrand = [&](double u) -> double {
        if (u < 1e-10) u = 1e-10;
        const Complex z =
            std::exp(-kI * u * log_k) * cf(Complex{u, -1.0}) / (kI * u * cf_minus_i);
        return z.real();
    };

    const auto [pi2, err2] = semi_infinite_probability(pi2_integrand);
    const auto [pi1, err1] = semi_infinite_probability(pi1_integrand);

    QuadratureProbabilities out;
    out.pi1 = pi1;
    out.pi2 = pi2;
    out.achieved_tolerance = err1 + err2;
    if (out.achieved_tolerance > 1e-6) {
        std::ostringstream os;
        os << "quadrature_probabilities: did not converge, achieved tolerance "
           << out.achieved_tolerance;
        throw DomainError(os.str());
    }
    return out;
}

double call_price_quadrature(const CharFn& cf, double strike, const MarketContext& ctx,
                             double t) {
    const auto probs = quadrature_probabilities(cf, strike, ctx, t);
    return ctx.spot * probs.pi1 - strike * ctx.discount(t) * probs.pi2;
}

} // namespace volcal
