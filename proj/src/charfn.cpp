#include "volcal/charfn.hpp"

#include <cmath>
#include <sstream>

namespace volcal {

namespace {

constexpr double kMaxExponent = 700.0; // exp() overflows just above 709

const Complex kI{0.0, 1.0};

std::string describe(Complex u, double t) {
    std::ostringstream os;
    os << "u = (" << u.real() << ", " << u.imag() << "), t = " << t;
    return os.str();
}

Complex checked_exp(Complex z, Complex u, double t, const char* where) {
    if (z.real() > kMaxExponent)
        throw DomainError(std::string(where) + ": exponent overflow at " + describe(u, t));
    return std::exp(z);
}

// Near-cancellation of kappa - rho*sigma*iu + d (only reachable around
// u = -i when kappa < rho*sigma): evaluate with the mirrored root instead.
// The two representations are algebraically identical, so flipping the
// sign of d only changes the conditioning.
bool needs_root_flip(Complex a, Complex d, Complex shift) {
    const double scale = std::abs(a) + std::abs(d) + std::abs(shift) + 1.0;
    return std::abs(a + d - shift) < 1e-12 * scale;
}

// a -/+ d with the smaller combination recovered from
// (a - d)(a + d) = -radicand, avoiding the sigma^2-scale cancellation
// that otherwise wrecks the vol-of-vol -> 0 limit.
struct RootCombos {
    Complex apd; // a + d
    Complex amd; // a - d
};

RootCombos stable_root_combos(Complex a, Complex d, Complex radicand) {
    Complex apd = a + d;
    Complex amd = a - d;
    if (std::abs(amd) < std::abs(apd))
        amd = -radicand / apd;
    else
        apd = -radicand / amd;
    return {apd, amd};
}

} // namespace

HestonDG heston_dg(const HestonParams& p, Complex u) {
    p.validate();
    const Complex a = p.kappa - p.rho * p.sigma * kI * u;
    const Complex w = p.sigma * p.sigma * (kI * u + u * u);
    const Complex d = std::sqrt(a * a + w);
    if (std::abs(a + d) < 1e-300 * (std::abs(a) + std::abs(d) + 1.0))
        throw DomainError("heston_dg: degenerate denominator kappa - rho*sigma*iu + d");
    const auto [apd, amd] = stable_root_combos(a, d, w);
    return {d, amd / apd};
}

Complex heston_cf_stable(const HestonParams& p, const MarketContext& ctx, double t, Complex u) {
    p.validate();
    ctx.validate();
    if (!(t > 0.0)) throw DomainError("heston_cf_stable: t must be > 0");

    const double s2 = p.sigma * p.sigma;
    const Complex a = p.kappa - p.rho * p.sigma * kI * u;
    const Complex w = s2 * (kI * u + u * u);
    Complex d = std::sqrt(a * a + w);
    if (needs_root_flip(a, d, Complex{0.0, 0.0})) d = -d;
    if (needs_root_flip(a, d, Complex{0.0, 0.0}))
        throw DomainError("heston_cf_stable: both root choices degenerate at " + describe(u, t));
    const auto [apd, amd] = stable_root_combos(a, d, w);

    const Complex g = amd / apd;
    const Complex e = checked_exp(-d * t, u, t, "heston_cf_stable");
    const Complex one_m_ge = 1.0 - g * e;
    const Complex one_m_g = 1.0 - g;
    if (std::abs(one_m_ge) < 1e-300 || std::abs(one_m_g) < 1e-300)
        throw DomainError("heston_cf_stable: degenerate log argument at " + describe(u, t));

    const Complex c = kI * u * (std::log(ctx.spot) + ctx.rate * t) +
                      p.theta * p.kappa / s2 *
                          (amd * t - 2.0 * std::log(one_m_ge / one_m_g));
    const Complex dv = amd / s2 * (1.0 - e) / one_m_ge;
    return checked_exp(c + dv * p.v0, u, t, "heston_cf_stable");
}

Complex heston_cf_original(const HestonParams& p, const MarketContext& ctx, double t, Complex u) {
    p.validate();
    ctx.validate();
    if (!(t > 0.0)) throw DomainError("heston_cf_original: t must be > 0");

    const double s2 = p.sigma * p.sigma;
    const Complex a = p.kappa - p.rho * p.sigma * kI * u;
    const Complex w = s2 * (kI * u + u * u);
    Complex d = std::sqrt(a * a + w);
    if (needs_root_flip(a, -d, Complex{0.0, 0.0})) d = -d;
    if (needs_root_flip(a, -d, Complex{0.0, 0.0}))
        throw DomainError("heston_cf_original: both root choices degenerate at " + describe(u, t));
    const auto [apd, amd] = stable_root_combos(a, d, w);

    const Complex g1 = apd / amd;
    const Complex e = checked_exp(d * t, u, t, "heston_cf_original");
    const Complex one_m_ge = 1.0 - g1 * e;
    const Complex one_m_g = 1.0 - g1;
    if (std::abs(one_m_ge) < 1e-300 || std::abs(one_m_g) < 1e-300)
        throw DomainError("heston_cf_original: degenerate log argument at " + describe(u, t));

    const Complex c = kI * u * (std::log(ctx.spot) + ctx.rate * t) +
                      p.theta * p.kappa / s2 *
                          (apd * t - 2.0 * std::log(one_m_ge / one_m_g));
    const Complex dv = apd / s2 * (1.0 - e) / one_m_ge;
    return checked_exp(c + dv * p.v0, u, t, "heston_cf_original");
}

HestonCfState heston_segment_step(const HestonParams& p, double rate, double dt, Complex u,
                                  const HestonCfState& state) {
    const double s2 = p.sigma * p.sigma;
    const Complex a = p.kappa - p.rho * p.sigma * kI * u;
    Complex d = std::sqrt(a * a + s2 * (kI * u + u * u));
    const Complex shift = state.d_acc * s2;
    if (needs_root_flip(a, d, shift)) d = -d;
    if (needs_root_flip(a, d, shift))
        throw DomainError("heston_segment_step: both root choices degenerate at " + describe(u, dt));

    const Complex rm = (a - d) / s2;
    const Complex rp = (a + d) / s2;
    const Complex g_tilde = (a - d - shift) / (a + d - shift);
    const Complex e = checked_exp(-d * dt, u, dt, "heston_segment_step");
    const Complex one_m_ge = 1.0 - g_tilde * e;
    const Complex one_m_g = 1.0 - g_tilde;
    if (std::abs(one_m_ge) < 1e-300 || std::abs(one_m_g) < 1e-300)
        throw DomainError("heston_segment_step: degenerate log argument at " + describe(u, dt));

    HestonCfState next;
    next.c = state.c + kI * u * rate * dt +
             p.kappa * p.theta * (rm * dt) -
             2.0 * p.kappa * p.theta / s2 * std::log(one_m_ge / one_m_g);
    next.d_acc = (rm - rp * g_tilde * e) / one_m_ge;
    return next;
}

Complex heston_cf_piecewise(const ParamSchedule<HestonParams>& sched, const MarketContext& ctx,
                            double t, Complex u) {
    sched.validate();
    ctx.validate();
    if (!(t > 0.0)) throw DomainError("heston_cf_piecewise: t must be > 0");

    // Zero initial conditions on the sub-interval adjacent to maturity,
    // then step backward through the earlier segments.
    HestonCfState state;
    for (std::size_t k = sched.size(); k-- > 0;) {
        const double lo = sched.start_of(k);
        if (lo >= t) continue;
        const double hi = (k + 1 < sched.size()) ? sched.breakpoints[k] : t;
        const double dt = std::min(hi, t) - lo;
        state = heston_segment_step(sched.segments[k], ctx.rate, dt, u, state);
    }
    const double v0 = sched.segments.front().v0;
    return checked_exp(state.c + state.d_acc * v0 + kI * u * std::log(ctx.spot), u, t,
                       "heston_cf_piecewise");
}

namespace {

// Exponent of the jump factor over a sub-interval of length dt.
Complex jump_exponent(const JumpParams& j, double dt, Complex u) {
    if (j.lambda == 0.0 || dt == 0.0) return {0.0, 0.0};
    const Complex iu = kI * u;
    const Complex transform =
        std::exp(iu * std::log(1.0 + j.mu_j)) *
        std::exp(j.sigma_j * j.sigma_j * (iu / 2.0) * (iu - 1.0));
    return -j.lambda * j.mu_j * iu * dt + j.lambda * dt * (transform - 1.0);
}

} // namespace

Complex bates_jump_cf(const JumpParams& j, double t, Complex u) {
    j.validate();
    if (!(t >= 0.0)) throw DomainError("bates_jump_cf: t must be >= 0");
    return checked_exp(jump_exponent(j, t, u), u, t, "bates_jump_cf");
}

Complex bates_cf(const HestonParams& p, const JumpParams& j, const MarketContext& ctx, double t,
                 Complex u) {
    return heston_cf_stable(p, ctx, t, u) * bates_jump_cf(j, t, u);
}

Complex bates_jump_cf_piecewise(const ParamSchedule<JumpParams>& sched, double t, Complex u) {
    sched.validate();
    if (!(t >= 0.0)) throw DomainError("bates_jump_cf_piecewise: t must be >= 0");

    Complex exponent{0.0, 0.0};
    for (std::size_t k = 0; k < sched.size(); ++k) {
        const double lo = sched.start_of(k);
        if (lo >= t) break;
        const double hi = (k + 1 < sched.size()) ? sched.breakpoints[k] : t;
        exponent += jump_exponent(sched.segments[k], std::min(hi, t) - lo, u);
    }
    return checked_exp(exponent, u, t, "bates_jump_cf_piecewise");
}

Complex bates_cf_piecewise(const ParamSchedule<HestonParams>& sched_h,
                           const ParamSchedule<JumpParams>& sched_j, const MarketContext& ctx,
                           double t, Complex u) {
    if (sched_h.breakpoints != sched_j.breakpoints)
        throw ContractError("bates_cf_piecewise: diffusion and jump schedules must share breakpoints");
    return heston_cf_piecewise(sched_h, ctx, t, u) * bates_jump_cf_piecewise(sched_j, t, u);
}

namespace {

// (1 - i*drift*nu*u + sigma^2 u^2 nu / 2)^(-dt/nu) via the principal log.
Complex vg_power_exponent(const VGParams& p, double dt, Complex u) {
    const Complex base = 1.0 - kI * p.drift * p.nu * u + p.sigma * p.sigma * u * u * p.nu / 2.0;
    if (std::abs(base) < 1e-300)
        throw DomainError("vg_cf: power base vanished");
    if (base.real() <= 0.0 && std::abs(base.imag()) < 1e-12 * std::abs(base.real()))
        throw DomainError("vg_cf: power base on the negative real axis, branch ambiguous");
    return -(dt / p.nu) * std::log(base);
}

} // namespace

Complex vg_cf(const VGParams& p, const MarketContext& ctx, double t, Complex u) {
    p.validate();
    ctx.validate();
    if (!(t > 0.0)) throw DomainError("vg_cf: t must be > 0");
    const Complex exponent =
        kI * u * (std::log(ctx.spot) + (ctx.rate + p.omega()) * t) + vg_power_exponent(p, t, u);
    return checked_exp(exponent, u, t, "vg_cf");
}

Complex vg_cf_piecewise(const ParamSchedule<VGParams>& sched, const MarketContext& ctx, double t,
                        Complex u) {
    sched.validate();
    ctx.validate();
    if (!(t > 0.0)) throw DomainError("vg_cf_piecewise: t must be > 0");

    Complex exponent = kI * u * (std::log(ctx.spot) + ctx.rate * t);
    for (std::size_t k = 0; k < sched.size(); ++k) {
        const double lo = sched.start_of(k);
        if (lo >= t) break;
        const double hi = (k + 1 < sched.size()) ? sched.breakpoints[k] : t;
        const double dt = std::min(hi, t) - lo;
        exponent += kI * u * sched.segments[k].omega() * dt;
        exponent += vg_power_exponent(sched.segments[k], dt, u);
    }
    return checked_exp(exponent, u, t, "vg_cf_piecewise");
}

} // namespace volcal
