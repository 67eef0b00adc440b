// Throwaway development driver; replaced by the doctest suites.
#include <cstdio>

#include "volcal/charfn.hpp"
#include "volcal/implied.hpp"
#include "volcal/pricer.hpp"

using namespace volcal;

int main() {
    const HestonParams p{2.0, 0.04, 0.5, -0.7, 0.04};
    const MarketContext ctx{100.0, 0.01};

    const auto dg = heston_dg(p, Complex{1.0, 0.0});
    std::printf("d  = %.17g + %.17gi (want 2.0703359938162239, 0.39848604403543602)\n",
                dg.d.real(), dg.d.imag());
    std::printf("g2 = %.17g + %.17gi (want -0.018833767493617639, -0.0084487452539790617)\n",
                dg.g2.real(), dg.g2.imag());

    const Complex phi = heston_cf_stable(p, ctx, 1.0, Complex{1.0, 0.0});
    std::printf("phi2(1) = %.17g + %.17gi (want -0.11213475306140994, -0.97203908593374514)\n",
                phi.real(), phi.imag());

    const Complex mart = heston_cf_stable(p, ctx, 1.0, Complex{0.0, -1.0});
    std::printf("e^-rt phi(-i) = %.17g (want 100)\n", std::exp(-0.01) * mart.real());

    // piecewise collapse + two-regime reference
    ParamSchedule<HestonParams> sched{{0.3, 0.55}, {p, p, p}};
    const Complex pw = heston_cf_piecewise(sched, ctx, 1.0, Complex{1.0, 0.0});
    std::printf("pw collapse err = %.3g\n", std::abs(pw - phi));

    ParamSchedule<HestonParams> sw{{0.5}, {{2.0, 0.04, 0.5, -0.7, 0.04}, {4.0, 0.09, 0.8, 0.2, 0.04}}};
    const Complex phisw = heston_cf_piecewise(sw, ctx, 1.0, Complex{1.0, 0.0});
    std::printf("pw two-regime = %.17g + %.17gi (want -0.11957459990452458, -0.96523170752978998)\n",
                phisw.real(), phisw.imag());

    // VG + jumps references
    const VGParams vg{0.12, 0.2, -0.14};
    const Complex vgv = vg_cf(vg, ctx, 1.0, Complex{1.3, 0.0});
    std::printf("vg(1.3) = %.17g + %.17gi (want 0.94226282769338244, -0.28586423929686794)\n",
                vgv.real(), vgv.imag());

    const JumpParams j{1.0, -0.1, 0.15};
    const Complex jv = bates_jump_cf(j, 1.0, Complex{2.0, 0.0});
    std::printf("jump(2) = %.17g + %.17gi (want 0.93229728739840966, -0.019527967896378519)\n",
                jv.real(), jv.imag());

    // Black-Scholes anchor + implied-vol roundtrip
    const double call = bs_price(ctx, 100.0, 1.0, 0.2, OptionSide::call);
    std::printf("bs call = %.17g (want 8.4333186901096088)\n", call);
    const double iv = implied_vol_bisection(call, ctx, 100.0, 1.0, OptionSide::call);
    std::printf("implied roundtrip = %.12g (want 0.2)\n", iv);
    std::printf("ninv(0.025) = %.17g (want -1.9599639845400542)\n", norm_inv(0.025));

    // FFT vs closed form in the BS limit
    const HestonParams bs_limit{2.0, 0.04, 1e-6, 0.0, 0.04};
    CharFn cf = [&](Complex u) { return heston_cf_stable(bs_limit, ctx, 1.0, u); };
    PricerConfig cfg;
    const PriceGrid grid = carr_madan_fft(cf, cfg, ctx, 1.0);
    const double fft_atm = interpolate_price(grid, 100.0);
    std::printf("fft ATM (BS limit) = %.10g vs bs %.10g\n", fft_atm, call);

    const double quad_atm = call_price_quadrature(cf, 100.0, ctx, 1.0);
    std::printf("quad ATM (BS limit) = %.10g\n", quad_atm);

    // Heston FFT vs quadrature
    CharFn cfh = [&](Complex u) { return heston_cf_stable(p, ctx, 1.0, u); };
    const PriceGrid gridh = carr_madan_fft(cfh, cfg, ctx, 1.0);
    for (double k : {70.0, 100.0, 130.0}) {
        const double f = interpolate_price(gridh, k);
        const double q = call_price_quadrature(cfh, k, ctx, 1.0);
        std::printf("K=%g: fft=%.10g quad=%.10g rel=%.3g\n", k, f, q, std::abs(f - q) / q);
    }
    return 0;
}
