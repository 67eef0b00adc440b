#pragma once

#include <cmath>

#include "volcal/errors.hpp"

namespace volcal {

// Spot and flat continuously-compounded risk-free rate.
struct MarketContext {
    double spot = 100.0;
    double rate = 0.0;

    void validate() const {
        if (!(spot > 0.0) || !std::isfinite(spot))
            throw DomainError("MarketContext: spot must be finite and > 0");
        if (!std::isfinite(rate))
            throw DomainError("MarketContext: rate must be finite");
    }

    double forward(double t) const { return spot * std::exp(rate * t); }
    double discount(double t) const { return std::exp(-rate * t); }
};

} // namespace volcal
