#pragma once

#include <stdexcept>
#include <string>

namespace volcal {

// Invalid numerical domain: bad parameters, overflowing exponentials,
// prices outside no-arbitrage bounds, ...
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller broke a documented precondition (mismatched breakpoints,
// out-of-range interpolation, infeasible start point, ...).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

// Malformed input files (CSV/JSON); message carries the location.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace volcal
