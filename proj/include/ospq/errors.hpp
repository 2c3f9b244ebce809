#pragma once

#include <stdexcept>
#include <string>

namespace ospq {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
    explicit division_by_zero(const std::string& what) : error(what) {}
};

// A denominator vanished at a resonant specialization of the weights.
struct resonance_error : error {
    std::string factor;
    explicit resonance_error(std::string factor_, const std::string& detail)
        : error("resonant specialization: " + detail), factor(std::move(factor_)) {}
};

struct parity_error : error {
    parity_error() : error("non-homogeneous argument to a parity-sensitive operation") {}
    explicit parity_error(const std::string& what) : error(what) {}
};

struct weight_mismatch : error {
    explicit weight_mismatch(const std::string& what) : error(what) {}
};

struct order_error : error {
    explicit order_error(const std::string& what) : error(what) {}
};

struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct internal_error : error {
    explicit internal_error(const std::string& what) : error("internal consistency: " + what) {}
};

}  // namespace ospq
