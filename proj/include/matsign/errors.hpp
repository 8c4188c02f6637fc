// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace matsign {

// Shape disagreement between matrix operands.
struct dimension_error : std::invalid_argument {
    explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

// Input exceeds a hard enumeration/DP guard. Guards are errors, not warnings:
// silent exponential blowup is worse than refusal.
struct capacity_error : std::length_error {
    explicit capacity_error(const std::string& what) : std::length_error(what) {}
};

// A post-hoc certificate check failed beyond tolerance.
struct certification_error : std::runtime_error {
    explicit certification_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace matsign
