#pragma once

#include <stdexcept>
#include <string>

namespace driftcast {

/// Caller broke a documented precondition (bad argument, mismatched sizes).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Too few observations to run a statistical procedure.
class InsufficientSample : public ContractViolation {
public:
    using ContractViolation::ContractViolation;
};

/// Not enough past demand to build the requested features; caller must warm up.
class InsufficientHistory : public ContractViolation {
public:
    using ContractViolation::ContractViolation;
};

/// Invalid or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File system or parsing failure on external inputs/outputs.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace driftcast
