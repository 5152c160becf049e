#pragma once

#include <stdexcept>
#include <string>

namespace tqdfock {

/// Invalid physical or numerical parameter (non-positive width, Δ_m ≤ 0, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation applied to a basis or trajectory of the wrong model.
class ModelMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Spectrum too close to degenerate for the eigenbasis to be differentiated.
class DegeneracyError : public std::runtime_error {
public:
    DegeneracyError(const std::string& what, double gap, double threshold)
        : std::runtime_error(what), gap_(gap), threshold_(threshold) {}
    double gap() const noexcept { return gap_; }
    double threshold() const noexcept { return threshold_; }

private:
    double gap_;
    double threshold_;
};

/// Norm/trace drift or loss of positivity during time integration.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad command line, unknown preset, malformed config.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tqdfock
