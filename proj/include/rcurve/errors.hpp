#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace rcurve {

/// Malformed or out-of-contract input (usage-level failure).
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A well-formed input that the mathematics rejects, e.g. an improper
/// parameterization. Carries a machine-readable reason and evidence fields.
class MathRejection : public std::runtime_error {
public:
    MathRejection(std::string reason, std::string message,
                  std::map<std::string, std::string> evidence = {})
        : std::runtime_error(std::move(message)),
          reason_(std::move(reason)),
          evidence_(std::move(evidence)) {}

    const std::string& reason() const noexcept { return reason_; }
    const std::map<std::string, std::string>& evidence() const noexcept { return evidence_; }

private:
    std::string reason_;
    std::map<std::string, std::string> evidence_;
};

/// Raised by the numeric layer when a computation cannot conclude.
class Inconclusive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rcurve
