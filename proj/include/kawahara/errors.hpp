#ifndef KAWAHARA_ERRORS_HPP
#define KAWAHARA_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace kawahara {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Quadrature failed to meet the requested tolerance; carries the best estimate.
struct AccuracyError : std::runtime_error {
    double achieved;
    double requested;
    AccuracyError(const std::string& what, double achieved_, double requested_)
        : std::runtime_error(what + " (achieved " + std::to_string(achieved_) +
                             ", requested " + std::to_string(requested_) + ")"),
          achieved(achieved_), requested(requested_) {}
};

struct GridError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Corner-matching conditions of the half-line problem, per clause.
struct CompatibilityError : std::runtime_error {
    std::vector<std::string> failed_clauses;
    CompatibilityError(const std::string& what, std::vector<std::string> clauses)
        : std::runtime_error(what), failed_clauses(std::move(clauses)) {}
};

// Picard iteration failed to contract; carries the difference history.
struct DivergenceError : std::runtime_error {
    std::vector<double> history;
    DivergenceError(const std::string& what, std::vector<double> hist)
        : std::runtime_error(what), history(std::move(hist)) {}
};

struct BlowupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace kawahara

#endif
