#ifndef GLAISHER_ERRORS_HPP
#define GLAISHER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glaisher {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An integrand returned a non-finite value during quadrature.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double at)
        : std::runtime_error(what), abscissa_(at) {}

    double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

/// A truncation policy cannot meet the requested tolerance, e.g. plain
/// truncation of an algebraically decaying tail.
class PolicyInfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failure writing or reading an output sink.
class IoError : public std::runtime_error {
public:
    IoError(const std::string& what, std::string path)
        : std::runtime_error(what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace glaisher

#endif  // GLAISHER_ERRORS_HPP
