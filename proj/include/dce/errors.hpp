#pragma once

#include <stdexcept>
#include <string>

namespace dce {

/// A model primitive or precondition is outside its admissible set.
/// `field()` names the offending parameter (e.g. "beta").
class DomainError : public std::domain_error {
public:
    DomainError(std::string field, const std::string& what)
        : std::domain_error(what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// The budget identity produced negative consumption: the plan is infeasible.
class NegativeConsumption : public std::runtime_error {
public:
    explicit NegativeConsumption(double value)
        : std::runtime_error("negative consumption: " + std::to_string(value)), value_(value) {}

    double value() const noexcept { return value_; }

private:
    double value_;
};

/// Bayes' rule hit 0/0 (zero prior, certain default).
class Indeterminate : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A probability formula left [0, 1].
class OutOfRange : public std::out_of_range {
public:
    OutOfRange(const std::string& what, double value) : std::out_of_range(what), value_(value) {}

    double value() const noexcept { return value_; }

private:
    double value_;
};

/// Malformed sweep range (lo >= hi or step <= 0).
class RangeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace dce
