#pragma once

#include <stdexcept>
#include <string>

namespace symmon {

// Mixing values of different vector dimension m.
class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what)
        : std::invalid_argument(what) {}
};

// Extremal projector hit a vanishing denominator h + i on some weight
// component. Carries enough context to identify the offending component.
class SingularWeight : public std::runtime_error {
public:
    SingularWeight(const std::string& what, std::string component,
                   std::string weight, int series_index)
        : std::runtime_error(what),
          component_(std::move(component)),
          weight_(std::move(weight)),
          series_index_(series_index) {}

    const std::string& component() const { return component_; }
    const std::string& weight() const { return weight_; }
    int series_index() const { return series_index_; }

private:
    std::string component_;
    std::string weight_;
    int series_index_;
};

// Input outside an operation's mathematical domain (e.g. a projected
// generator applied to a polynomial not in ker(Ds, L)).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what)
        : std::invalid_argument(what) {}
};

// Operator-expression parse failure with a byte position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Expression is grammar-valid but has no finite normal-ordered form
// (projected generators act pointwise, they are not Weyl operators).
class NotElaborable : public std::runtime_error {
public:
    explicit NotElaborable(const std::string& what)
        : std::runtime_error(what) {}
};

// Bad CLI / run configuration.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what)
        : std::invalid_argument(what) {}
};

} // namespace symmon
