#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssmid {

// Raised when parameters or inputs fall outside the declared domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParameterSpaceError : public DomainError {
public:
    using DomainError::DomainError;
};

// All particle weights vanished (or an importance ratio had a zero denominator).
class DegeneracyError : public std::runtime_error {
public:
    DegeneracyError(const std::string& what, std::size_t time_index)
        : std::runtime_error(what + " (t = " + std::to_string(time_index) + ")"), time_index_(time_index) {}
    std::size_t time_index() const noexcept { return time_index_; }

private:
    std::size_t time_index_;
};

class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace ssmid
