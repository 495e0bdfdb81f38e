#pragma once

#include <stdexcept>
#include <string>

namespace hanoi {

// Bad instance parameters: fewer than three pegs, repeated pegs, and so on.
class InvalidConfiguration : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IllegalMove : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation that is undefined for its input (e.g. splitting an empty tower).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The oracle refuses instances whose state graph does not fit the memory budget.
class ResourceLimit : public std::runtime_error {
public:
    ResourceLimit(std::string what, unsigned long long required, unsigned long long available)
        : std::runtime_error(std::move(what)), required_(required), available_(available) {}

    unsigned long long required() const noexcept { return required_; }
    unsigned long long available() const noexcept { return available_; }

private:
    unsigned long long required_;
    unsigned long long available_;
};

}  // namespace hanoi
