// errors.hpp: exception types shared by the phasediff modules

#pragma once

#include <stdexcept>
#include <string>

namespace phasediff {

// Argument outside the region where a closed form is defined (e.g. t <= 2a).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An infinite series was cut off before its tail dropped below tolerance.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, int cutoff, double tail)
        : std::runtime_error(what + " (cutoff " + std::to_string(cutoff) +
                             ", tail " + std::to_string(tail) + ")"),
          cutoff_(cutoff), tail_(tail) {}

    int cutoff() const noexcept { return cutoff_; }
    double tail() const noexcept { return tail_; }

private:
    int cutoff_;
    double tail_;
};

// Bath parameters that violate a relation the closed forms rely on.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace phasediff
