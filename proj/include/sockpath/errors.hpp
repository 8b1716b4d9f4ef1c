#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sockpath {

// Input that is not a tuple/path at all: empty, non-numeric, entries < 1.
class MalformedInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates a domain rule. `index()` is 1-based.
class ValidityError : public std::domain_error {
public:
    ValidityError(std::size_t index, const std::string& what)
        : std::domain_error(what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// A request that exceeds a configured enumeration/simulation cap.
class ResourceLimitError : public std::length_error {
public:
    ResourceLimitError(unsigned requested, unsigned cap, const std::string& what)
        : std::length_error(what), requested_(requested), cap_(cap) {}

    unsigned requested() const noexcept { return requested_; }
    unsigned cap() const noexcept { return cap_; }

private:
    unsigned requested_;
    unsigned cap_;
};

// Throws ResourceLimitError unless 1 <= n <= cap. `what` names the operation.
void check_cap(unsigned n, unsigned cap, const char* what, const char* advice = nullptr);

}  // namespace sockpath
