#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracleib {

// Input outside an operator's or function's domain (bad order, bad exponent,
// non-positive evaluation point, ...). CLI exit code 3.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Structured parse failure with the byte offset of the offending token.
// CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// An internal numerical routine failed to reach its required tolerance.
// CLI exit code 4.
class ToleranceError : public std::runtime_error {
public:
    ToleranceError(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved " + std::to_string(achieved) + ")"),
          achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

}  // namespace fracleib
