#pragma once
// error.hpp - exception types shared by all codecs

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bijenc {

/// Base of every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input lies outside the domain of an operation. The message is
/// prefixed with the name of the operation that rejected it.
class domain_error : public error {
public:
    domain_error(std::string op, const std::string& what)
        : error(op + ": " + what), op_(std::move(op)) {}

    const std::string& operation() const noexcept { return op_; }

private:
    std::string op_;
};

/// Malformed textual input (terms, numbers, signature files).
class syntax_error : public error {
public:
    syntax_error(const std::string& what, std::size_t pos)
        : error("syntax error at " + std::to_string(pos) + ": " + what), pos_(pos) {}

    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// A signature violates one of its invariants.
class signature_error : public error {
public:
    using error::error;
};

} // namespace bijenc
