#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mindef {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A name was used that is not an argument of the framework.
class UndeclaredArgument : public Error {
public:
    explicit UndeclaredArgument(std::string name, std::optional<std::size_t> line = std::nullopt);

    const std::string& name() const noexcept { return name_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    std::string name_;
    std::optional<std::size_t> line_;
};

/// Two argument sets from different frameworks were combined.
class CrossFrameworkSet : public Error {
public:
    CrossFrameworkSet();
};

/// A set that must lie inside the focus set does not.
class NotWithinFocus : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// Search aborted because of the argument cap or the wall-clock ceiling.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class EmptyFamily : public Error {
public:
    EmptyFamily();
};

/// Malformed AFP input.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace mindef
