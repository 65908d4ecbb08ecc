#include "mindef/errors.hpp"

namespace mindef {

namespace {

std::string undeclared_message(const std::string& name, std::optional<std::size_t> line) {
    std::string msg = "undeclared argument '" + name + "'";
    if (line) msg = "line " + std::to_string(*line) + ": " + msg;
    return msg;
}

}  // namespace

UndeclaredArgument::UndeclaredArgument(std::string name, std::optional<std::size_t> line)
    : Error(undeclared_message(name, line)), name_(std::move(name)), line_(line) {}

CrossFrameworkSet::CrossFrameworkSet() : Error("argument sets belong to different frameworks") {}

EmptyFamily::EmptyFamily() : Error("acceptance query on an empty extension family") {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace mindef
