#pragma once

#include <stdexcept>
#include <string>

namespace tqft {

// Domain failures carry a short machine-readable code (e.g. "div-by-zero").
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Malformed input documents; the CLI maps these to exit status 2.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse-error", what) {}
};

}  // namespace tqft
