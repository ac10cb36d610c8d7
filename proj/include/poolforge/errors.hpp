#pragma once

#include <stdexcept>
#include <string>

namespace poolforge {

// Bad input files or numbers that a user can fix: malformed lines, schema
// violations, out-of-range configuration. The CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed data encountered while reading run/qrels streams. Carries the
// 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace poolforge
