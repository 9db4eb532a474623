#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Argument and precondition violations are reported as std::invalid_argument.
// The types below cover the remaining failure classes.

class ParseError : public std::runtime_error
{
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line)
    {
    }

    /// 1-based input line, or 0 when the error is not tied to a line.
    int line() const noexcept { return line_; }

private:
    int line_;
};

class ResourceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedInstance : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace ramsey
