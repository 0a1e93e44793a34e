#pragma once

#include <stdexcept>
#include <string>

namespace chebfilter {

/// Validation, precondition, or numerical-invariant failure.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// I/O failure: missing file, unreadable file, malformed content.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input content, pinned to a file and line.
class ParseError : public IoError {
public:
    ParseError(const std::string& path, std::size_t line, const std::string& what)
        : IoError(path + ":" + std::to_string(line) + ": " + what),
          path_(path),
          line_(line) {}

    const std::string& path() const { return path_; }
    std::size_t line() const { return line_; }

private:
    std::string path_;
    std::size_t line_;
};

}  // namespace chebfilter
