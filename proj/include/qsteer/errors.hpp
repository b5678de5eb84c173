#pragma once

#include <stdexcept>
#include <string>

namespace qsteer {

/// Malformed input text. `position` pinpoints the offending location
/// (a JSON path like "$.rows[2][1]", a byte offset, or a line number).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string position, const std::string& message)
        : std::runtime_error(position + ": " + message), position_(std::move(position)) {}

    const std::string& position() const { return position_; }

private:
    std::string position_;
};

/// Filesystem-level failure (unreadable input, unwritable output).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

} // namespace qsteer
