#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace massform {

// Group construction or closure would exceed the configured order cap.
class SizeCapError : public std::runtime_error {
public:
  SizeCapError(long long cap, const std::string& what_arg)
      : std::runtime_error(what_arg), cap_(cap) {}

  long long cap() const { return cap_; }

private:
  long long cap_;
};

// DSL syntax or validity error; position is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// An operation needed a construction tag (wreath/product factors) the group
// does not carry, or a counting function hosted on a different group.
class StructureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An element passed to a group query is not a member of that group.
class NotInGroup : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace massform
