#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdtree {

/// Raised when text does not conform to the tree grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised when a value violates the membership invariant of the set an
/// operation expects (e.g. a tree that is not minimally rooted given to phi).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mdtree
