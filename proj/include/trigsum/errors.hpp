#ifndef TRIGSUM_ERRORS_HPP
#define TRIGSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trigsum {

// A request exceeded a table or truncation depth the library can serve.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// An adaptive computation hit its term budget before certifying the
// requested tolerance.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A requested tolerance is below what the active precision policy can
// certify.
class precision_error : public std::runtime_error {
 public:
  explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trigsum

#endif  // TRIGSUM_ERRORS_HPP
