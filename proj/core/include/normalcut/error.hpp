#pragma once

#include <stdexcept>
#include <string>

namespace normalcut {

// Input that fails syntactic or structural validation.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource ceiling was hit; partial results are never returned.
class limit_error : public std::runtime_error {
 public:
  limit_error(const std::string& what, std::string required, std::string cap)
      : std::runtime_error(what),
        required_(std::move(required)),
        cap_(std::move(cap)) {}

  // Decimal strings: the value the computation would need, and the ceiling.
  const std::string& required() const { return required_; }
  const std::string& cap() const { return cap_; }

 private:
  std::string required_;
  std::string cap_;
};

}  // namespace normalcut
