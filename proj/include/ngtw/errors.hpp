#pragma once

#include <stdexcept>
#include <string>

namespace ngtw {

// Malformed textual input (graph6, edge lists, manifests). `position` is a
// byte offset for graph6 and a 1-based line number for line-oriented formats.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, size_t position)
      : std::runtime_error(what), position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_ = 0;
};

// Input exceeds a configured capability limit (e.g. the exact solver cap).
class capability_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ngtw
