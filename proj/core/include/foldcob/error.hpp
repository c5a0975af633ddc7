#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace foldcob {

/// One failed structural check. Validators return these as data.
struct Violation {
  std::string code;
  std::string message;
};

using ViolationList = std::vector<Violation>;

/// Raised when external input (JSON, graphs, diagrams) is malformed or violates a domain rule.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace foldcob
