#pragma once
#include <stdexcept>
#include <string>

namespace rs {

// Invalid input: malformed files, bad indices, violated preconditions.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured size cap would be exceeded.
struct SizeLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rs
