#pragma once

#include <stdexcept>
#include <string>

namespace lf {

// Error taxonomy shared across the library. The CLI maps these to exit codes,
// so the distinction between categories is part of the public contract:
//   argument_error  -> caller passed structurally invalid input (bad shape, bad parameter)
//   domain_error    -> a vector lies outside the norm's cone; message names the violated constraint
//   parse_error     -> malformed JSON / text input
//   sampling_error  -> rejection sampling exhausted its trial budget
//   internal_error  -> a condition the library guarantees impossible was observed

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct argument_error : error {
  using error::error;
};

struct domain_error : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

struct sampling_error : error {
  using error::error;
};

struct internal_error : error {
  using error::error;
};

}  // namespace lf
