#pragma once

#include <stdexcept>
#include <string>

namespace gmm {

enum class ErrorKind {
  malformed_input,
  incompatible_rank,
  out_of_range,
  contract_violation,
  action_undefined,
  window_exceeded,
  cannot_approximate,
  invalid_axes,
  malformed_code,
  no_witness,
  precondition_unmet,
  unknown_name,
  invalid_params,
  load_error,
};

const char* kind_name(ErrorKind k);

// Every module reports domain failures through this one type. `payload` holds
// the largest valid radius for window_exceeded and is -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, long payload = -1)
      : std::runtime_error(what), kind_(kind), payload_(payload) {}

  ErrorKind kind() const { return kind_; }
  long payload() const { return payload_; }

 private:
  ErrorKind kind_;
  long payload_;
};

}  // namespace gmm
