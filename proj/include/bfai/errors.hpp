#pragma once

#include <stdexcept>
#include <string>

namespace bfai {

enum class errc {
  parse,
  out_of_range,
  dimension_mismatch,
  inconsistent_system,
  degenerate_form,
  not_balanced,
  not_symmetric,
  not_rotation_symmetric,
  pattern_mismatch,
  incomplete_assignment,
  invalid_argument,
  cost_limit,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace bfai
