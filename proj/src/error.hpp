#pragma once

#include <stdexcept>
#include <string>

namespace agcodec {

enum class Errc {
  non_prime_p,
  reducible_modulus,
  degree_mismatch,
  division_by_zero,
  out_of_range,
  gap_value,
  field_order_mismatch,
  zero_element,
  length_mismatch,
  duplicate_point,
  bad_config,
  internal_error,  // broken invariant; indicates a bug, not bad input
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace agcodec
