#pragma once

#include <stdexcept>
#include <string>

namespace ffhyper {

/// Reasons a construction or evaluation is rejected.
enum class errc {
  not_prime,
  even_characteristic,
  budget_exceeded,
  zero_argument,
  non_unit,
  bad_congruence,
  incompatible_orders,
  bad_precision,
  bad_argument,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace ffhyper
