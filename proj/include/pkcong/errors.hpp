#pragma once

#include <stdexcept>
#include <string>

namespace pkcong {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// coefficient-domain errors
struct modulus_mismatch : error {
  using error::error;
};
struct not_a_unit : error {
  using error::error;
};
struct invalid_modulus : error {
  using error::error;
};

// series errors
struct domain_mismatch : error {
  using error::error;
};
struct non_unit_constant_term : error {
  using error::error;
};
struct non_unit_leading_coefficient : error {
  using error::error;
};
struct insufficient_precision : error {
  using error::error;
};
struct divisibility_violation : error {
  divisibility_violation(const std::string& msg, long long exponent_)
      : error(msg), exponent(exponent_) {}
  long long exponent;  // q-exponent at which the required divisibility failed
};

// certifier errors
struct invalid_prime : error {
  using error::error;
};
struct hypothesis_violated : error {
  using error::error;
};
struct missing_priors : error {
  using error::error;
};
struct invalid_shift : error {
  using error::error;
};
struct incomplete_chain : error {
  using error::error;
};
struct oracle_scale_exceeded : error {
  using error::error;
};

// modforms errors
struct cap_exceeded : error {
  using error::error;
};
struct odd_weight : error {
  using error::error;
};
struct weight_mismatch : error {
  using error::error;
};
struct range_too_small : error {
  using error::error;
};

}  // namespace pkcong
