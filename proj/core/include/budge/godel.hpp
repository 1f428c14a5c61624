#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace budge::godel {

// Arbitrary-precision natural; register states grow as prime powers, so
// fixed-width integers are not an option.
using BigInt = mpz_class;

/// Returns the n-th prime, 1-based: nth_prime(1) == 2.
/// Throws std::invalid_argument for n == 0. Thread-safe (shared memo table).
std::uint64_t nth_prime(std::size_t n);

// Exponent view of a machine state: slot k (1-based) is the exponent of the
// k-th prime. Kept canonical at all times: no trailing zero entries, so the
// empty vector is the state with Godel number 1 and vector equality matches
// Godel-number equality.
class RegisterVector {
 public:
  RegisterVector() = default;
  explicit RegisterVector(std::vector<std::uint64_t> exponents);

  // 1-based register access; registers past the stored tail read as 0.
  std::uint64_t get(std::size_t reg) const;
  void increment(std::size_t reg);
  // Returns false (and leaves the state untouched) when the register is 0.
  bool decrement(std::size_t reg);

  bool empty() const { return exps_.empty(); }
  std::size_t size() const { return exps_.size(); }
  const std::vector<std::uint64_t>& exponents() const { return exps_; }

  bool operator==(const RegisterVector&) const = default;

 private:
  void strip_trailing_zeros();

  std::vector<std::uint64_t> exps_;
};

/// Product of nth_prime(k)^regs[k]; the empty vector encodes 1.
BigInt encode(const RegisterVector& regs);

/// Exponent vector of the prime factorization of value (value >= 1).
/// With max_registers set, a prime factor beyond that register bound throws
/// std::out_of_range; the default is full factorization with no bound.
RegisterVector decode(const BigInt& value,
                      std::optional<std::size_t> max_registers = std::nullopt);

}  // namespace budge::godel
