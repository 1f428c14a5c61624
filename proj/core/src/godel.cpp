#include "budge/godel.hpp"

#include <mutex>

namespace budge::godel {

namespace {

std::mutex prime_mutex;
std::vector<std::uint64_t> prime_memo = {2, 3, 5, 7, 11, 13};

// Trial division against the memoized primes. Candidates are scanned in
// order, so the memo always holds every prime below its last entry and the
// sqrt bound is covered.
bool is_prime_vs_memo(std::uint64_t candidate) {
  for (std::uint64_t p : prime_memo) {
    if (p * p > candidate) break;
    if (candidate % p == 0) return false;
  }
  return true;
}

}  // namespace

std::uint64_t nth_prime(std::size_t n) {
  if (n == 0) throw std::invalid_argument("nth_prime: index is 1-based");
  std::lock_guard<std::mutex> lock(prime_mutex);
  while (prime_memo.size() < n) {
    std::uint64_t candidate = prime_memo.back();
    do {
      candidate += 2;
    } while (!is_prime_vs_memo(candidate));
    prime_memo.push_back(candidate);
  }
  return prime_memo[n - 1];
}

RegisterVector::RegisterVector(std::vector<std::uint64_t> exponents)
    : exps_(std::move(exponents)) {
  strip_trailing_zeros();
}

std::uint64_t RegisterVector::get(std::size_t reg) const {
  if (reg == 0) throw std::invalid_argument("registers are 1-based");
  return reg <= exps_.size() ? exps_[reg - 1] : 0;
}

void RegisterVector::increment(std::size_t reg) {
  if (reg == 0) throw std::invalid_argument("registers are 1-based");
  if (reg > exps_.size()) exps_.resize(reg, 0);
  ++exps_[reg - 1];
}

bool RegisterVector::decrement(std::size_t reg) {
  if (reg == 0) throw std::invalid_argument("registers are 1-based");
  if (reg > exps_.size() || exps_[reg - 1] == 0) return false;
  --exps_[reg - 1];
  if (reg == exps_.size()) strip_trailing_zeros();
  return true;
}

void RegisterVector::strip_trailing_zeros() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

BigInt encode(const RegisterVector& regs) {
  BigInt result = 1;
  BigInt power;
  for (std::size_t k = 1; k <= regs.size(); ++k) {
    std::uint64_t e = regs.get(k);
    if (e == 0) continue;
    mpz_ui_pow_ui(power.get_mpz_t(), nth_prime(k), e);
    result *= power;
  }
  return result;
}

RegisterVector decode(const BigInt& value,
                      std::optional<std::size_t> max_registers) {
  if (value < 1) throw std::invalid_argument("decode: value must be >= 1");
  std::vector<std::uint64_t> exps;
  BigInt rest = value;
  for (std::size_t k = 1; rest != 1; ++k) {
    if (max_registers && k > *max_registers)
      throw std::out_of_range(
          "decode: prime factor beyond register bound " +
          std::to_string(*max_registers));
    std::uint64_t p = nth_prime(k);
    std::uint64_t e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    exps.push_back(e);
  }
  return RegisterVector(std::move(exps));
}

}  // namespace budge::godel
