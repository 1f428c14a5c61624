#include "budge/godel.hpp"

#include <doctest.h>

#include <thread>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace budge::godel;

TEST_CASE("nth_prime matches the sieve oracle") {
  CHECK(nth_prime(1) == 2);
  CHECK(nth_prime(3) == 5);
  CHECK(nth_prime(10) == 29);  // 10th entry of the sieve up to 100

  auto oracle = testsupport::sieve_primes(1000);
  for (std::size_t n = 1; n <= oracle.size(); ++n)
    CHECK(nth_prime(n) == oracle[n - 1]);
}

TEST_CASE("nth_prime rejects index 0") {
  CHECK_THROWS_AS(nth_prime(0), std::invalid_argument);
}

TEST_CASE("nth_prime is strictly increasing and prime") {
  std::uint64_t previous = 1;
  for (std::size_t n = 1; n <= 200; ++n) {
    std::uint64_t p = nth_prime(n);
    CHECK(p > previous);
    CHECK(testsupport::trial_division_is_prime(p));
    previous = p;
  }
}

TEST_CASE("nth_prime is safe to call concurrently") {
  std::vector<std::thread> threads;
  std::vector<std::uint64_t> results(4);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&results, t] {
      std::uint64_t sum = 0;
      for (std::size_t n = 1; n <= 400; ++n) sum += nth_prime(n);
      results[t] = sum;
    });
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) CHECK(results[t] == results[0]);
}

TEST_CASE("register vectors stay canonical") {
  RegisterVector v(std::vector<std::uint64_t>{1, 0, 2, 0, 0});
  CHECK(v.size() == 3);
  CHECK(v.get(2) == 0);
  CHECK(v.get(9) == 0);

  v.increment(5);
  CHECK(v.size() == 5);
  CHECK(v.decrement(5));
  CHECK(v.size() == 3);  // trailing zeros stripped again

  CHECK_FALSE(v.decrement(2));
  CHECK(v == RegisterVector(std::vector<std::uint64_t>{1, 0, 2}));

  CHECK(RegisterVector().empty());
}

TEST_CASE("encode examples") {
  CHECK(encode(RegisterVector({1, 2, 3})) == 2250);
  CHECK(encode(RegisterVector()) == 1);
  CHECK(encode(RegisterVector({3, 3})) == 216);
}

TEST_CASE("decode examples") {
  CHECK(decode(2250) == RegisterVector({1, 2, 3}));
  CHECK(decode(1) == RegisterVector());
  CHECK(decode(64) == RegisterVector({6}));
}

TEST_CASE("decode rejects values below 1") {
  CHECK_THROWS_AS(decode(0), std::invalid_argument);
}

TEST_CASE("decode honors the register bound") {
  CHECK_THROWS_AS(decode(7, 2), std::out_of_range);  // 7 = p(4)
  CHECK(decode(12, 2) == RegisterVector({2, 1}));
  CHECK(decode(7, 4) == RegisterVector({0, 0, 0, 1}));
}

TEST_CASE("decode inverts encode on canonical vectors") {
  testsupport::Rng rng(0xb1d6e);
  for (int i = 0; i < 200; ++i) {
    RegisterVector v = testsupport::gen_state(rng, 6, 16);
    CHECK(decode(encode(v)) == v);
  }
}

TEST_CASE("encode is multiplicative over pointwise addition") {
  testsupport::Rng rng(0xfeed);
  for (int i = 0; i < 200; ++i) {
    RegisterVector v = testsupport::gen_state(rng, 5, 8);
    RegisterVector w = testsupport::gen_state(rng, 5, 8);
    RegisterVector sum(
        testsupport::pointwise_add(v.exponents(), w.exponents()));
    CHECK(encode(sum) == encode(v) * encode(w));
  }
}
