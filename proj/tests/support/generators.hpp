// Seeded random program and state generators shared by the property tests.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "budge/godel.hpp"
#include "budge/pl.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline std::uint64_t pick(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

struct ProgramShape {
  std::size_t max_depth = 3;
  std::uint64_t max_register = 4;
  std::size_t max_length = 8;
};

inline budge::pl::Sequence gen_sequence(Rng& rng, const ProgramShape& shape,
                                        std::size_t depth) {
  budge::pl::Sequence out;
  std::size_t length = pick(rng, 1, shape.max_length);
  for (std::size_t i = 0; i < length; ++i) {
    std::uint64_t reg = pick(rng, 1, shape.max_register);
    std::uint64_t choice = pick(rng, 0, depth < shape.max_depth ? 3 : 2);
    switch (choice) {
      case 0:
      case 1:
        out.push_back(budge::pl::Instruction::incr(reg));
        break;
      case 2:
        out.push_back(budge::pl::Instruction::decr(reg));
        break;
      default: {
        ProgramShape inner = shape;
        inner.max_length = std::max<std::size_t>(1, shape.max_length / 2);
        out.push_back(budge::pl::Instruction::loop(
            reg, gen_sequence(rng, inner, depth + 1)));
        break;
      }
    }
  }
  return out;
}

inline budge::pl::Sequence gen_program(Rng& rng, const ProgramShape& shape = {}) {
  return gen_sequence(rng, shape, 1);
}

inline budge::godel::RegisterVector gen_state(Rng& rng,
                                              std::size_t max_registers = 4,
                                              std::uint64_t max_entry = 4) {
  std::vector<std::uint64_t> exps(pick(rng, 0, max_registers));
  for (auto& e : exps) e = pick(rng, 0, max_entry);
  return budge::godel::RegisterVector(std::move(exps));
}

// Programs inside the two-register embedding: registers 1 and 2 only, loops
// on register 2 only.
inline budge::pl::Sequence gen_bridge_sequence(Rng& rng, std::size_t depth,
                                               std::size_t max_depth,
                                               std::size_t max_length) {
  budge::pl::Sequence out;
  std::size_t length = pick(rng, depth == 0 ? 0 : 1, max_length);
  for (std::size_t i = 0; i < length; ++i) {
    std::uint64_t choice = pick(rng, 0, depth < max_depth ? 4 : 3);
    switch (choice) {
      case 0:
        out.push_back(budge::pl::Instruction::incr(1));
        break;
      case 1:
        out.push_back(budge::pl::Instruction::incr(2));
        break;
      case 2:
        out.push_back(budge::pl::Instruction::decr(1));
        break;
      case 3:
        out.push_back(budge::pl::Instruction::decr(2));
        break;
      default:
        out.push_back(budge::pl::Instruction::loop(
            2, gen_bridge_sequence(rng, depth + 1, max_depth,
                                   std::max<std::size_t>(1, max_length - 1))));
        break;
    }
  }
  return out;
}

}  // namespace testsupport
