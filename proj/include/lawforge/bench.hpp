#pragma once

#include <cstdint>
#include <random>

#include "lawforge/derive.hpp"

namespace lawforge {

struct BenchResult {
  std::uint64_t pairs = 0;
  std::uint64_t mismatches = 0;
  double generic_ops_per_sec = 0.0;
  double direct_ops_per_sec = 0.0;
  std::uint64_t checksum = 0;  // keeps the timed loops observable
};

// Seeded pseudo-random inhabitant; recursive constructors only while budget
// lasts. Reproducible: raw engine draws, no distribution objects.
Value random_value(const Schema& schema, const TypeExpr& ground, std::mt19937_64& rng,
                   int budget);

// Generates n seeded value pairs, times the derived and the direct
// comparator over them, and counts disagreements. Eq and Ord only.
BenchResult run_bench(const Schema& schema, const std::string& type_name,
                      const std::vector<TypeExpr>& ground_args, Concept c, std::uint64_t n,
                      std::uint64_t seed);

}  // namespace lawforge
