#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smp/instance.hpp"

namespace smp {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  int choice_samples = 200;
  int route_seeds = 5;
  int pair_samples = 20;
  int ideal_cap = 20;
};

// Runs the invariant checks of every module on one instance.
std::vector<CheckResult> verify_instance(const Instance& inst, const VerifyOptions& options = {});

}  // namespace smp
