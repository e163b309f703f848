#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smp/instance.hpp"

namespace smp {

struct IterationState {
  int round = 0;
  std::vector<Rational> bounds;  // b^i
  Assignment x;                  // C_F(b^i)
  Assignment y;                  // C_W(x^i)
  std::vector<bool> firms_full;    // F^{i=}, measured on x
  std::vector<bool> workers_full;  // W^{i=}, measured on y
  std::vector<bool> reduced;       // per edge: b^i(e) < b(e)
  bool terminal = false;
};

// Proposals x = C_F(bounds) followed by y = C_W(x).
IterationState make_iteration_state(const Instance& inst, int round, std::vector<Rational> bounds);
IterationState initial_iteration_state(const Instance& inst);
IterationState ordinary_iteration_step(const Instance& inst, const IterationState& state);

struct OrdinaryRun {
  bool terminated = false;
  int iterations = 0;  // number of states computed, including the initial one
  IterationState state;
};

OrdinaryRun run_ordinary(const Instance& inst, int max_iterations);

struct IterationRecord {
  enum class Kind { ordinary, big } kind = Kind::ordinary;
  bool positive = false;
  std::vector<std::string> events;
  std::optional<Rational> eta;     // big iterations
  std::vector<std::string> tight;  // big iterations: attained inequalities
};

struct ModifiedOptions {
  // Hard stop; the flagged bound is 10|E|.
  std::optional<int> max_iterations;
};

struct ModifiedResult {
  Assignment direct;  // output of the iterations
  Assignment x_min;   // after normalization
  int iterations = 0;
  int big_iterations = 0;
  bool within_bound = true;  // iterations <= 10|E|
  int normalization_shifts = 0;
  std::vector<IterationRecord> trace;
};

ModifiedResult solve_xmin_modified(const Instance& inst, const ModifiedOptions& options = {});

Assignment solve_xmin(const Instance& inst);
Assignment solve_xmax(const Instance& inst);
Assignment solve_side_optimal(const Instance& inst, Side side);

struct ExtendedInstance {
  Instance instance;
  int f0 = -1;
  int w0 = -1;
  std::vector<int> base_edge;  // per extended edge: base index or -1
  std::vector<int> a_edges;    // f0 w
  std::vector<int> b_edges;    // f w0
  int f0w0 = -1;
  Rational q_firms;    // Q_F
  Rational q_workers;  // Q_W
};

ExtendedInstance extend_instance(const Instance& inst);
Assignment initial_extended_assignment(const ExtendedInstance& ext);

struct QuotaFillingResult {
  bool quota_filling = false;
  std::optional<Assignment> assignment;
  Assignment y_max;
  int route_length = 0;
};

QuotaFillingResult solve_quota_filling(const Instance& inst);

}  // namespace smp
