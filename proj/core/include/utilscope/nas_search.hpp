#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "utilscope/pareto.hpp"
#include "utilscope/search_space.hpp"

namespace utilscope {

enum class SamplerKind { random, reinforce };
enum class ProxyMetric { utilization, flops };

std::string_view to_string(SamplerKind kind);
std::string_view to_string(ProxyMetric proxy);

// Simulated-time search parameters. Accuracy evaluation is the expensive
// step; the defaults keep the paper's 100:1 cost ratio and budget.
struct SearchConfig {
  double time_budget = 110000.0;   // T_B, simulated time units
  double eval_time_acc = 100.0;    // t_acc
  double eval_time_tput = 1.0;     // t_tput
  double goal_throughput = 175000.0;
  double weight_w = 0.07;
  SamplerKind sampler = SamplerKind::random;
  std::uint64_t seed = 0;
  bool parallel_evals = true;  // per-sample acc/tput evals run concurrently

  double reinforce_learning_rate = 0.01;
  double reinforce_baseline_decay = 0.9;
};

void validate(const SearchConfig& cfg);

// Ranking value (accuracy/100) * (throughput/goal)^w.
double rank(double accuracy, double throughput, double goal, double w);

struct TraceRow {
  double sim_time = 0.0;  // time at which this sample's evaluations complete
  ArchId arch;
  double accuracy = 0.0;
  double throughput = 0.0;
  double rank_value = 0.0;
  bool on_frontier = false;  // joined the running frontier when inserted
};

struct SearchTrace {
  std::vector<TraceRow> rows;
  ParetoFrontier final_frontier;  // throughput-accuracy
  std::int64_t n_acc_evals = 0;
  std::int64_t n_tput_evals = 0;
  bool space_exhausted = false;
  std::string sampler_info;  // sampler kind and hyperparameters
};

// Architecture selection strategy. `next` yields an index into the space's
// candidate list (nullopt once exhausted); `update` feeds back the rank of
// the evaluated sample for samplers that learn.
class Sampler {
 public:
  virtual ~Sampler() = default;
  virtual std::optional<std::size_t> next() = 0;
  virtual void update(std::size_t index, double reward) {}
  virtual std::string describe() const = 0;
};

// Uniform without replacement over unseen candidates.
std::unique_ptr<Sampler> make_random_sampler(const TabularSpace& space,
                                             std::uint64_t seed);

// Per-layer categorical policy over channel choices, updated by REINFORCE
// with an EMA baseline.
std::unique_ptr<Sampler> make_reinforce_sampler(const TabularSpace& space,
                                                std::uint64_t seed,
                                                double learning_rate,
                                                double baseline_decay);

// Sample-based search under the simulated time budget.
SearchTrace run_search(const TabularSpace& space, const SearchConfig& cfg);

// Result of the two-phase filtered search.
struct FilterResult {
  ParetoFrontier proxy_frontier;     // throughput vs. proxy metric
  std::vector<Candidate> evaluated;  // members that received accuracy evaluation
  ParetoFrontier final_frontier;     // throughput-accuracy over `evaluated`
  double time_spent = 0.0;
  std::int64_t n_tput_evals = 0;
  std::int64_t n_acc_evals = 0;
};

// Phase 1 evaluates throughput and the cheap proxy on every candidate and
// takes the Pareto frontier; phase 2 spends the remaining budget on
// accuracy evaluation of frontier members in descending proxy order.
FilterResult approximate_filter_search(const TabularSpace& space,
                                       const SearchConfig& cfg, ProxyMetric proxy);

struct FrontierComparison {
  double hypervolume_a = 0.0;
  double hypervolume_b = 0.0;
  double hypervolume_ratio = 0.0;  // a / b
  // Largest vertical gap from a point of `a` up to b's frontier envelope.
  double max_y_gap = 0.0;
};

FrontierComparison compare_frontiers(const ParetoFrontier& a, const ParetoFrontier& b,
                                     const MetricPoint& reference);

}  // namespace utilscope
