#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "utilscope/network.hpp"
#include "utilscope/roofline.hpp"

namespace utilscope {

// An architecture identified by its per-layer channel counts.
using ArchId = std::vector<std::int64_t>;

std::string arch_to_string(const ArchId& arch);        // "8:24:64:16:32"
ArchId arch_from_string(std::string_view text);

// One architecture with its tabulated metrics. Utilization is always the
// roofline identity throughput * flops_per_input / device peak.
struct Candidate {
  ArchId arch;
  double accuracy = 0.0;          // percent, [0, 100]
  double throughput = 0.0;        // inputs/sec
  double flops_per_input = 0.0;   // FLOPs
  double utilization_fraction = 0.0;
};

// Constants of the synthetic candidate generator. Accuracy follows
// a + b * ln(flops_per_input) plus Gaussian noise keyed per architecture,
// clamped to [0, 100]; throughput is a fixed fraction of the roofline
// bound, which keeps every candidate under that fraction of peak.
struct SyntheticSpaceConfig {
  std::int64_t layer_count = 5;
  std::vector<std::int64_t> channel_choices = {8, 16, 24, 32, 40, 48, 56, 64};
  std::int64_t batch = 256;
  double accuracy_base = 40.0;       // a
  double accuracy_log_slope = 4.0;   // b
  double accuracy_noise_sigma = 1.0;
  double throughput_efficiency = 0.6;
};

// Full Cartesian product of the channel choices, lexicographic order.
std::vector<ArchId> enumerate_size_space(std::int64_t layer_count,
                                         std::span<const std::int64_t> choices);

// The fixed network template the synthetic space instantiates: five 3x3
// convolutions with searchable widths over an 8x8 3-channel input, then a
// global pool and a 10-way classifier head.
NetworkSpec space_template_network(const ArchId& arch);

// Deterministic in (arch, seed): same inputs, same Candidate. Changing
// the seed changes only the accuracy noise.
Candidate synthetic_oracle(const ArchId& arch, std::uint64_t seed,
                           const DeviceSpec& device,
                           const SyntheticSpaceConfig& cfg = {});

// A search space whose metrics are precomputed lookups.
struct TabularSpace {
  std::int64_t layer_count = 0;
  std::vector<std::int64_t> channel_choices;
  std::vector<Candidate> candidates;  // lexicographic arch order
  DeviceSpec device;

  const Candidate* find(const ArchId& arch) const;
};

// Enumerates the whole synthetic space.
TabularSpace synthetic_space(std::uint64_t seed, const DeviceSpec& device,
                             const SyntheticSpaceConfig& cfg = {});

// Reads a benchmark table CSV (header: arch,accuracy,throughput,
// flops_per_input). Utilization is recomputed against `device`; schema
// violations name the offending row and column.
TabularSpace load_table(const std::filesystem::path& path, const DeviceSpec& device);

// Writes a space back out in the same schema, full round-trip precision.
void save_table(const TabularSpace& space, const std::filesystem::path& path,
                std::span<const std::string> comment_lines = {});

}  // namespace utilscope
