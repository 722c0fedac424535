#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "utilscope/network.hpp"
#include "utilscope/shapes.hpp"

namespace utilscope {

// FLOP and byte-traffic decomposition of one layer. Memory traffic splits
// into the three terms of the per-layer intensity quotient: input
// activations read, weights read, output activations written.
struct LayerCost {
  std::int64_t flops = 0;
  std::int64_t input_bytes = 0;
  std::int64_t weight_bytes = 0;
  std::int64_t output_bytes = 0;

  std::int64_t total_bytes() const { return input_bytes + weight_bytes + output_bytes; }
  bool operator==(const LayerCost&) const = default;
};

struct CostSummary {
  std::vector<LayerCost> per_layer;
  std::int64_t total_flops = 0;
  std::int64_t total_bytes = 0;
  double aggregate_intensity = 0.0;  // total_flops / total_bytes
  double flops_per_image = 0.0;      // total_flops / batch
};

// Shape produced by a layer. Conv spatial dims follow the usual stride
// arithmetic (same: ceil(in/stride); valid: floor((in-k)/stride)+1);
// dense and global_pool collapse spatial dims to 1x1.
TensorShape output_shape(const LayerSpec& layer, const TensorShape& input);

// Cost of one layer on a given input. A multiply-accumulate counts as
// 2 FLOPs. Fused activations add no bytes and no FLOPs; an elementwise
// layer that is itself fused contributes nothing at all.
LayerCost layer_cost(const LayerSpec& layer, const TensorShape& input, ScalarWidth width);

// Per-layer costs with `batch` threaded through the shape chain, plus
// aggregate totals.
CostSummary network_cost(const NetworkSpec& net, std::int64_t batch);

// FLOPs per byte. Errors when total bytes is zero.
double arithmetic_intensity(const LayerCost& cost);
double arithmetic_intensity(const CostSummary& cost);

struct BatchSweepPoint {
  std::int64_t batch = 1;
  double aggregate_intensity = 0.0;
};

struct BatchSweep {
  std::vector<BatchSweepPoint> points;
  // Large-batch limit: flops per image / activation bytes per image.
  // The weight-read term amortizes away as batch grows.
  double asymptote = 0.0;
};

BatchSweep batch_sweep(const NetworkSpec& net, std::span<const std::int64_t> batches);

}  // namespace utilscope
