#pragma once

#include <cstdint>
#include <optional>

#include "utilscope/cost_model.hpp"
#include "utilscope/network.hpp"

namespace utilscope {

// Parameters of the folding transform. With no rounding multiple set the
// fold factor must have an integral square root so every scaled width is
// exact; with `round_widths_to = m` scaled widths are rounded half-up to
// the nearest multiple of m (m = 8 keeps widths tensor-core aligned).
struct FoldingConfig {
  std::int64_t f = 1;
  std::optional<std::int64_t> round_widths_to;
};

struct FoldedNetwork {
  NetworkSpec net;
  std::int64_t batch = 1;
};

// Folds a network: the batch shrinks by f, the f inputs of each group are
// stacked along the channel dimension (first weighted layer consumes f
// times its input channels), and every other channel/feature width scales
// by sqrt(f). The final conv/dense head keeps its output width so the
// folded net emits one prediction per stack of f images.
FoldedNetwork fold_network(const NetworkSpec& net, std::int64_t batch,
                           const FoldingConfig& cfg);

struct FoldingReport {
  CostSummary original;
  CostSummary folded;
  double flops_ratio = 1.0;      // folded / original
  double bytes_ratio = 1.0;      // folded / original
  double intensity_ratio = 1.0;  // folded / original
};

// Costs the network at `batch` and its folded form at `batch / f` and
// reports the change.
FoldingReport folding_report(const NetworkSpec& net, std::int64_t batch,
                             const FoldingConfig& cfg);

}  // namespace utilscope
