#include "utilscope/folding.hpp"

#include <cmath>
#include <format>
#include <optional>

#include "utilscope/errors.hpp"

namespace utilscope {

namespace {

// Integer square root of f when f is a perfect square.
std::optional<std::int64_t> exact_sqrt(std::int64_t f) {
  auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(f))));
  for (std::int64_t candidate : {root - 1, root, root + 1}) {
    if (candidate >= 0 && candidate * candidate == f) return candidate;
  }
  return std::nullopt;
}

// Round half up to the nearest positive multiple of m.
std::int64_t round_to_multiple(double value, std::int64_t m) {
  auto units = static_cast<std::int64_t>(std::floor(value / static_cast<double>(m) + 0.5));
  return std::max<std::int64_t>(1, units) * m;
}

}  // namespace

FoldedNetwork fold_network(const NetworkSpec& net, std::int64_t batch,
                           const FoldingConfig& cfg) {
  if (cfg.f < 1) {
    throw ValidationError(std::format("fold factor must be >= 1, got {}", cfg.f));
  }
  if (cfg.round_widths_to && *cfg.round_widths_to < 1) {
    throw ValidationError(std::format("width rounding multiple must be >= 1, got {}",
                                      *cfg.round_widths_to));
  }
  if (batch < 1) {
    throw ValidationError(std::format("batch must be >= 1, got {}", batch));
  }
  validate(net);
  if (batch % cfg.f != 0) {
    throw ValidationError(std::format(
        "batch {} is not divisible by fold factor {}", batch, cfg.f));
  }
  if (cfg.f == 1) {
    return {net, batch};  // identity, widths untouched even when rounding is set
  }

  const std::optional<std::int64_t> root = exact_sqrt(cfg.f);
  if (!cfg.round_widths_to && !root) {
    throw ValidationError(std::format(
        "fold factor {} has no integral square root; set a width rounding multiple",
        cfg.f));
  }
  const double scale_factor = std::sqrt(static_cast<double>(cfg.f));
  auto scale_width = [&](std::int64_t width) -> std::int64_t {
    if (cfg.round_widths_to) {
      return round_to_multiple(static_cast<double>(width) * scale_factor,
                               *cfg.round_widths_to);
    }
    return width * *root;
  };

  // The first weighted layer absorbs the f-way channel stacking; the last
  // conv/dense layer is the classifier head and keeps its output width.
  std::optional<std::size_t> first_weighted;
  std::optional<std::size_t> head;
  for (std::size_t i = 0; i < net.layers.size(); ++i) {
    const LayerSpec& layer = net.layers[i];
    if (layer.has_width() && !first_weighted) first_weighted = i;
    if (layer.kind == LayerKind::conv2d || layer.kind == LayerKind::dense) head = i;
  }
  if (first_weighted &&
      net.layers[*first_weighted].kind == LayerKind::depthwise_conv2d) {
    throw ValidationError(
        "cannot fold: the first weighted layer is depthwise, so it cannot "
        "absorb channel-stacked inputs");
  }

  FoldedNetwork result;
  result.batch = batch / cfg.f;
  result.net = net;
  result.net.input.c *= cfg.f;
  for (std::size_t i = 0; i < result.net.layers.size(); ++i) {
    LayerSpec& layer = result.net.layers[i];
    if (!layer.has_width()) continue;
    if (layer.kind == LayerKind::dense) {
      layer.in_features = (i == *first_weighted) ? layer.in_features * cfg.f
                                                 : scale_width(layer.in_features);
      if (i != *head) layer.out_features = scale_width(layer.out_features);
    } else {
      layer.in_channels = (i == *first_weighted) ? layer.in_channels * cfg.f
                                                 : scale_width(layer.in_channels);
      if (!head || i != *head) layer.out_channels = scale_width(layer.out_channels);
    }
  }
  try {
    validate(result.net);
  } catch (const ValidationError& e) {
    throw ValidationError(std::format("folded network is not well-formed: {}",
                                      e.what()));
  }
  return result;
}

FoldingReport folding_report(const NetworkSpec& net, std::int64_t batch,
                             const FoldingConfig& cfg) {
  const FoldedNetwork folded = fold_network(net, batch, cfg);
  FoldingReport report;
  report.original = network_cost(net, batch);
  report.folded = network_cost(folded.net, folded.batch);
  report.flops_ratio = static_cast<double>(report.folded.total_flops) /
                       static_cast<double>(report.original.total_flops);
  report.bytes_ratio = static_cast<double>(report.folded.total_bytes) /
                       static_cast<double>(report.original.total_bytes);
  report.intensity_ratio =
      report.folded.aggregate_intensity / report.original.aggregate_intensity;
  return report;
}

}  // namespace utilscope
