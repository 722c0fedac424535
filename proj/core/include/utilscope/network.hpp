#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "utilscope/shapes.hpp"

namespace utilscope {

enum class LayerKind { conv2d, depthwise_conv2d, dense, global_pool, elementwise };
enum class Padding { same, valid };

std::string_view to_string(LayerKind kind);
std::string_view to_string(Padding padding);
LayerKind layer_kind_from_string(std::string_view name);
Padding padding_from_string(std::string_view name);

// One layer of a network. Which fields are meaningful depends on `kind`:
// conv2d/depthwise_conv2d use the channel/kernel/stride/padding block,
// dense uses in_features/out_features, global_pool and elementwise carry
// no parameters of their own. `fused_activation` marks that a following
// non-linearity is fused into this layer; on an elementwise layer it means
// the layer itself has been fused away and contributes no cost.
struct LayerSpec {
  LayerKind kind = LayerKind::elementwise;

  std::int64_t in_channels = 0;
  std::int64_t out_channels = 0;
  std::int64_t kernel_h = 0;
  std::int64_t kernel_w = 0;
  std::int64_t stride = 1;
  Padding padding = Padding::same;

  std::int64_t in_features = 0;
  std::int64_t out_features = 0;

  bool bias = false;
  bool fused_activation = false;

  static LayerSpec conv2d(std::int64_t in, std::int64_t out, std::int64_t kh,
                          std::int64_t kw, std::int64_t stride = 1,
                          Padding padding = Padding::same, bool bias = false,
                          bool fused_activation = false);
  static LayerSpec depthwise_conv2d(std::int64_t channels, std::int64_t kh,
                                    std::int64_t kw, std::int64_t stride = 1,
                                    Padding padding = Padding::same, bool bias = false,
                                    bool fused_activation = false);
  static LayerSpec dense(std::int64_t in, std::int64_t out, bool bias = false,
                         bool fused_activation = false);
  static LayerSpec global_pool();
  static LayerSpec elementwise(bool fused_activation = false);

  // Layers that declare channel/feature widths of their own.
  bool has_width() const {
    return kind == LayerKind::conv2d || kind == LayerKind::depthwise_conv2d ||
           kind == LayerKind::dense;
  }
  std::int64_t input_width() const {
    return kind == LayerKind::dense ? in_features : in_channels;
  }
  std::int64_t output_width() const {
    return kind == LayerKind::dense ? out_features : out_channels;
  }

  bool operator==(const LayerSpec&) const = default;
};

// An ordered layer graph plus the input it consumes. `input.n` is a
// placeholder; analyses thread their own batch size through the chain.
struct NetworkSpec {
  std::string name;
  TensorShape input;
  ScalarWidth scalar_width = ScalarWidth::half();
  std::vector<LayerSpec> layers;

  bool operator==(const NetworkSpec&) const = default;
};

void validate(const LayerSpec& layer);

// Checks per-layer invariants and that the shape chain is well defined
// end to end (throws ShapeError naming the offending layer index).
void validate(const NetworkSpec& net);

}  // namespace utilscope
