#include "utilscope/network.hpp"

#include <format>

#include "utilscope/cost_model.hpp"
#include "utilscope/errors.hpp"

namespace utilscope {

void validate(const TensorShape& shape) {
  if (shape.n < 1 || shape.c < 1 || shape.h < 1 || shape.w < 1) {
    throw ValidationError(std::format(
        "tensor shape ({},{},{},{}) has a dimension below 1", shape.n, shape.c,
        shape.h, shape.w));
  }
}

void validate(const ScalarWidth& width) {
  auto b = width.bytes_per_scalar;
  if (b != 1 && b != 2 && b != 4 && b != 8) {
    throw ValidationError(
        std::format("bytes_per_scalar must be 1, 2, 4 or 8, got {}", b));
  }
}

std::string_view to_string(LayerKind kind) {
  switch (kind) {
    case LayerKind::conv2d: return "conv2d";
    case LayerKind::depthwise_conv2d: return "depthwise_conv2d";
    case LayerKind::dense: return "dense";
    case LayerKind::global_pool: return "global_pool";
    case LayerKind::elementwise: return "elementwise";
  }
  return "unknown";
}

std::string_view to_string(Padding padding) {
  return padding == Padding::same ? "same" : "valid";
}

LayerKind layer_kind_from_string(std::string_view name) {
  if (name == "conv2d") return LayerKind::conv2d;
  if (name == "depthwise_conv2d") return LayerKind::depthwise_conv2d;
  if (name == "dense") return LayerKind::dense;
  if (name == "global_pool") return LayerKind::global_pool;
  if (name == "elementwise") return LayerKind::elementwise;
  throw ValidationError(std::format("unknown layer kind \"{}\"", name));
}

Padding padding_from_string(std::string_view name) {
  if (name == "same") return Padding::same;
  if (name == "valid") return Padding::valid;
  throw ValidationError(std::format("unknown padding \"{}\" (same|valid)", name));
}

LayerSpec LayerSpec::conv2d(std::int64_t in, std::int64_t out, std::int64_t kh,
                            std::int64_t kw, std::int64_t stride, Padding padding,
                            bool bias, bool fused_activation) {
  LayerSpec layer;
  layer.kind = LayerKind::conv2d;
  layer.in_channels = in;
  layer.out_channels = out;
  layer.kernel_h = kh;
  layer.kernel_w = kw;
  layer.stride = stride;
  layer.padding = padding;
  layer.bias = bias;
  layer.fused_activation = fused_activation;
  return layer;
}

LayerSpec LayerSpec::depthwise_conv2d(std::int64_t channels, std::int64_t kh,
                                      std::int64_t kw, std::int64_t stride,
                                      Padding padding, bool bias,
                                      bool fused_activation) {
  LayerSpec layer = conv2d(channels, channels, kh, kw, stride, padding, bias,
                           fused_activation);
  layer.kind = LayerKind::depthwise_conv2d;
  return layer;
}

LayerSpec LayerSpec::dense(std::int64_t in, std::int64_t out, bool bias,
                           bool fused_activation) {
  LayerSpec layer;
  layer.kind = LayerKind::dense;
  layer.in_features = in;
  layer.out_features = out;
  layer.bias = bias;
  layer.fused_activation = fused_activation;
  return layer;
}

LayerSpec LayerSpec::global_pool() {
  LayerSpec layer;
  layer.kind = LayerKind::global_pool;
  return layer;
}

LayerSpec LayerSpec::elementwise(bool fused_activation) {
  LayerSpec layer;
  layer.kind = LayerKind::elementwise;
  layer.fused_activation = fused_activation;
  return layer;
}

void validate(const LayerSpec& layer) {
  switch (layer.kind) {
    case LayerKind::conv2d:
    case LayerKind::depthwise_conv2d:
      if (layer.in_channels < 1 || layer.out_channels < 1) {
        throw ValidationError(std::format("{}: channel counts must be >= 1",
                                          to_string(layer.kind)));
      }
      if (layer.kernel_h < 1 || layer.kernel_w < 1) {
        throw ValidationError(std::format("{}: kernel dims must be >= 1",
                                          to_string(layer.kind)));
      }
      if (layer.stride < 1) {
        throw ValidationError(
            std::format("{}: stride must be >= 1", to_string(layer.kind)));
      }
      if (layer.kind == LayerKind::depthwise_conv2d &&
          layer.in_channels != layer.out_channels) {
        throw ValidationError(std::format(
            "depthwise_conv2d requires in_channels == out_channels, got {} != {}",
            layer.in_channels, layer.out_channels));
      }
      break;
    case LayerKind::dense:
      if (layer.in_features < 1 || layer.out_features < 1) {
        throw ValidationError("dense: feature counts must be >= 1");
      }
      break;
    case LayerKind::global_pool:
    case LayerKind::elementwise:
      break;
  }
}

void validate(const NetworkSpec& net) {
  validate(net.input);
  validate(net.scalar_width);
  if (net.layers.empty()) {
    throw ValidationError("empty network");
  }
  TensorShape shape = net.input;
  for (std::size_t i = 0; i < net.layers.size(); ++i) {
    try {
      validate(net.layers[i]);
      shape = output_shape(net.layers[i], shape);
    } catch (const ValidationError& e) {
      throw ShapeError(std::format("layer {}: {}", i, e.what()));
    }
  }
}

}  // namespace utilscope
