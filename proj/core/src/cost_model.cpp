#include "utilscope/cost_model.hpp"

#include <format>

#include "utilscope/errors.hpp"

namespace utilscope {

namespace {

std::int64_t conv_out_dim(std::int64_t in, std::int64_t kernel, std::int64_t stride,
                          Padding padding) {
  if (padding == Padding::same) {
    return (in + stride - 1) / stride;  // ceil(in / stride)
  }
  if (kernel > in) {
    throw ShapeError(std::format(
        "valid padding: kernel {} larger than input dim {}", kernel, in));
  }
  return (in - kernel) / stride + 1;
}

}  // namespace

TensorShape output_shape(const LayerSpec& layer, const TensorShape& input) {
  validate(input);
  switch (layer.kind) {
    case LayerKind::conv2d:
    case LayerKind::depthwise_conv2d: {
      if (input.c != layer.in_channels) {
        throw ShapeError(std::format("{} expects {} input channels, got {}",
                                     to_string(layer.kind), layer.in_channels,
                                     input.c));
      }
      TensorShape out = input;
      out.c = layer.out_channels;
      out.h = conv_out_dim(input.h, layer.kernel_h, layer.stride, layer.padding);
      out.w = conv_out_dim(input.w, layer.kernel_w, layer.stride, layer.padding);
      return out;
    }
    case LayerKind::dense: {
      // Dense flattens whatever it is given.
      if (input.c * input.h * input.w != layer.in_features) {
        throw ShapeError(std::format(
            "dense expects {} input features, got {} ({}x{}x{})",
            layer.in_features, input.c * input.h * input.w, input.c, input.h,
            input.w));
      }
      return {input.n, layer.out_features, 1, 1};
    }
    case LayerKind::global_pool:
      return {input.n, input.c, 1, 1};
    case LayerKind::elementwise:
      return input;
  }
  throw ValidationError("unhandled layer kind");
}

LayerCost layer_cost(const LayerSpec& layer, const TensorShape& input,
                     ScalarWidth width) {
  validate(width);
  const TensorShape out = output_shape(layer, input);
  const std::int64_t s = width.bytes_per_scalar;
  LayerCost cost;
  switch (layer.kind) {
    case LayerKind::conv2d: {
      // 2 FLOPs per multiply-accumulate.
      const std::int64_t macs = out.elements() * layer.in_channels *
                                layer.kernel_h * layer.kernel_w;
      cost.flops = 2 * macs;
      cost.weight_bytes =
          layer.out_channels * layer.in_channels * layer.kernel_h * layer.kernel_w * s;
      if (layer.bias) {
        cost.flops += out.elements();
        cost.weight_bytes += layer.out_channels * s;
      }
      cost.input_bytes = input.elements() * s;
      cost.output_bytes = out.elements() * s;
      break;
    }
    case LayerKind::depthwise_conv2d: {
      const std::int64_t macs = out.elements() * layer.kernel_h * layer.kernel_w;
      cost.flops = 2 * macs;
      cost.weight_bytes = layer.out_channels * layer.kernel_h * layer.kernel_w * s;
      if (layer.bias) {
        cost.flops += out.elements();
        cost.weight_bytes += layer.out_channels * s;
      }
      cost.input_bytes = input.elements() * s;
      cost.output_bytes = out.elements() * s;
      break;
    }
    case LayerKind::dense: {
      cost.flops = 2 * input.n * layer.in_features * layer.out_features;
      cost.weight_bytes = layer.in_features * layer.out_features * s;
      if (layer.bias) {
        cost.flops += input.n * layer.out_features;
        cost.weight_bytes += layer.out_features * s;
      }
      cost.input_bytes = input.elements() * s;
      cost.output_bytes = out.elements() * s;
      break;
    }
    case LayerKind::global_pool:
      // 1 FLOP per pooled input element.
      cost.flops = input.elements();
      cost.input_bytes = input.elements() * s;
      cost.output_bytes = out.elements() * s;
      break;
    case LayerKind::elementwise:
      if (!layer.fused_activation) {
        cost.flops = input.elements();
        cost.input_bytes = input.elements() * s;
        cost.output_bytes = out.elements() * s;
      }
      // A fused elementwise layer has been folded into its predecessor
      // and moves no data of its own.
      break;
  }
  return cost;
}

CostSummary network_cost(const NetworkSpec& net, std::int64_t batch) {
  if (batch < 1) {
    throw ValidationError(std::format("batch must be >= 1, got {}", batch));
  }
  validate(net.input);
  validate(net.scalar_width);
  if (net.layers.empty()) {
    throw ValidationError("empty network");
  }

  CostSummary summary;
  summary.per_layer.reserve(net.layers.size());
  TensorShape shape = net.input;
  shape.n = batch;
  for (std::size_t i = 0; i < net.layers.size(); ++i) {
    const LayerSpec& layer = net.layers[i];
    try {
      validate(layer);
      LayerCost cost = layer_cost(layer, shape, net.scalar_width);
      shape = output_shape(layer, shape);
      summary.total_flops += cost.flops;
      summary.total_bytes += cost.total_bytes();
      summary.per_layer.push_back(cost);
    } catch (const ValidationError& e) {
      throw ShapeError(std::format("layer {}: {}", i, e.what()));
    }
  }
  summary.aggregate_intensity =
      summary.total_bytes > 0
          ? static_cast<double>(summary.total_flops) / static_cast<double>(summary.total_bytes)
          : 0.0;
  summary.flops_per_image =
      static_cast<double>(summary.total_flops) / static_cast<double>(batch);
  return summary;
}

double arithmetic_intensity(const LayerCost& cost) {
  if (cost.total_bytes() <= 0) {
    throw ValidationError("arithmetic intensity undefined: zero bytes moved");
  }
  return static_cast<double>(cost.flops) / static_cast<double>(cost.total_bytes());
}

double arithmetic_intensity(const CostSummary& cost) {
  if (cost.total_bytes <= 0) {
    throw ValidationError("arithmetic intensity undefined: zero bytes moved");
  }
  return static_cast<double>(cost.total_flops) / static_cast<double>(cost.total_bytes);
}

BatchSweep batch_sweep(const NetworkSpec& net, std::span<const std::int64_t> batches) {
  if (batches.empty()) {
    throw ValidationError("batch sweep needs at least one batch size");
  }
  BatchSweep sweep;
  sweep.points.reserve(batches.size());
  for (std::int64_t batch : batches) {
    CostSummary summary = network_cost(net, batch);
    sweep.points.push_back({batch, summary.aggregate_intensity});
  }
  // Per-image activation traffic; the weight term vanishes in the limit.
  const CostSummary unit = network_cost(net, 1);
  std::int64_t activation_bytes = 0;
  for (const LayerCost& cost : unit.per_layer) {
    activation_bytes += cost.input_bytes + cost.output_bytes;
  }
  if (activation_bytes > 0) {
    sweep.asymptote = static_cast<double>(unit.total_flops) /
                      static_cast<double>(activation_bytes);
  } else {
    sweep.asymptote = 0.0;
  }
  return sweep;
}

}  // namespace utilscope
