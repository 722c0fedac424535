#include "utilscope/roofline.hpp"

#include <algorithm>
#include <format>

#include "utilscope/errors.hpp"

namespace utilscope {

void validate(const DeviceSpec& device) {
  if (!(device.peak_flops_per_sec > 0.0)) {
    throw ValidationError(std::format("device \"{}\": peak FLOPs/sec must be > 0",
                                      device.name));
  }
  if (!(device.mem_bandwidth_bytes_per_sec > 0.0)) {
    throw ValidationError(std::format(
        "device \"{}\": memory bandwidth must be > 0", device.name));
  }
}

DeviceSpec v100_fp16() {
  // Measured FP16 tensor-core peak; bandwidth back-derived so the
  // compute-to-memory ratio is exactly 139.
  return {"v100-fp16", 100e12, 100e12 / 139.0};
}

double cmr(const DeviceSpec& device) {
  validate(device);
  return device.peak_flops_per_sec / device.mem_bandwidth_bytes_per_sec;
}

bool is_compute_bound(double intensity, const DeviceSpec& device) {
  if (intensity < 0.0) {
    throw ValidationError("intensity must be >= 0");
  }
  return intensity > cmr(device);
}

double attainable_flops(double intensity, const DeviceSpec& device) {
  if (intensity < 0.0) {
    throw ValidationError("intensity must be >= 0");
  }
  validate(device);
  return std::min(device.peak_flops_per_sec,
                  intensity * device.mem_bandwidth_bytes_per_sec);
}

double predicted_throughput(const NetworkSpec& net, std::int64_t batch,
                            const DeviceSpec& device) {
  const CostSummary summary = network_cost(net, batch);
  if (!(summary.flops_per_image > 0.0)) {
    throw ValidationError("network performs no FLOPs; throughput bound undefined");
  }
  return attainable_flops(summary.aggregate_intensity, device) /
         summary.flops_per_image;
}

UtilizationEstimate utilization_from_throughput(double throughput,
                                                double flops_per_image,
                                                const DeviceSpec& device) {
  validate(device);
  if (throughput < 0.0) {
    throw ValidationError("throughput must be >= 0");
  }
  if (!(flops_per_image > 0.0)) {
    throw ValidationError("flops_per_image must be > 0");
  }
  UtilizationEstimate estimate;
  estimate.achieved_flops_per_sec = throughput * flops_per_image;
  estimate.utilization_fraction =
      estimate.achieved_flops_per_sec / device.peak_flops_per_sec;
  estimate.compute_bound =
      estimate.achieved_flops_per_sec >= device.peak_flops_per_sec;
  return estimate;
}

UtilizationEstimate predict_utilization(const NetworkSpec& net, std::int64_t batch,
                                        const DeviceSpec& device) {
  const CostSummary summary = network_cost(net, batch);
  UtilizationEstimate estimate;
  estimate.achieved_flops_per_sec =
      attainable_flops(summary.aggregate_intensity, device);
  estimate.utilization_fraction =
      estimate.achieved_flops_per_sec / device.peak_flops_per_sec;
  estimate.compute_bound = is_compute_bound(summary.aggregate_intensity, device);
  return estimate;
}

}  // namespace utilscope
