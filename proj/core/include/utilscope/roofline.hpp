#pragma once

#include <cstdint>
#include <string>

#include "utilscope/cost_model.hpp"
#include "utilscope/network.hpp"

namespace utilscope {

// Peak compute rate and memory bandwidth of a device.
struct DeviceSpec {
  std::string name;
  double peak_flops_per_sec = 0.0;
  double mem_bandwidth_bytes_per_sec = 0.0;

  bool operator==(const DeviceSpec&) const = default;
};

void validate(const DeviceSpec& device);

// Bundled preset: V100 with the FP16 tensor-core peak of 100 TFLOPs/sec
// and the bandwidth that puts its compute-to-memory ratio at exactly 139.
DeviceSpec v100_fp16();

// Compute-to-memory-bandwidth ratio: peak FLOPs/sec over bytes/sec.
double cmr(const DeviceSpec& device);

// True iff intensity strictly exceeds the device CMR.
bool is_compute_bound(double intensity, const DeviceSpec& device);

// Roofline bound: min(peak, intensity * bandwidth).
double attainable_flops(double intensity, const DeviceSpec& device);

// Optimistic upper bound on images/sec: roofline-attainable FLOPs/sec at
// the network's aggregate intensity, divided by its per-image FLOPs.
double predicted_throughput(const NetworkSpec& net, std::int64_t batch,
                            const DeviceSpec& device);

// Sustained compute rate as a fraction of peak. The fraction is not
// clamped: values above 1 flag inconsistent inputs rather than hiding
// them. `compute_bound` records whether the estimate sits at the roof.
struct UtilizationEstimate {
  double achieved_flops_per_sec = 0.0;
  double utilization_fraction = 0.0;
  bool compute_bound = false;
};

// Measurement-style utilization: throughput times per-image FLOPs over
// the device peak.
UtilizationEstimate utilization_from_throughput(double throughput,
                                                double flops_per_image,
                                                const DeviceSpec& device);

// Model-style utilization of a network from the roofline bound.
UtilizationEstimate predict_utilization(const NetworkSpec& net, std::int64_t batch,
                                        const DeviceSpec& device);

}  // namespace utilscope
