#pragma once

#include <filesystem>
#include <string>

#include "utilscope/network.hpp"
#include "utilscope/roofline.hpp"

namespace utilscope {

// Network spec document:
//   {"name": ..., "scalar_bytes": 2, "input": {"c":..,"h":..,"w":..},
//    "layers": [{"kind": "conv2d", "in_channels": .., ...,
//                "fused_activation": false}, ...]}
// Parsing is strict: unknown or missing fields are errors.
NetworkSpec network_from_json(const std::string& text);
NetworkSpec load_network(const std::filesystem::path& path);
std::string network_to_json(const NetworkSpec& net);
void save_network(const NetworkSpec& net, const std::filesystem::path& path);

// Device spec document:
//   {"name": ..., "peak_flops_per_sec": ..,
//    "mem_bandwidth_bytes_per_sec": ..}
DeviceSpec device_from_json(const std::string& text);
DeviceSpec load_device(const std::filesystem::path& path);
std::string device_to_json(const DeviceSpec& device);

}  // namespace utilscope
