#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "utilscope/pareto.hpp"

namespace utilscope {

inline const std::vector<std::string> kModelTableHeader = {
    "name", "accuracy", "throughput", "tflops_per_sec"};

// Survey table rows plus their original cell text, so emitted tables can
// echo input numbers byte for byte.
struct ModelTable {
  std::vector<ModelRecord> records;
  std::vector<std::vector<std::string>> raw_cells;
};

ModelTable read_model_table(const std::filesystem::path& path);

// Writes the table back out with the three frontier membership columns
// (1/0) appended to each row.
void write_membership_csv(const ModelTable& table,
                          std::span<const FrontierMembership> marks,
                          const std::filesystem::path& path,
                          std::span<const std::string> comment_lines = {});

// Frontier CSV: header "id,<metric_x>,<metric_y>", full-precision values.
void write_frontier_csv(const ParetoFrontier& frontier,
                        const std::filesystem::path& path,
                        std::span<const std::string> comment_lines = {});
ParetoFrontier read_frontier_csv(const std::filesystem::path& path);

}  // namespace utilscope
