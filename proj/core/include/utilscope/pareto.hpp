#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace utilscope {

// A named point under a metric pair. Both axes maximize; callers negate a
// metric to minimize it.
struct MetricPoint {
  std::string id;
  double x = 0.0;
  double y = 0.0;

  bool operator==(const MetricPoint&) const = default;
};

// Non-dominated subset of a point set. A point is dominated iff some other
// point is at least as good on both axes and strictly better on one; ties
// on both axes keep every tied point.
struct ParetoFrontier {
  std::string metric_x = "x";
  std::string metric_y = "y";
  std::vector<MetricPoint> points;  // sorted by ascending x

  bool contains(std::string_view id) const;
  std::vector<std::string> member_ids() const;
};

ParetoFrontier frontier(std::span<const MetricPoint> points, std::string metric_x = "x",
                        std::string metric_y = "y");

// Area of the union of rectangles spanned from `reference` to each point.
// The reference must be dominated by every point.
double hypervolume(std::span<const MetricPoint> frontier_points,
                   const MetricPoint& reference);

// One row of the measured-model survey table.
struct ModelRecord {
  std::string name;
  double accuracy = 0.0;        // percent
  double throughput = 0.0;      // images/sec
  double tflops_per_sec = 0.0;  // sustained TFLOPs/sec
};

// Membership of one model in the three two-dimensional frontiers, with
// utilization taken as tflops_per_sec / 100.
struct FrontierMembership {
  std::string name;
  bool on_throughput_accuracy = false;
  bool on_utilization_accuracy = false;
  bool on_throughput_utilization = false;
};

std::vector<FrontierMembership> frontier_membership(std::span<const ModelRecord> table);

// Incrementally maintained frontier, equivalent at every step to calling
// frontier() on everything inserted so far.
class RunningFrontier {
 public:
  // Returns true iff the point joins the frontier (it may evict members).
  bool insert(MetricPoint point);
  const std::vector<MetricPoint>& points() const { return points_; }
  ParetoFrontier finish(std::string metric_x, std::string metric_y) const;

 private:
  std::vector<MetricPoint> points_;  // unordered
};

}  // namespace utilscope
