#pragma once

#include <string>
#include <vector>

namespace rlhfsim {

struct DeviceSpec {
  int id = 0;
  int node_id = 0;
  std::string kind;
  double memory_bytes = 0;
  double peak_flops = 0;
  double hbm_bandwidth = 0;
};

// One homogeneous block of nodes in the cluster description.
struct NodeGroupSpec {
  int nodes = 1;
  int devices_per_node = 1;
  std::string kind = "A100";
  double memory_bytes = 80e9;
  double peak_flops = 312e12;
  double hbm_bandwidth = 2.0e12;
};

struct TopologySpec {
  std::vector<NodeGroupSpec> groups;
  double intra_node_bw = 600e9;
  double inter_node_bw = 100e9;
  double inter_type_bw = 25e9;
};

// Immutable after construction; device ids are dense 0..n-1 in node-major order.
class ClusterTopology {
 public:
  static ClusterTopology build(const TopologySpec& spec);

  const std::vector<DeviceSpec>& devices() const { return devices_; }
  const DeviceSpec& device(int id) const;
  int device_count() const { return static_cast<int>(devices_.size()); }
  int node_count() const { return node_count_; }
  std::vector<int> node_devices(int node_id) const;
  int node_width(int node_id) const;

  double intra_node_bw() const { return intra_; }
  double inter_node_bw() const { return inter_; }
  double inter_type_bw() const { return intertype_; }

  double bandwidth_between(int a, int b) const;
  // Minimum link bandwidth on a node-major ring over the group.
  double group_min_bandwidth(const std::vector<int>& group) const;

 private:
  std::vector<DeviceSpec> devices_;
  int node_count_ = 0;
  double intra_ = 0, inter_ = 0, intertype_ = 0;
};

}  // namespace rlhfsim
