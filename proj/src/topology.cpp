#include "rlhfsim/topology.hpp"

#include <algorithm>
#include <set>

#include "rlhfsim/errors.hpp"

namespace rlhfsim {

ClusterTopology ClusterTopology::build(const TopologySpec& spec) {
  if (spec.groups.empty()) throw ConfigError("topology: at least one node group required");
  if (spec.intra_node_bw < spec.inter_node_bw)
    throw ConfigError("topology: intra_node_bw must be >= inter_node_bw");
  ClusterTopology t;
  t.intra_ = spec.intra_node_bw;
  t.inter_ = spec.inter_node_bw;
  t.intertype_ = spec.inter_type_bw;
  int node = 0;
  for (const auto& g : spec.groups) {
    if (g.nodes < 1 || g.devices_per_node < 1)
      throw ConfigError("topology: each group needs >=1 node and >=1 device per node");
    if (g.memory_bytes <= 0 || g.peak_flops <= 0 || g.hbm_bandwidth <= 0)
      throw ConfigError("topology: device memory, flops and hbm bandwidth must be positive");
    for (int n = 0; n < g.nodes; ++n) {
      for (int d = 0; d < g.devices_per_node; ++d) {
        DeviceSpec dev;
        dev.id = static_cast<int>(t.devices_.size());
        dev.node_id = node;
        dev.kind = g.kind;
        dev.memory_bytes = g.memory_bytes;
        dev.peak_flops = g.peak_flops;
        dev.hbm_bandwidth = g.hbm_bandwidth;
        t.devices_.push_back(dev);
      }
      ++node;
    }
  }
  t.node_count_ = node;
  return t;
}

const DeviceSpec& ClusterTopology::device(int id) const {
  if (id < 0 || id >= static_cast<int>(devices_.size()))
    throw ConfigError("topology: unknown device id " + std::to_string(id));
  return devices_[id];
}

std::vector<int> ClusterTopology::node_devices(int node_id) const {
  std::vector<int> out;
  for (const auto& d : devices_)
    if (d.node_id == node_id) out.push_back(d.id);
  return out;
}

int ClusterTopology::node_width(int node_id) const {
  int w = 0;
  for (const auto& d : devices_)
    if (d.node_id == node_id) ++w;
  return w;
}

double ClusterTopology::bandwidth_between(int a, int b) const {
  if (a == b) throw ConfigError("bandwidth_between: endpoints must differ");
  const DeviceSpec& da = device(a);
  const DeviceSpec& db = device(b);
  if (da.kind != db.kind) return intertype_;
  if (da.node_id == db.node_id) return intra_;
  return inter_;
}

double ClusterTopology::group_min_bandwidth(const std::vector<int>& group) const {
  if (group.size() < 2) throw ConfigError("group_min_bandwidth: group must have >=2 devices");
  std::vector<int> ring(group);
  std::sort(ring.begin(), ring.end());  // node-major = id order
  double mn = bandwidth_between(ring[0], ring[1]);
  for (size_t i = 0; i < ring.size(); ++i) {
    int a = ring[i], b = ring[(i + 1) % ring.size()];
    if (a != b) mn = std::min(mn, bandwidth_between(a, b));
  }
  return mn;
}

}  // namespace rlhfsim
