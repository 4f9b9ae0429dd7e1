#pragma once

// Complete weighted host graphs. A host is a symmetric n x n weight matrix
// with zero diagonal plus a kind tag recording how it was built. Metric,
// one-two, tree and point hosts satisfy the triangle inequality by
// construction, so their shortest-path matrix equals the weight matrix;
// general hosts get an explicit all-pairs computation.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "netgame/num.hpp"

namespace netgame {

// Bad input (violated contract, malformed instance). CLI maps this to exit 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Size cap exceeded on an exhaustive operation. CLI maps this to exit 3.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

enum class HostKind { General, Metric, OneTwo, Tree, Points };

std::string host_kind_name(HostKind k);

struct MetricViolation {
  int u, x, v;  // w(u,v) > w(u,x) + w(x,v)
  Num slack;    // w(u,v) - (w(u,x) + w(x,v)), positive
};

struct TreeEdge {
  int u, v;
  Num w;
};

struct PointSet {
  Num p;  // norm exponent, rational >= 1
  std::vector<std::vector<Num>> coords;
};

class HostGraph {
 public:
  // Adjacency and strategies are stored as 64-bit masks throughout.
  static constexpr int kMaxNodes = 64;

  static HostGraph general(int n, std::vector<Num> weights, bool classify = false);
  static HostGraph metric(int n, std::vector<Num> weights);
  static HostGraph one_two(int n, std::vector<Num> weights);
  static HostGraph from_tree(int n, const std::vector<TreeEdge>& edges);
  static HostGraph from_points(const std::vector<std::vector<Num>>& coords, const Num& p);

  int size() const { return n_; }
  HostKind kind() const { return kind_; }
  const Num& weight(int u, int v) const { return w_[static_cast<size_t>(u) * n_ + v]; }
  const std::vector<Num>& weights() const { return w_; }

  // Shortest-path distances in the complete host graph; equal to the
  // weights entrywise on metric kinds.
  const Num& host_distance(int u, int v) const;
  const std::vector<Num>& host_distances() const {
    return kind_ == HostKind::General ? host_dist_ : w_;
  }
  bool is_metric_kind() const { return kind_ != HostKind::General; }

  // Every ordered triple (u,x,v) with w(u,v) > w(u,x) + w(x,v), u<v, x distinct.
  std::vector<MetricViolation> check_metric() const;

  // True iff any weight is a double; comparisons then use epsilon().
  bool float_mode() const { return float_mode_; }
  double epsilon() const { return eps_; }
  void set_epsilon(double eps);

  const std::vector<TreeEdge>* defining_tree() const {
    return tree_ ? &*tree_ : nullptr;
  }
  const PointSet* point_set() const { return points_ ? &*points_ : nullptr; }

 private:
  HostGraph(int n, std::vector<Num> w, HostKind kind);

  int n_ = 0;
  std::vector<Num> w_;
  HostKind kind_ = HostKind::General;
  bool float_mode_ = false;
  double eps_ = 1e-9;
  std::vector<Num> host_dist_;  // general kind only; others read w_
  std::optional<std::vector<TreeEdge>> tree_;
  std::optional<PointSet> points_;
};

}  // namespace netgame
