#include "netgame/hostgraph.hpp"

#include <algorithm>
#include <cmath>

namespace netgame {

namespace {

void validate_matrix(int n, const std::vector<Num>& w) {
  if (n < 1) throw InputError("host graph needs at least one node");
  if (n > HostGraph::kMaxNodes)
    throw InputError("host graph too large: n = " + std::to_string(n) + " exceeds " +
                     std::to_string(HostGraph::kMaxNodes));
  if (w.size() != static_cast<size_t>(n) * n)
    throw InputError("weight matrix is not " + std::to_string(n) + "x" + std::to_string(n));
  for (int u = 0; u < n; ++u) {
    if (!w[static_cast<size_t>(u) * n + u].is_zero())
      throw InputError("nonzero diagonal at (" + std::to_string(u) + "," + std::to_string(u) + ")");
    for (int v = u + 1; v < n; ++v) {
      const Num& a = w[static_cast<size_t>(u) * n + v];
      const Num& b = w[static_cast<size_t>(v) * n + u];
      if (a != b)
        throw InputError("asymmetric weight at (" + std::to_string(u) + "," + std::to_string(v) + ")");
      if (a.is_negative())
        throw InputError("negative weight at (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
  }
}

std::vector<Num> all_pairs_complete(int n, const std::vector<Num>& w) {
  // Floyd-Warshall over the complete graph; exact in rational mode.
  std::vector<Num> d = w;
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < n; ++u) {
      const Num& dux = d[static_cast<size_t>(u) * n + x];
      if (dux.is_infinite()) continue;
      for (int v = 0; v < n; ++v) {
        const Num& dxv = d[static_cast<size_t>(x) * n + v];
        if (dxv.is_infinite()) continue;
        Num cand = dux + dxv;
        Num& duv = d[static_cast<size_t>(u) * n + v];
        if (cand < duv) duv = cand;
      }
    }
  return d;
}

}  // namespace

std::string host_kind_name(HostKind k) {
  switch (k) {
    case HostKind::General: return "general";
    case HostKind::Metric: return "metric";
    case HostKind::OneTwo: return "one_two";
    case HostKind::Tree: return "tree";
    case HostKind::Points: return "points";
  }
  return "general";
}

HostGraph::HostGraph(int n, std::vector<Num> w, HostKind kind)
    : n_(n), w_(std::move(w)), kind_(kind) {
  for (const Num& x : w_)
    if (x.is_real()) {
      float_mode_ = true;
      break;
    }
  if (kind_ == HostKind::General) host_dist_ = all_pairs_complete(n_, w_);
}

const Num& HostGraph::host_distance(int u, int v) const {
  const std::vector<Num>& d = kind_ == HostKind::General ? host_dist_ : w_;
  return d[static_cast<size_t>(u) * n_ + v];
}

HostGraph HostGraph::general(int n, std::vector<Num> weights, bool classify) {
  validate_matrix(n, weights);
  HostGraph h(n, std::move(weights), HostKind::General);
  if (classify && h.check_metric().empty()) {
    h.kind_ = HostKind::Metric;
    h.host_dist_.clear();
  }
  return h;
}

HostGraph HostGraph::metric(int n, std::vector<Num> weights) {
  validate_matrix(n, weights);
  HostGraph h(n, std::move(weights), HostKind::General);
  auto violations = h.check_metric();
  if (!violations.empty()) {
    const auto& b = violations.front();
    throw InputError("triangle inequality violated at (" + std::to_string(b.u) + "," +
                     std::to_string(b.x) + "," + std::to_string(b.v) + ")");
  }
  h.kind_ = HostKind::Metric;
  h.host_dist_.clear();
  return h;
}

HostGraph HostGraph::one_two(int n, std::vector<Num> weights) {
  validate_matrix(n, weights);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const Num& x = weights[static_cast<size_t>(u) * n + v];
      if (x != Num(1) && x != Num(2))
        throw InputError("one-two host weight not in {1,2} at (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
    }
  return HostGraph(n, std::move(weights), HostKind::OneTwo);
}

HostGraph HostGraph::from_tree(int n, const std::vector<TreeEdge>& edges) {
  if (n < 1) throw InputError("tree host needs at least one node");
  if (n > kMaxNodes) throw InputError("host graph too large");
  if (edges.size() != static_cast<size_t>(n) - 1)
    throw InputError("edge list is not a spanning tree: expected " + std::to_string(n - 1) +
                     " edges, got " + std::to_string(edges.size()));
  std::vector<std::vector<std::pair<int, Num>>> adj(n);
  for (const TreeEdge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v)
      throw InputError("bad tree edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    if (e.w.is_negative() || e.w.is_zero() || e.w.is_infinite())
      throw InputError("tree edge weight must be positive and finite at (" + std::to_string(e.u) +
                       "," + std::to_string(e.v) + ")");
    adj[e.u].emplace_back(e.v, e.w);
    adj[e.v].emplace_back(e.u, e.w);
  }
  // Metric closure by traversal from every node; n-1 edges + connected => tree.
  std::vector<Num> w(static_cast<size_t>(n) * n, Num(0));
  for (int src = 0; src < n; ++src) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{src};
    seen[src] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& [y, wy] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        ++reached;
        w[static_cast<size_t>(src) * n + y] = w[static_cast<size_t>(src) * n + x] + wy;
        stack.push_back(y);
      }
    }
    if (reached != n)
      throw InputError("edge list is not a spanning tree (disconnected or has a cycle)");
  }
  HostGraph h(n, std::move(w), HostKind::Tree);
  h.tree_ = edges;
  return h;
}

HostGraph HostGraph::from_points(const std::vector<std::vector<Num>>& coords, const Num& p) {
  if (coords.empty()) throw InputError("empty point list");
  if (coords.size() > static_cast<size_t>(kMaxNodes)) throw InputError("host graph too large");
  if (!p.is_rational() || p < Num(1)) throw InputError("norm exponent p must be a rational >= 1");
  const size_t d = coords.front().size();
  if (d == 0) throw InputError("points must have dimension >= 1");
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].size() != d)
      throw InputError("mismatched point dimension at index " + std::to_string(i));
    for (const Num& c : coords[i])
      if (!c.is_rational()) throw InputError("point coordinates must be rational");
  }
  const int n = static_cast<int>(coords.size());
  const bool exact = p == Num(1);
  std::vector<Num> w(static_cast<size_t>(n) * n, Num(0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      Num dist;
      if (exact) {
        Num sum(0);
        for (size_t i = 0; i < d; ++i) {
          Num diff = coords[u][i] - coords[v][i];
          if (diff.is_negative()) diff = Num(0) - diff;
          sum += diff;
        }
        dist = sum;
      } else {
        double pe = p.to_double();
        double sum = 0.0;
        for (size_t i = 0; i < d; ++i)
          sum += std::pow(std::fabs(coords[u][i].to_double() - coords[v][i].to_double()), pe);
        dist = Num::real(std::pow(sum, 1.0 / pe));
      }
      w[static_cast<size_t>(u) * n + v] = dist;
      w[static_cast<size_t>(v) * n + u] = dist;
    }
  HostGraph h(n, std::move(w), HostKind::Points);
  h.points_ = PointSet{p, coords};
  return h;
}

std::vector<MetricViolation> HostGraph::check_metric() const {
  std::vector<MetricViolation> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      for (int x = 0; x < n_; ++x) {
        if (x == u || x == v) continue;
        Num through = weight(u, x) + weight(x, v);
        const Num& direct = weight(u, v);
        bool violated = float_mode_ ? direct.to_double() > through.to_double() + eps_
                                    : direct > through;
        if (violated) out.push_back({u, x, v, direct - through});
      }
  return out;
}

void HostGraph::set_epsilon(double eps) {
  if (eps <= 0.0) throw InputError("epsilon must be positive");
  eps_ = eps;
}

}  // namespace netgame
