#include "arsim/types.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace arsim {

const char* to_string(Status s) {
  switch (s) {
    case Status::kRestore: return "restore";
    case Status::kStable: return "stable";
    case Status::kBottom: return "bottom";
    case Status::kTop: return "top";
  }
  return "?";
}

const char* to_string(ActionId a) {
  switch (a) {
    case ActionId::kAR1: return "AR1";
    case ActionId::kAR2: return "AR2";
    case ActionId::kAR3: return "AR3";
    case ActionId::kAR4: return "AR4";
    case ActionId::kAR5: return "AR5";
    case ActionId::kAR6: return "AR6";
    case ActionId::kAR7: return "AR7";
    case ActionId::kAR8: return "AR8";
    case ActionId::kAR9: return "AR9";
    case ActionId::kAR10: return "AR10";
    case ActionId::kAR11: return "AR11";
    case ActionId::kB1: return "B1";
    case ActionId::kB2: return "B2";
    case ActionId::kB3: return "B3";
    case ActionId::kB4: return "B4";
    case ActionId::kB5: return "B5";
    case ActionId::kB6: return "B6";
    case ActionId::kB7: return "B7";
    case ActionId::kB8: return "B8";
    case ActionId::kB9: return "B9";
    case ActionId::kB10: return "B10";
    case ActionId::kB11: return "B11";
    case ActionId::kB12: return "B12";
    case ActionId::kStutter: return "stutter";
  }
  return "?";
}

bool action_in_mode(ActionId a, const Mode& mode) {
  if (a == ActionId::kStutter) return true;
  const bool is_ar = a >= ActionId::kAR1 && a <= ActionId::kAR11;
  return mode.bounded() ? !is_ar : is_ar;
}

Topology::Topology(int n, std::vector<std::pair<ProcId, ProcId>> edges)
    : n_(n), edges_(std::move(edges)), adj_(static_cast<size_t>(n)) {
  if (n < 1) throw std::invalid_argument("topology: need at least one process");
  for (auto& [a, b] : edges_) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n) {
      std::ostringstream os;
      os << "topology: edge (" << a << "," << b << ") out of range for n=" << n;
      throw std::invalid_argument(os.str());
    }
    if (a == b) throw std::invalid_argument("topology: self-loop");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [a, b] : edges_) {
    adj_[static_cast<size_t>(a)].push_back(b);
    adj_[static_cast<size_t>(b)].push_back(a);
  }
  for (auto& v : adj_) std::sort(v.begin(), v.end());

  // Connectivity check.
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::queue<ProcId> q;
  q.push(0);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    ProcId u = q.front();
    q.pop();
    for (ProcId v : adj_[static_cast<size_t>(u)]) {
      if (!seen[static_cast<size_t>(v)]) {
        seen[static_cast<size_t>(v)] = true;
        ++reached;
        q.push(v);
      }
    }
  }
  if (reached != n) throw std::invalid_argument("topology: graph is not connected");
}

std::shared_ptr<const Topology> Topology::line(int n) {
  std::vector<std::pair<ProcId, ProcId>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return std::make_shared<const Topology>(n, std::move(e));
}

std::shared_ptr<const Topology> Topology::make(int n, std::vector<std::pair<ProcId, ProcId>> edges) {
  return std::make_shared<const Topology>(n, std::move(edges));
}

bool Topology::has_edge(ProcId a, ProcId b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

std::vector<ProcId> Configuration::alive_neighbors(ProcId p) const {
  std::vector<ProcId> out;
  for (ProcId k : topology->neighbors(p)) {
    if (alive(k)) out.push_back(k);
  }
  return out;
}

std::vector<ProcId> Configuration::alive_children(ProcId p) const {
  std::vector<ProcId> out;
  for (const ProcState& q : procs) {
    if (q.alive && q.parent == p && q.id != p) out.push_back(q.id);
  }
  return out;
}

std::string validate_proc(const ProcState& p, const Mode& mode, int n) {
  std::ostringstream os;
  if (p.parent < 0 || p.parent >= n) {
    os << "proc " << p.id << ": parent " << p.parent << " out of range";
    return os.str();
  }
  if (p.leader < 0 || p.leader >= n) {
    os << "proc " << p.id << ": leader " << p.leader << " out of range";
    return os.str();
  }
  if (p.res != 0 && p.res != 1) {
    os << "proc " << p.id << ": res " << p.res << " not in {0,1}";
    return os.str();
  }
  if (p.dist < 0 || p.dist > n) {
    os << "proc " << p.id << ": dist " << p.dist << " not in [0," << n << "]";
    return os.str();
  }
  if (mode.bounded()) {
    const Counter hi = mode.max_counter();
    if (p.otsn > hi || p.ctsn > hi) {
      os << "proc " << p.id << ": counter outside [0," << hi << "] in bounded mode";
      return os.str();
    }
    if (p.sn > 1) {
      os << "proc " << p.id << ": sn " << p.sn << " not a bit in bounded mode";
      return os.str();
    }
  }
  return {};
}

std::string validate_config(const Configuration& c) {
  if (!c.topology) return "configuration: missing topology";
  if (c.n() != c.topology->n() || c.n() != c.mode.n_procs) {
    return "configuration: process count disagrees with topology/mode";
  }
  for (int i = 0; i < c.n(); ++i) {
    if (c.procs[static_cast<size_t>(i)].id != i) return "configuration: ids must be 0..n-1 in order";
    std::string err = validate_proc(c.procs[static_cast<size_t>(i)], c.mode, c.n());
    if (!err.empty()) return err;
  }
  return {};
}

}  // namespace arsim
