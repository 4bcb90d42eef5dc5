#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace arsim {

using ProcId = int;
using Counter = std::uint64_t;

/**
 * Per-process protocol status.
 *
 * Restore/Stable are the normal-operation values; Bottom/Top are the two
 * phases of the awareness wave (leader-to-leaves broadcast, leaves-to-leader
 * echo) that tells every process about an auditable event.
 */
enum class Status : std::uint8_t { kRestore = 0, kStable = 1, kBottom = 2, kTop = 3 };

const char* to_string(Status s);

enum class ModeKind : std::uint8_t { kUnbounded = 0, kBounded = 1 };

/**
 * Counter discipline for a run: plain unbounded integers, or values in
 * [0, N^2] combined with modulo N^2+1 arithmetic and window comparisons.
 */
struct Mode {
  ModeKind kind = ModeKind::kUnbounded;
  int n_procs = 1;

  bool bounded() const { return kind == ModeKind::kBounded; }

  // Number of distinct counter values in bounded mode: N^2 + 1.
  Counter counter_domain() const {
    return static_cast<Counter>(n_procs) * static_cast<Counter>(n_procs) + 1;
  }

  Counter max_counter() const { return counter_domain() - 1; }

  static Mode unbounded(int n) { return Mode{ModeKind::kUnbounded, n}; }
  static Mode bounded(int n) { return Mode{ModeKind::kBounded, n}; }
};

/**
 * Protocol action labels. The kAR* set belongs to unbounded mode, the kB*
 * set to bounded mode. kStutter is the self-loop taken when nothing is
 * enabled anywhere. AR11/B11 never fire on their own: they are the res reset
 * a tree correction carries into the protocol layer.
 */
enum class ActionId : std::uint8_t {
  kAR1, kAR2, kAR3, kAR4, kAR5, kAR6, kAR7, kAR8, kAR9, kAR10, kAR11,
  kB1, kB2, kB3, kB4, kB5, kB6, kB7, kB8, kB9, kB10, kB11, kB12,
  kStutter,
};

const char* to_string(ActionId a);
bool action_in_mode(ActionId a, const Mode& mode);

/**
 * Full state of one process: the protocol variables (parent, leader, status,
 * sn, otsn, ctsn, res), the tree layer's hop distance, and the environment
 * flags (alive, a latched auditable-event detection, a latched restore
 * authorization).
 */
struct ProcState {
  ProcId id = 0;
  ProcId parent = 0;  // parent == id means this process is the root/leader
  ProcId leader = 0;
  Status status = Status::kStable;
  Counter sn = 0;
  Counter otsn = 0;  // auditable events observed
  Counter ctsn = 0;  // auditable events cleared by a completed wave
  int res = 1;       // wave-participation flag, {0,1}
  int dist = 0;      // tree layer: hop distance to the believed leader
  bool alive = true;
  bool pending_ae = false;  // detection latched, not yet absorbed by AR1/B1
  bool authorized = false;  // restore authorization latched, consumed by AR7/B7

  bool is_root() const { return parent == id; }

  bool operator==(const ProcState&) const = default;
};

/**
 * Communication graph. Processes are 0..n-1; edges are undirected, the graph
 * must be connected and free of self-loops. Adjacency lists are kept sorted
 * so quantified guards iterate in a fixed order.
 */
class Topology {
 public:
  Topology(int n, std::vector<std::pair<ProcId, ProcId>> edges);

  static std::shared_ptr<const Topology> line(int n);
  static std::shared_ptr<const Topology> make(int n, std::vector<std::pair<ProcId, ProcId>> edges);

  int n() const { return n_; }
  const std::vector<std::pair<ProcId, ProcId>>& edges() const { return edges_; }
  const std::vector<ProcId>& neighbors(ProcId p) const { return adj_[static_cast<size_t>(p)]; }
  bool has_edge(ProcId a, ProcId b) const;

 private:
  int n_;
  std::vector<std::pair<ProcId, ProcId>> edges_;
  std::vector<std::vector<ProcId>> adj_;
};

/**
 * Global snapshot: one ProcState per process plus the topology and mode they
 * live under. Value-semantic; protocol and tree steps produce fresh copies.
 */
struct Configuration {
  Mode mode;
  std::shared_ptr<const Topology> topology;
  std::vector<ProcState> procs;

  int n() const { return static_cast<int>(procs.size()); }
  const ProcState& proc(ProcId p) const { return procs[static_cast<size_t>(p)]; }
  ProcState& proc(ProcId p) { return procs[static_cast<size_t>(p)]; }
  bool alive(ProcId p) const { return procs[static_cast<size_t>(p)].alive; }

  // Alive topology neighbors of p, in id order.
  std::vector<ProcId> alive_neighbors(ProcId p) const;
  // Alive tree children of p (alive k != p with parent.k == p), in id order.
  std::vector<ProcId> alive_children(ProcId p) const;

  bool operator==(const Configuration& other) const {
    return mode.kind == other.mode.kind && mode.n_procs == other.mode.n_procs &&
           procs == other.procs;
  }
};

// Basic domain validation for one process state under a mode (counter and
// bit domains, id ranges). Returns an empty string when valid, else a
// human-readable description of the first violation.
std::string validate_proc(const ProcState& p, const Mode& mode, int n);
std::string validate_config(const Configuration& c);

}  // namespace arsim
