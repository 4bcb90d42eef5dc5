#include "arsim/tree.hpp"

#include <cassert>
#include <limits>

namespace arsim {

namespace {

struct Triple {
  ProcId leader;
  ProcId parent;
  int dist;
};

// Smallest leader id claimed in pid's closed alive neighborhood.
ProcId best_claim(const Configuration& c, ProcId pid) {
  ProcId best = pid;
  for (ProcId k : c.alive_neighbors(pid)) best = std::min(best, c.proc(k).leader);
  return best;
}

// Minimal dist among alive neighbors claiming `leader`; n+1 when none do.
int min_claim_dist(const Configuration& c, ProcId pid, ProcId leader) {
  int best = c.n() + 1;
  for (ProcId k : c.alive_neighbors(pid)) {
    if (c.proc(k).leader == leader) best = std::min(best, c.proc(k).dist);
  }
  return best;
}

Triple target(const Configuration& c, ProcId pid) {
  const ProcId best = best_claim(c, pid);
  if (best == pid) return {pid, pid, 0};
  const int d = min_claim_dist(c, pid, best);
  if (d + 1 > c.n()) return {pid, pid, 0};  // unbacked claim: elect self
  for (ProcId k : c.alive_neighbors(pid)) {
    if (c.proc(k).leader == best && c.proc(k).dist == d) return {best, k, d + 1};
  }
  assert(false && "claimant vanished");
  return {pid, pid, 0};
}

}  // namespace

bool tree_enabled(const Configuration& c, ProcId pid) {
  const ProcState& j = c.proc(pid);
  if (!j.alive) return false;
  const Triple t = target(c, pid);
  if (t.leader == pid) {
    return !(j.leader == pid && j.parent == pid && j.dist == 0);
  }
  if (j.leader != t.leader || j.dist != t.dist) return true;
  // Current parent must be an alive neighbor backing the claim at minimal
  // dist; any such neighbor is consistent, not just the smallest id.
  if (j.parent == pid || !c.alive(j.parent) || !c.topology->has_edge(pid, j.parent)) return true;
  const ProcState& p = c.proc(j.parent);
  return !(p.leader == t.leader && p.dist == t.dist - 1);
}

TreeStepResult tree_step(const Configuration& c, ProcId pid) {
  assert(tree_enabled(c, pid) && "tree_step on a locally consistent process");
  const Triple t = target(c, pid);
  TreeStepResult out{c, true};
  ProcState& j = out.config.proc(pid);
  j.leader = t.leader;
  j.parent = t.parent;
  j.dist = t.dist;
  if (j.parent != pid) j.authorized = false;
  return out;
}

bool is_tree_silent(const Configuration& c) {
  for (int p = 0; p < c.n(); ++p) {
    if (c.alive(p) && tree_enabled(c, p)) return false;
  }
  return true;
}

}  // namespace arsim
