#pragma once

#include "arsim/types.hpp"

namespace arsim {

/**
 * Self-stabilizing, silent spanning-tree and leader layer.
 *
 * Rule: a process adopts the smallest leader id claimed in its closed alive
 * neighborhood, parents itself on an alive neighbor making that claim with
 * minimal dist, and sits one hop further out. A process whose own id is the
 * smallest claim, or whose adopted distance would exceed N, elects itself
 * (leader = parent = self, dist = 0); the distance cap is what starves
 * leader claims that no alive process backs.
 *
 * The protocol layer only reads parent/leader; this layer owns all writes to
 * parent, leader and dist.
 */

struct TreeStepResult {
  Configuration config;
  bool notified = false;  // caller must apply AR11/B11's res reset to pid
};

// True iff pid's (leader, parent, dist) is not locally consistent with its
// alive neighborhood under the rule above. Any minimal-dist neighbor with
// the right claim is accepted as parent; only tree_step's rewrite breaks
// ties by smallest id.
bool tree_enabled(const Configuration& c, ProcId pid);

// Rewrites pid's triple to the locally consistent values. Also voids a
// latched restore authorization when pid stops being the root, since that
// capability is pinned to tree leadership.
TreeStepResult tree_step(const Configuration& c, ProcId pid);

// Fixpoint test: no alive process has an enabled correction.
bool is_tree_silent(const Configuration& c);

}  // namespace arsim
