#pragma once

#include <vector>

#include "arsim/types.hpp"

namespace arsim {

/**
 * Core protocol semantics: pure functions over configuration snapshots.
 *
 * Guards that quantify over "k" range over alive graph neighbors (Nbr.j) or
 * alive tree children (P.k = j). Guards that read parent variables evaluate
 * to false while the parent is dead; the tree layer will reassign the parent.
 * gd() is the exception: a dead parent makes it vacuously true.
 */

// The four-implication consistency predicate between a process and its
// parent (status/sequence-number agreement along the tree edge).
bool gd(const Configuration& c, ProcId pid);

// Literal guard of one action at one process. AR1/B1 additionally require
// the latched pending_ae flag, AR7/B7 the latched authorized flag.
// Throws std::invalid_argument when the action does not belong to c's mode.
bool eval_guard(const Configuration& c, ProcId pid, ActionId a);

// Applies the statement of an enabled action; precondition eval_guard(...).
// Only pid's fields change. AR9/B9's completed-restore leader branch is
// reported through restore_complete when the caller passes a slot for it.
Configuration apply_action(const Configuration& c, ProcId pid, ActionId a,
                           bool* restore_complete = nullptr);

// All actions of the current mode enabled at pid, in label order. Dead
// processes have no enabled actions. Tree corrections (and with them the
// AR11/B11 res reset) are reported by the tree layer, not here.
std::vector<ActionId> enabled(const Configuration& c, ProcId pid);

// Ordered label universe per mode, excluding AR11/B11 (tree-driven).
const std::vector<ActionId>& protocol_actions(const Mode& mode);

// AR2/AR6 (B2/B6) propagate counter changes and outrank everything else in
// the scheduler.
bool is_priority_action(ActionId a);

}  // namespace arsim
