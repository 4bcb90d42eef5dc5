#include "arsim/protocol.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "arsim/counters.hpp"

namespace arsim {

namespace {

int res_bump(int res) { return std::min(res + 1, 1); }

// Largest otsn among alive neighbors strictly ahead of j; used by AR2's copy.
Counter max_neighbor_otsn(const Configuration& c, ProcId pid) {
  Counter best = 0;
  for (ProcId k : c.alive_neighbors(pid)) best = std::max(best, c.proc(k).otsn);
  return best;
}

Counter max_neighbor_ctsn(const Configuration& c, ProcId pid) {
  Counter best = 0;
  for (ProcId k : c.alive_neighbors(pid)) best = std::max(best, c.proc(k).ctsn);
  return best;
}

bool parent_alive(const Configuration& c, ProcId pid) {
  return c.alive(c.proc(pid).parent);
}

// Children all echo the awareness wave: otsn caught up and status Top.
bool children_all_top(const Configuration& c, ProcId pid) {
  const ProcState& j = c.proc(pid);
  for (ProcId k : c.alive_children(pid)) {
    const ProcState& q = c.proc(k);
    if (q.otsn != j.otsn || q.status != Status::kTop) return false;
  }
  return true;
}

bool children_all_stable(const Configuration& c, ProcId pid) {
  const ProcState& j = c.proc(pid);
  for (ProcId k : c.alive_children(pid)) {
    const ProcState& q = c.proc(k);
    if (q.sn != j.sn || q.status != Status::kStable) return false;
  }
  return true;
}

bool neighbors_agree(const Configuration& c, ProcId pid) {
  const ProcState& j = c.proc(pid);
  for (ProcId k : c.alive_neighbors(pid)) {
    const ProcState& q = c.proc(k);
    if (q.sn != j.sn || q.leader != j.leader) return false;
  }
  return true;
}

int min_res_with_neighbors(const Configuration& c, ProcId pid) {
  int m = c.proc(pid).res;
  for (ProcId k : c.alive_neighbors(pid)) m = std::min(m, c.proc(k).res);
  return m;
}

// B1/B2's precondition that no neighbor lags behind j's window.
bool neighbors_within_up_window(const Configuration& c, ProcId pid) {
  const ProcState& j = c.proc(pid);
  const int n = c.mode.n_procs;
  for (ProcId k : c.alive_neighbors(pid)) {
    if (!in_window(c.proc(k).otsn, j.otsn, n, c.mode)) return false;
  }
  return true;
}

bool some_neighbor_ahead(const Configuration& c, ProcId pid) {
  const ProcState& j = c.proc(pid);
  const int n = c.mode.n_procs;
  for (ProcId k : c.alive_neighbors(pid)) {
    if (in_window(c.proc(k).otsn, wrap_add(j.otsn, 1, c.mode), n - 1, c.mode)) return true;
  }
  return false;
}

// B12: some neighbor k so far away that otsn.j falls outside
// [otsn.k - N .. otsn.k + N]; ties broken by the plain integer comparison
// otsn.j > otsn.k on the stored representatives.
bool far_apart_and_greater(const Configuration& c, ProcId pid) {
  const ProcState& j = c.proc(pid);
  const int n = c.mode.n_procs;
  for (ProcId k : c.alive_neighbors(pid)) {
    const ProcState& q = c.proc(k);
    if (!in_window(j.otsn, wrap_add(q.otsn, -n, c.mode), 2LL * n, c.mode) && j.otsn > q.otsn) {
      return true;
    }
  }
  return false;
}

// sn.j + 1: plain increment unbounded, bit flip bounded.
Counter bump_sn(Counter sn, const Mode& mode) { return mode.bounded() ? (sn ^ 1) : sn + 1; }

}  // namespace

bool gd(const Configuration& c, ProcId pid) {
  const ProcState& j = c.proc(pid);
  if (!j.alive) return true;
  if (!c.alive(j.parent)) return true;  // vacuous until the tree layer reassigns
  const ProcState& p = c.proc(j.parent);
  if (p.status == Status::kRestore && j.status == Status::kRestore && j.sn != p.sn) return false;
  if (p.status == Status::kStable && !(j.status == Status::kStable && j.sn == p.sn)) return false;
  if (p.status == Status::kBottom && j.status == Status::kBottom && j.sn != p.sn) return false;
  if (p.status == Status::kTop && !(j.status == Status::kTop && j.sn == p.sn)) return false;
  return true;
}

bool eval_guard(const Configuration& c, ProcId pid, ActionId a) {
  if (!action_in_mode(a, c.mode) || a == ActionId::kStutter) {
    throw std::invalid_argument(std::string("eval_guard: action ") + to_string(a) +
                                " not valid in this mode");
  }
  const ProcState& j = c.proc(pid);
  if (!j.alive) return false;
  const bool root = j.is_root();
  const bool pa = parent_alive(c, pid);

  switch (a) {
    case ActionId::kAR1:
      return j.pending_ae;
    case ActionId::kB1:
      return j.pending_ae && neighbors_within_up_window(c, pid);

    case ActionId::kAR2: {
      for (ProcId k : c.alive_neighbors(pid)) {
        if (j.otsn < c.proc(k).otsn) return true;
      }
      return false;
    }
    case ActionId::kB2:
      return neighbors_within_up_window(c, pid) && some_neighbor_ahead(c, pid);

    case ActionId::kAR3:
      return root && j.status != Status::kBottom && j.otsn > j.ctsn;
    case ActionId::kB3:
      return root && j.status != Status::kBottom && j.otsn != j.ctsn;

    case ActionId::kAR4:
    case ActionId::kB4: {
      if (!pa) return false;
      const ProcState& p = c.proc(j.parent);
      return p.status == Status::kBottom && j.sn != p.sn && j.leader == p.leader;
    }

    case ActionId::kAR5:
    case ActionId::kB5:
      return j.status == Status::kBottom && children_all_top(c, pid) && neighbors_agree(c, pid);

    case ActionId::kAR6: {
      for (ProcId k : c.alive_neighbors(pid)) {
        if (j.ctsn < c.proc(k).ctsn) return true;
      }
      return false;
    }
    case ActionId::kB6:
      return pa && j.ctsn != c.proc(j.parent).ctsn;

    case ActionId::kAR7:
    case ActionId::kB7:
      return root && j.status == Status::kTop && j.ctsn == j.otsn && j.authorized;

    case ActionId::kAR8:
    case ActionId::kB8: {
      if (!pa) return false;
      const ProcState& p = c.proc(j.parent);
      return p.status == Status::kRestore && j.sn != p.sn && j.leader == p.leader &&
             j.otsn == j.ctsn;
    }

    case ActionId::kAR9:
    case ActionId::kB9:
      return j.status == Status::kRestore && children_all_stable(c, pid) && neighbors_agree(c, pid);

    case ActionId::kAR10:
    case ActionId::kB10:
      return !gd(c, pid);

    case ActionId::kAR11:
    case ActionId::kB11:
      return false;  // fired only through a tree correction

    case ActionId::kB12:
      return far_apart_and_greater(c, pid);

    default:
      throw std::invalid_argument("eval_guard: unknown action");
  }
}

Configuration apply_action(const Configuration& c, ProcId pid, ActionId a,
                           bool* restore_complete) {
  if (restore_complete) *restore_complete = false;
  if (a != ActionId::kAR11 && a != ActionId::kB11) {
    assert(eval_guard(c, pid, a) && "apply_action called with a false guard");
  }
  Configuration out = c;
  ProcState& j = out.proc(pid);
  const Mode& mode = c.mode;

  switch (a) {
    case ActionId::kAR1:
    case ActionId::kB1:
      j.otsn = wrap_add(j.otsn, 1, mode);
      j.pending_ae = false;
      break;

    case ActionId::kAR2:
      j.otsn = max_neighbor_otsn(c, pid);
      if (j.is_root()) j.res = 0;
      break;
    case ActionId::kB2:
      j.otsn = wrap_add(j.otsn, 1, mode);
      break;

    case ActionId::kAR3:
    case ActionId::kB3:
      j.status = Status::kBottom;
      j.sn = bump_sn(j.sn, mode);
      j.res = res_bump(j.res);
      break;

    case ActionId::kAR4:
      j.status = Status::kBottom;
      j.sn = c.proc(j.parent).sn;
      j.res = res_bump(j.res);
      break;
    case ActionId::kB4:
      j.status = Status::kBottom;
      j.sn = c.proc(j.parent).sn;
      j.res = c.proc(j.parent).res;
      break;

    case ActionId::kAR5:
    case ActionId::kB5: {
      j.status = Status::kTop;
      j.res = min_res_with_neighbors(c, pid);
      if (j.is_root() && j.res != 1) {
        j.status = Status::kBottom;  // everyone has not joined: reissue the wave
        j.sn = bump_sn(j.sn, mode);
        j.res = res_bump(j.res);
      } else if (j.is_root() && j.res == 1) {
        j.ctsn = j.otsn;
      }
      break;
    }

    case ActionId::kAR6:
      j.ctsn = max_neighbor_ctsn(c, pid);
      break;
    case ActionId::kB6:
      j.ctsn = c.proc(j.parent).ctsn;
      break;

    case ActionId::kAR7:
    case ActionId::kB7:
      j.status = Status::kRestore;
      j.sn = bump_sn(j.sn, mode);
      j.authorized = false;
      break;

    case ActionId::kAR8:
      j.status = Status::kRestore;
      j.sn = c.proc(j.parent).sn;
      j.res = res_bump(j.res);
      break;
    case ActionId::kB8:
      j.status = Status::kRestore;
      j.sn = c.proc(j.parent).sn;
      j.res = c.proc(j.parent).res;
      break;

    case ActionId::kAR9:
    case ActionId::kB9: {
      j.status = Status::kStable;
      j.res = min_res_with_neighbors(c, pid);
      if (j.is_root() && j.res != 1) {
        j.status = Status::kRestore;  // reissue the restoration wave
        j.sn = bump_sn(j.sn, mode);
        j.res = res_bump(j.res);
      } else if (j.is_root() && j.res == 1) {
        if (restore_complete) *restore_complete = true;
      }
      break;
    }

    case ActionId::kAR10:
    case ActionId::kB10:
      j.status = c.proc(j.parent).status;
      j.sn = c.proc(j.parent).sn;
      break;

    case ActionId::kAR11:
    case ActionId::kB11:
      j.res = 0;  // B11's printed -1 is normalized into res's {0,1} domain
      break;

    case ActionId::kB12:
      j.otsn = 0;
      break;

    default:
      throw std::invalid_argument("apply_action: unknown action");
  }
  return out;
}

std::vector<ActionId> enabled(const Configuration& c, ProcId pid) {
  std::vector<ActionId> out;
  if (!c.alive(pid)) return out;
  for (ActionId a : protocol_actions(c.mode)) {
    if (eval_guard(c, pid, a)) out.push_back(a);
  }
  return out;
}

const std::vector<ActionId>& protocol_actions(const Mode& mode) {
  static const std::vector<ActionId> kUnbounded = {
      ActionId::kAR1, ActionId::kAR2, ActionId::kAR3, ActionId::kAR4, ActionId::kAR5,
      ActionId::kAR6, ActionId::kAR7, ActionId::kAR8, ActionId::kAR9, ActionId::kAR10,
  };
  static const std::vector<ActionId> kBounded = {
      ActionId::kB1, ActionId::kB2, ActionId::kB3, ActionId::kB4,  ActionId::kB5,
      ActionId::kB6, ActionId::kB7, ActionId::kB8, ActionId::kB9,  ActionId::kB10,
      ActionId::kB12,
  };
  return mode.bounded() ? kBounded : kUnbounded;
}

bool is_priority_action(ActionId a) {
  return a == ActionId::kAR2 || a == ActionId::kAR6 || a == ActionId::kB2 ||
         a == ActionId::kB6;
}

}  // namespace arsim
