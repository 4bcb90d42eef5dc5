#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arsim/types.hpp"

namespace arsim {

enum class InjectionKind : std::uint8_t {
  kAuditableEvent,
  kFailStop,
  kRevive,
  kTransientCorrupt,
  kAuthorize,
};

const char* to_string(InjectionKind k);

enum class CorruptField : std::uint8_t {
  kParent, kLeader, kDist, kStatus, kSn, kOtsn, kCtsn, kRes,
};

const char* to_string(CorruptField f);

/**
 * One environment step. AuditableEvent latches a detection, FailStop /
 * Revive toggle liveness (a revived process rejoins with randomized protocol
 * state), TransientCorrupt overwrites a single variable, Authorize latches
 * the restore capability at whichever process is currently the tree root.
 */
struct InjectionEvent {
  long at_step = 0;
  InjectionKind kind = InjectionKind::kAuditableEvent;
  ProcId pid = -1;  // ignored by kAuthorize
  CorruptField field = CorruptField::kSn;
  std::uint64_t value = 0;
};

enum class InitPolicy : std::uint8_t { kLegitimate, kArbitraryRandom, kExplicit };
enum class SchedulerPolicy : std::uint8_t { kUniformRandom, kRoundRobin };
enum class StopPolicy : std::uint8_t {
  kNone,
  kS1Quiescent,  // stop once injections are exhausted, S1 holds, no latched flags
  kQuiescent,    // stop once injections are exhausted and nothing is enabled
};

struct Scenario {
  std::shared_ptr<const Topology> topology;
  Mode mode;
  InitPolicy init = InitPolicy::kLegitimate;
  std::vector<ProcState> explicit_init;  // used when init == kExplicit
  std::vector<InjectionEvent> injections;
  SchedulerPolicy scheduler = SchedulerPolicy::kUniformRandom;
  std::uint64_t seed = 1;
  long max_steps = 100;
  StopPolicy stop = StopPolicy::kNone;
};

// Structural and fault-model validation (id ranges, corrupt-field domains,
// the unbounded-mode ban on otsn/ctsn corruption, explicit-init domains).
// Returns an empty string when valid.
std::string validate_scenario(const Scenario& s);

// Domain check for a single corruption target under a mode; empty when ok.
std::string validate_corrupt(const Mode& mode, int n, CorruptField field, std::uint64_t value);

}  // namespace arsim
