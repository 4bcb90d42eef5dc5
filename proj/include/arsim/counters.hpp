#pragma once

#include "arsim/types.hpp"

namespace arsim {

/**
 * Counter addition. Bounded mode wraps modulo N^2+1; d may be negative, so
 * wrap_add(a, -1, bounded) is the decrement companion of the increment.
 * Unbounded mode is plain integer addition and rejects negative results.
 */
Counter wrap_add(Counter a, long long d, const Mode& mode);

/**
 * Interval membership for counters. The window is the length+1 values
 * {base, base+1, ..., base+length}, read circularly in bounded mode and as an
 * ordinary integer interval in unbounded mode. The three window shapes the
 * protocol uses are all expressed through this: [b..b+N] is (b, N),
 * [b+1..b+N] is (b+1, N-1) and [b-N..b+N] is (b-N, 2N).
 */
bool in_window(Counter x, Counter base, long long length, const Mode& mode);

}  // namespace arsim
