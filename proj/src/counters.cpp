#include "arsim/counters.hpp"

#include <stdexcept>

namespace arsim {

Counter wrap_add(Counter a, long long d, const Mode& mode) {
  if (!mode.bounded()) {
    long long r = static_cast<long long>(a) + d;
    if (r < 0) {
      throw std::domain_error("wrap_add: negative counter in unbounded mode");
    }
    return static_cast<Counter>(r);
  }
  const long long m = static_cast<long long>(mode.counter_domain());
  long long r = (static_cast<long long>(a) + d) % m;
  if (r < 0) r += m;
  return static_cast<Counter>(r);
}

bool in_window(Counter x, Counter base, long long length, const Mode& mode) {
  if (length < 0) return false;
  if (!mode.bounded()) {
    return x >= base && x <= base + static_cast<Counter>(length);
  }
  const long long m = static_cast<long long>(mode.counter_domain());
  if (length >= m - 1) return x < static_cast<Counter>(m);
  long long off = (static_cast<long long>(x) - static_cast<long long>(base)) % m;
  if (off < 0) off += m;
  return off <= length;
}

}  // namespace arsim
