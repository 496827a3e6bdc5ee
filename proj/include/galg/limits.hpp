#pragma once

#include <atomic>
#include <cstdint>
#include <string>

#include "galg/ring.hpp"

namespace galg {

/// Budget for exhaustive enumerations plus an optional cooperative
/// cancellation flag owned by the caller.
struct Limits {
  static constexpr std::uint64_t kDefaultBound = std::uint64_t{1} << 20;

  std::uint64_t bound = kDefaultBound;
  const std::atomic<bool>* cancel = nullptr;

  void poll() const {
    if (cancel && cancel->load(std::memory_order_relaxed)) throw Cancelled("enumeration cancelled");
  }

  /// Throws BoundExceeded unless q^exponent <= bound.
  void require_power(std::int64_t q, std::size_t exponent, const std::string& what) const {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
      if (total > bound / static_cast<std::uint64_t>(q))
        throw BoundExceeded(what + ": " + std::to_string(q) + "^" + std::to_string(exponent) +
                            " exceeds enumeration bound " + std::to_string(bound));
      total *= static_cast<std::uint64_t>(q);
    }
  }
};

}  // namespace galg
