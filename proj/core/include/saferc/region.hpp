#pragma once

#include <cstddef>
#include <cstdint>

namespace saferc {

/// Inclusive [min, max] bounds for a size-valued parameter.
struct ValueRange {
  std::size_t min = 0;
  std::size_t max = 0;

  constexpr bool contains(std::size_t value) const noexcept { return min <= value && value <= max; }
};

/// Half-open address interval [base, base + length). Only the numeric address
/// is kept; the library never dereferences a region.
struct MemRegion {
  std::uintptr_t base = 0;
  std::size_t length = 0;

  static MemRegion of(const void* ptr, std::size_t length) noexcept {
    return MemRegion{reinterpret_cast<std::uintptr_t>(ptr), length};
  }

  /// One past the last address, saturated at the top of the address space.
  constexpr std::uintptr_t end() const noexcept {
    return length > UINTPTR_MAX - base ? UINTPTR_MAX : base + length;
  }

  friend constexpr bool operator==(const MemRegion&, const MemRegion&) = default;
};

/// True iff the two intervals share at least one address. Empty regions never
/// overlap anything; argument order does not matter.
bool regions_overlap(const MemRegion& a, const MemRegion& b) noexcept;

}  // namespace saferc
