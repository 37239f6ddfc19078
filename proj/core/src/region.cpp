#include "saferc/region.hpp"

namespace saferc {

bool regions_overlap(const MemRegion& a, const MemRegion& b) noexcept {
  if (a.length == 0 || b.length == 0) return false;
  // Order the pair so `lo` starts first; they intersect iff `hi` starts before
  // `lo` ends.
  const MemRegion& lo = a.base <= b.base ? a : b;
  const MemRegion& hi = a.base <= b.base ? b : a;
  return hi.base < lo.end();
}

}  // namespace saferc
