#include <algorithm>

#include "saferc/constraint.hpp"
#include "saferc/stdlib.hpp"

namespace saferc {
namespace {

// Shared runtime constraints of qsort_s and bsearch_s.
ErrorCode check_array(std::string_view fn, const void* base, rsize_t nmemb, rsize_t size,
                      CompareWithContext compar) {
  if (nmemb != 0) {
    if (ErrorCode rc = validate_not_null(fn, "base", base)) return rc;
    if (ErrorCode rc = validate_not_null(fn, "compar", reinterpret_cast<const void*>(compar))) return rc;
  }
  if (ErrorCode rc = validate_rsize_limit(fn, "nmemb", nmemb)) return rc;
  if (ErrorCode rc = validate_rsize_limit(fn, "size", size)) return rc;
  if (size != 0 && nmemb > kRsizeMax / size) {
    return report_kind(ErrorKind::RsizeMaxExceeded, fn, "nmemb");
  }
  return kOk;
}

class ByteArray {
 public:
  ByteArray(void* base, std::size_t size) : base_(static_cast<unsigned char*>(base)), size_(size) {}

  unsigned char* at(std::size_t i) const noexcept { return base_ + i * size_; }
  void swap(std::size_t i, std::size_t j) const noexcept {
    std::swap_ranges(at(i), at(i) + size_, at(j));
  }

 private:
  unsigned char* base_;
  std::size_t size_;
};

// Heapsort: in place, no allocation, O(n log n) worst case.
void heap_sort(const ByteArray& a, std::size_t n, CompareWithContext compar, void* context) {
  const auto less = [&](std::size_t i, std::size_t j) { return compar(a.at(i), a.at(j), context) < 0; };
  const auto sift_down = [&](std::size_t root, std::size_t end) {
    for (;;) {
      std::size_t child = 2 * root + 1;
      if (child >= end) return;
      if (child + 1 < end && less(child, child + 1)) ++child;
      if (!less(root, child)) return;
      a.swap(root, child);
      root = child;
    }
  };

  for (std::size_t start = n / 2; start-- > 0;) sift_down(start, n);
  for (std::size_t end = n; end-- > 1;) {
    a.swap(0, end);
    sift_down(0, end);
  }
}

}  // namespace

ErrorCode qsort_s(void* base, rsize_t nmemb, rsize_t size, CompareWithContext compar, void* context) {
  if (ErrorCode rc = check_array("qsort_s", base, nmemb, size, compar)) return rc;
  if (nmemb < 2 || size == 0) return kOk;
  heap_sort(ByteArray{base, size}, nmemb, compar, context);
  return kOk;
}

std::optional<std::size_t> bsearch_s(const void* key, const void* base, rsize_t nmemb, rsize_t size,
                                     CompareWithContext compar, void* context) {
  constexpr std::string_view fn = "bsearch_s";
  if (nmemb != 0 && validate_not_null(fn, "key", key)) return std::nullopt;
  if (check_array(fn, base, nmemb, size, compar)) return std::nullopt;

  const auto* bytes = static_cast<const unsigned char*>(base);
  std::size_t lo = 0;
  std::size_t hi = nmemb;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const int c = compar(key, bytes + mid * size, context);
    if (c == 0) return mid;
    if (c < 0) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return std::nullopt;
}

}  // namespace saferc
