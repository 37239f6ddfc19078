#pragma once

#include <cstddef>

#include "saferc/error.hpp"

// Bounds-checked string and memory operations.
//
// Every destination is paired with its caller-declared capacity (s1max), which
// must not exceed the physical size of the buffer. Preconditions are checked
// in a fixed order (null, rsize limit, zero, range, overlap) and the first
// failure is reported through the installed constraint handler. When the
// destination and its capacity are themselves valid, a failed string
// operation leaves s1[0] == '\0' and a failed memory operation zero-fills
// the first s1max bytes.

namespace saferc {

ErrorCode strcpy_s(char* s1, rsize_t s1max, const char* s2);
ErrorCode strncpy_s(char* s1, rsize_t s1max, const char* s2, rsize_t n);
ErrorCode strcat_s(char* s1, rsize_t s1max, const char* s2);
ErrorCode strncat_s(char* s1, rsize_t s1max, const char* s2, rsize_t n);

/// Reentrant tokenizer. `s2` is a delimiter sequence: a token ends where the
/// whole sequence next occurs, and leading occurrences are skipped. On return
/// `*s1max` holds the number of characters left after the consumed delimiter
/// and `*ptr` the resume position. Returns nullptr when no token remains or on
/// a violation (see last_error()).
char* strtok_s(char* s1, rsize_t* s1max, const char* s2, char** ptr);

/// Length of `s` capped at maxsize; 0 for a null pointer. Never reads past
/// maxsize bytes.
std::size_t strnlen_s(const char* s, std::size_t maxsize) noexcept;

/// Message for `errnum` (library table for codes 0..10, "Unknown error <n>"
/// otherwise). A message that does not fit is truncated with "..." and the
/// call returns ParameterOutOfRange without invoking the handler.
ErrorCode strerror_s(char* s, rsize_t maxsize, ErrorCode errnum);
std::size_t strerrorlen_s(ErrorCode errnum) noexcept;

ErrorCode memcpy_s(void* s1, rsize_t s1max, const void* s2, rsize_t n);
ErrorCode memmove_s(void* s1, rsize_t s1max, const void* s2, rsize_t n);

}  // namespace saferc
