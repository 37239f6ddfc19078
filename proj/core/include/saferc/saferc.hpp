#pragma once

#include "saferc/constraint.hpp"
#include "saferc/error.hpp"
#include "saferc/format.hpp"
#include "saferc/region.hpp"
#include "saferc/stdio.hpp"
#include "saferc/stdlib.hpp"
#include "saferc/stream.hpp"
#include "saferc/string.hpp"
#include "saferc/violation.hpp"
