#pragma once

#include <stdexcept>

namespace ucx {

/** Violated API precondition: arguments outside a routine's documented
 * domain. The CLI maps this to its usage exit code. */
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** A computation refused to start, or stopped early, because it would
 * exceed a configured resource cap (vertex or facet limits, search
 * budgets). The CLI maps this to its resource exit code. */
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ucx
