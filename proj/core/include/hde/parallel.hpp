#pragma once

#include <cstddef>
#include <functional>

namespace hde {

/// Runs body(0..count-1) on up to `jobs` worker threads (serial when
/// jobs <= 1). The body must only touch its own index's state; outputs
/// land in caller-preallocated slots, so results do not depend on the
/// schedule. The first exception thrown by any body is rethrown after all
/// workers join.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& body);

}  // namespace hde
