// Process-wide worker count and a deterministic parallel loop: bodies write
// only to disjoint slots, so the schedule never shows in the results.
#pragma once

#include <functional>

namespace arcspan {

void set_parallelism(int k);  // 0 restores the hardware default
int parallelism();

void parallel_for(int m, const std::function<void(int)>& body);

}  // namespace arcspan
