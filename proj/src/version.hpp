// Identity fields stamped on every export.
#pragma once

namespace arcspan {

inline constexpr const char* version_string = "1.0.0";
inline constexpr const char* source_tag = "bases-of-grothendieck-groups-II";

}  // namespace arcspan
