#ifndef MSCODES_VERSION_HPP
#define MSCODES_VERSION_HPP

namespace mscodes {

inline constexpr const char* kLibraryVersion = "1.0.0";
/// Bumped whenever the JSON/CSV output layout changes.
inline constexpr const char* kFormatVersion = "1";

}  // namespace mscodes

#endif  // MSCODES_VERSION_HPP
