#ifndef HAPFSO_VERSION_HPP
#define HAPFSO_VERSION_HPP

namespace hapfso {

inline constexpr const char* kVersion = "0.1.0";

} // namespace hapfso

#endif
