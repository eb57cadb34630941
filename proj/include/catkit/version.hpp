#ifndef CATKIT_VERSION_HPP
#define CATKIT_VERSION_HPP

namespace catkit {

inline constexpr const char* engine_name = "catkit";
inline constexpr const char* engine_version = "0.1.0";

} // namespace catkit

#endif
