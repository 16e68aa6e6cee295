#ifndef HULLKIT_VERSION_HPP
#define HULLKIT_VERSION_HPP

namespace hullkit {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "hullkit v1";

}  // namespace hullkit

#endif  // HULLKIT_VERSION_HPP
