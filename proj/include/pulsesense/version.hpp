#ifndef PULSESENSE_VERSION_HPP
#define PULSESENSE_VERSION_HPP

namespace pulsesense {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

} // namespace pulsesense

#endif
