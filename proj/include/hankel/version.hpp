#ifndef HANKEL_VERSION_HPP
#define HANKEL_VERSION_HPP

namespace hankel {

inline constexpr const char* kToolVersion = "0.1.0";

// Cache keys include this tag so that tables produced under a different
// precision policy are never reused.
inline constexpr const char* kPrecisionPolicy = "adaptive-x2";

}  // namespace hankel

#endif
