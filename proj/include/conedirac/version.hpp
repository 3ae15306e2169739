#ifndef CONEDIRAC_VERSION_HPP
#define CONEDIRAC_VERSION_HPP

namespace conedirac {
inline constexpr const char* kVersion = "1.0.0";
}

#endif
