#ifndef MODPLL_VERSION_HPP
#define MODPLL_VERSION_HPP

namespace modpll {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace modpll

#endif  // MODPLL_VERSION_HPP
