#ifndef FITSIM_VERSION_HPP
#define FITSIM_VERSION_HPP

namespace fitsim {

inline constexpr const char* kVersion = "0.1.0";

} // namespace fitsim

#endif // FITSIM_VERSION_HPP
