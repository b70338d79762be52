#pragma once

namespace theta_monad {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace theta_monad
