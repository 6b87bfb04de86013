#pragma once

namespace semidirect {

inline constexpr const char* version = "0.1.0";

}  // namespace semidirect
