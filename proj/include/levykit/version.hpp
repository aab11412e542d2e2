#pragma once

namespace levykit {

inline constexpr const char* version = "0.1.0";

}
