#pragma once

#include <string_view>

namespace qcasino {

inline constexpr std::string_view k_artifact_version = "0.1.0";

}  // namespace qcasino
