#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "fincot/error.hpp"

namespace fincot::util {

std::string sha256_hex(std::string_view bytes);

Result<std::string> sha256_file_hex(const std::filesystem::path& path);

// Stable 64-bit mixing for derived seeds; identical across platforms.
uint64_t mix_seed(uint64_t seed, std::string_view tag);

}  // namespace fincot::util
