#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "fincot/error.hpp"

namespace fincot::util {

struct Line {
    std::size_t number;  // 1-based
    std::string text;
};

// Reads non-empty lines with their 1-based line numbers.
Result<std::vector<Line>> read_lines(const std::filesystem::path& path);

// Writes content to `path` via a temp file and atomic rename.
Result<void> write_file_atomic(const std::filesystem::path& path, std::string_view content);

Result<std::string> read_file(const std::filesystem::path& path);

}  // namespace fincot::util
