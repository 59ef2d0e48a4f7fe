#pragma once

// Group files, builtin specs and small file helpers for the CLI.
//
// Group file format:
//   cayley <n>                 then n rows of n 0-based indices
//   perm <degree> <k>          then k rows of <degree> 0-based images
// Lines starting with '#' are comments. `# label <i> <text>` comments written
// by format_cayley are read back as element labels.

#include <filesystem>
#include <string>
#include <string_view>

#include "wordcount/group.hpp"

namespace wordcount {

/// Throws parse_error with the line number; group errors pass through.
GroupTable parse_group(std::string_view text);
GroupTable import_group(const std::filesystem::path& path);

std::string format_cayley(const GroupTable& g);
void export_group(const GroupTable& g, const std::filesystem::path& path);

/// "builtin:NAME(args)" or a path to a group file.
GroupTable load_group(std::string_view source);

/// whole, trivial, derived, center, lower<i> (gamma_i), upper<i> (Z_i), or
/// gen:<i>,<j>,... (subgroup generated by element indices).
Subgroup parse_subgroup(const GroupTable& g, std::string_view spec);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace wordcount
