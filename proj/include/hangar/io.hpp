#ifndef HANGAR_IO_HPP
#define HANGAR_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "hangar/core.hpp"

namespace hangar::io {

/// JSON text for an instance. Field names follow the domain types; see
/// docs/file-formats.md.
std::string instance_to_json(const Instance& instance);

/// Parses and validates an instance. Throws ParseError for malformed or
/// incomplete documents and InvalidInstance when an invariant fails.
Instance instance_from_json(std::string_view text);

std::string solution_to_json(const Solution& solution);
Solution solution_from_json(std::string_view text);

void save_instance(const Instance& instance, const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

void save_solution(const Solution& solution, const std::filesystem::path& path);
Solution load_solution(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace hangar::io

#endif  // HANGAR_IO_HPP
