#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "tensordeg/coset_enum.hpp"
#include "tensordeg/group.hpp"

namespace tdeg {

// Group file: first line n, then n rows of n space-separated indices. Index 0 must be the identity.
GroupPtr parse_group_text(std::istream& in, std::string label);
GroupPtr parse_group_file(const std::filesystem::path& path);
std::string format_group_text(const FiniteGroup& g);

// Presentation file: "gens k", then one relator per line as comma-separated signed integers.
Presentation parse_presentation_text(std::istream& in);
Presentation parse_presentation_file(const std::filesystem::path& path);
std::string format_presentation(const Presentation& p);

}  // namespace tdeg
