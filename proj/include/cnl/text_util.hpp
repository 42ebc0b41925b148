// Small string helpers used throughout.
#pragma once

#include <string>
#include <vector>

namespace cnl {

std::string to_lower(const std::string& s);
std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);
std::string join(const std::vector<std::string>& parts, const std::string& sep);
bool starts_with_vowel(const std::string& s);

}  // namespace cnl
