#pragma once

#include <string>

#include "spanoid/code.hpp"
#include "spanoid/family.hpp"
#include "spanoid/lcs.hpp"
#include "spanoid/spanoid.hpp"

namespace spanoid {

// "spanoid v1":  n <int> / rule <i1> ... <ik> -> <j>    (1-based, # comments)
Spanoid parse_spanoid(const std::string& text);
std::string format_spanoid(const Spanoid& sp);

// "family v1":   n <int> / set <i1> ... <ik> / set empty
SetFamily parse_family(const std::string& text);
std::string format_family(const SetFamily& fam);

// "code v1":     n <int> / s <int> / one word per line
Code parse_code(const std::string& text);
std::string format_code(const Code& c);

// "lcs v1":      n / q / delta p/q / rule lines / match <i> : <j1> ... <jq>
LcsInstance parse_lcs(const std::string& text);
std::string format_lcs(const LcsInstance& inst);

std::string format_subset(const Subset& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace spanoid
