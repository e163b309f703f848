#pragma once

#include <map>
#include <string>
#include <string_view>

#include "smp/instance.hpp"

namespace smp {

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

// Absent edge ids read as 0; unknown ids are an error.
Assignment parse_assignment(const Instance& inst, std::string_view text);
std::string serialize_assignment(const Instance& inst, const Assignment& x);

// {"costs": {...}} or a bare {edge: rational} object; absent edges cost 0.
std::vector<Rational> parse_costs(const Instance& inst, std::string_view text);

std::string read_file(const std::string& path);

}  // namespace smp
