#pragma once

#include <string>

#include "bqcp/instance.hpp"

namespace bqcp {

// JSON text <-> instance. Loading validates; serialization is canonical so
// that serialize(load(text)) == text for files produced by this library.
ProblemInstance parse_instance(const std::string& json_text);
std::string serialize_instance(const ProblemInstance& inst);

ProblemInstance load_instance(const std::string& path);
void save_instance(const ProblemInstance& inst, const std::string& path);

}  // namespace bqcp
