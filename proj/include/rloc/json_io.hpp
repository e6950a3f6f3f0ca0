#pragma once

// Deterministic JSON serialization of the computed data: conjugacy class
// data, irreducible character tables, and the regular character sets.
// Documents are rendered with fixed key order and sorted cyclotomic terms
// so repeated runs produce byte-identical files.

#include <string>

#include "rloc/tensor.hpp"

namespace rloc {

// "<kind>_<p>_<ell>", the stem of every cache file for one group
std::string cache_stem(const GroupSpec& spec);

std::string classes_json(const Group& G, const ClassTable& ct);
std::string irr_json(const Group& G, const ClassTable& ct,
                     const CharTable& tab);
std::string regular_json(const Group& G, const ClassTable& ct,
                         const RegularSet& rs);

// atomic whole-file write / read; read returns empty string when absent
void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

}  // namespace rloc
