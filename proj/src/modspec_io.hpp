#pragma once

#include "ideal.hpp"
#include "pmodule.hpp"

#include <string>

namespace rk {

// Parsed module specification file.
struct ModuleSpec {
    PModule module;
    std::string label;
};

// JSON schema:
//   {
//     "ring": {"char": p, "vars": ["x", "y"]},    // p prime, or 0 for Q
//     "presentation": [["y"], ["-x"]],            // rows = generators,
//                                                 // columns = relations
//     "ambient_rank": 2,                          // required iff presentation
//                                                 // is [] (free module)
//     "label": "ci-xy",                           // optional
//     "generator_degrees": [1, 1]                 // optional, informational
//   }
// Throws InvalidInput with a location for schema violations, non-prime
// characteristic, ragged grids, and polynomial parse errors.
ModuleSpec parse_module_spec(const std::string& bytes);

// Spec echo of a module (JSON object text); re-parses invariant-equal.
std::string module_spec_string(const PModule& E, const std::string& label = "");

// Generator strings of the reduced GB, sorted by (degree, lexicographic
// string) for byte-stable reports.
std::vector<std::string> sorted_gb_strings(const IdealData& I);

}  // namespace rk
