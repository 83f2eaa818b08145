#pragma once

#include "homcat/complex.hpp"
#include "homcat/report.hpp"

namespace homcat {

struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// {"field": {"kind":"Q"}|{"kind":"Fp","p":5},
///  "objects": [{"label": "...", "dim": n}, ...],
///  "homs": [{"src","tgt","basis":[{"label","matrix":[["0","1"],...]}]}]}
PresPtr presentation_from_json(const Json& j);
PresPtr load_presentation_file(const std::string& path);

/// {"presentation": "path.json", "components": {"0": ["A"], ...},
///  "differentials": {"0": [[...]], ...}}; the presentation path is resolved
/// relative to the complex file.
Complex complex_from_json(const Json& j, const PresPtr& p);
Complex load_complex_file(const std::string& path);

Json load_json_file(const std::string& path);

}  // namespace homcat
