#pragma once

#include <json.hpp>

#include "schurlab/classify.hpp"
#include "schurlab/curvature.hpp"
#include "schurlab/form.hpp"
#include "schurlab/positivity.hpp"

namespace schurlab {

// All indices are 1-based on the wire; rationals are decimal-free "p/q"
// strings, so every round trip is exact.  Key order is fixed by construction,
// which keeps identical inputs byte-identical on output.
using Json = nlohmann::ordered_json;

Json to_json(const ExactComplex& z);
ExactComplex complex_from_json(const Json& j);

Json to_json(const Form& f);
Form form_from_json(const Json& j);

Json to_json(const CurvatureTensor& R);  // upper Hermitian half only
CurvatureTensor curvature_from_json(const Json& j);

Json to_json(const ABFactorization& f);
ABFactorization ab_from_json(const Json& j);

Json to_json(const SplitSpec& s);
SplitSpec split_from_json(const Json& j);

Json to_json(const PositivityVerdict& v);
Json to_json(const ClassResult& r);
Json to_json(const ClassVerdict& v);

Json read_json_file(const std::string& path);   // "-" reads stdin
void write_output(const Json& j, const std::string& path);  // "-"/empty writes stdout

}  // namespace schurlab
