#pragma once

#include <string>

#include <json.hpp>

#include "nlie/algebra.hpp"
#include "nlie/complexes.hpp"
#include "nlie/extensions.hpp"
#include "nlie/spectral.hpp"

namespace nlie {

using json = nlohmann::json;

// File formats are 1-based and carry rationals as strings; parsers throw
// std::invalid_argument on shape errors. Emitters produce canonical JSON:
// sorted keys, increasing tuples, lowest-terms rationals.

NLieAlgebra parse_algebra(const json& j);
json emit_algebra(const NLieAlgebra& a, const std::vector<std::string>* names = nullptr);

Representation parse_rep(const json& j, const NLieAlgebra& a);
json emit_rep(const Representation& r);

//Complex kinds in files: "standard", "alternate", "leibniz", "lie", and
// "gen-der" for maps Lambda^{n-1} L -> L.
Cochain parse_cochain(const json& j, const NLieAlgebra& a, int dim_v);
json emit_cochain(const NLieAlgebra& a, int dim_v, const Cochain& c);

GenDer parse_gen_der(const json& j, const NLieAlgebra& a);
json emit_gen_der(const GenDer& g);

Mat parse_matrix(const json& j, int rows, int cols);

SubalgebraSpec parse_subalgebra(const json& j, const NLieAlgebra& a);

json emit_violation(const Violation& v);
json emit_cohomology_report(const NLieAlgebra& a, int dim_v, const CohomologyReport& rep);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);
std::string dump_canonical(const json& j);

}  // namespace nlie
