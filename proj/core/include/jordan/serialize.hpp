#pragma once

#include <string>

#include <json.hpp>

#include "jordan/algebra.hpp"
#include "jordan/reconstruct.hpp"
#include "jordan/report.hpp"
#include "jordan/tolerance.hpp"

namespace jordan {

// Algebra descriptor: {"kind":"matrix","ring":"C","m":3}, {"kind":"spin","n":4},
// {"kind":"sum","parts":[...]}. Parsers throw ParseError.
nlohmann::json algebra_to_json(const Algebra& algebra);
Algebra algebra_from_json(const nlohmann::json& j);
/// Accepts inline JSON text.
Algebra parse_algebra(const std::string& text);

// Element: {"algebra": <descriptor>, "coords": [...]}.
nlohmann::json element_to_json(const Element& e);
Element element_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CheckReport& r);
nlohmann::json spectral_to_json(const SpectralDecomposition& sd);

nlohmann::json tolerances_to_json(const Tolerances& t);
/// Sets the named field ("projection", "meet_eigenvalue", ...). Throws ParseError
/// for unknown names.
void set_tolerance(Tolerances& t, const std::string& name, double value);

nlohmann::json construction_to_json(const SpinConstruction& c);
SpinConstruction construction_from_json(const nlohmann::json& j);

}  // namespace jordan
