#pragma once

// JSON encodings of the library types. Rationals travel as "num/den"
// strings so nothing is lost; doubles use the shortest round-trip form.

#include "json.hpp"

#include "appell/fourier.hpp"
#include "appell/higher_order.hpp"
#include "appell/oracle.hpp"
#include "appell/polynomial.hpp"
#include "appell/rational.hpp"
#include "appell/series.hpp"
#include "appell/symmetry.hpp"

namespace appell {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const Rational& r);
void from_json(const Json& j, Rational& r);

void to_json(Json& j, const Polynomial& p);
void from_json(const Json& j, Polynomial& p);

void to_json(Json& j, const TruncatedSeries& s);
void from_json(const Json& j, TruncatedSeries& s);

void to_json(Json& j, const AppellExpansion& e);
void from_json(const Json& j, AppellExpansion& e);

void to_json(Json& j, const CoefficientMismatch& m);
void from_json(const Json& j, CoefficientMismatch& m);

void to_json(Json& j, const SymmetryReport& r);
void from_json(const Json& j, SymmetryReport& r);

void to_json(Json& j, const SymmetryDecomposition& d);
void from_json(const Json& j, SymmetryDecomposition& d);

void to_json(Json& j, const FormulaMismatch& m);
void from_json(const Json& j, FormulaMismatch& m);

void to_json(Json& j, const ValidationReport& r);
void from_json(const Json& j, ValidationReport& r);

void to_json(Json& j, const FourierEvaluation& e);
void from_json(const Json& j, FourierEvaluation& e);

std::string family_name(Family f);
Family parse_family(std::string_view name);

}  // namespace appell
