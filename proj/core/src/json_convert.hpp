// Internal JSON <-> domain-type conversion helpers shared by the document
// parser and the command layer. Not installed.
#ifndef AFFCRYST_SRC_JSON_CONVERT_HPP
#define AFFCRYST_SRC_JSON_CONVERT_HPP

#include <json.hpp>

#include "affcryst/document.hpp"
#include "affcryst/errors.hpp"

namespace affcryst::jsonio {

using ordered_json = nlohmann::ordered_json;

Scalar scalar_from_json(const ordered_json& j, long d);
ordered_json scalar_to_json(const Scalar& s);

Vec vec_from_json(const ordered_json& j, long d);
ordered_json vec_to_json(const Vec& v);

Matrix matrix_from_json(const ordered_json& j, long d);
ordered_json matrix_to_json(const Matrix& m);

long disc_from_field(const ordered_json& doc);  ///< 0 when absent / type Q
ordered_json field_to_json(long d);

LieAlgebra lie_from_json(const ordered_json& j);
ordered_json lie_to_json(const LieAlgebra& lie);
long lie_disc(const LieAlgebra& lie);

AffineRep rep_from_json(const ordered_json& j);
ordered_json rep_to_json(const AffineRep& rep);

PolycyclicRep pcrep_from_json(const ordered_json& j);
ordered_json pcrep_to_json(const PolycyclicRep& rep);

CAProduct ca_from_json(const ordered_json& j);
ordered_json ca_to_json(const CAProduct& product);

ExtensionDocument ext_from_json(const ordered_json& j);

}  // namespace affcryst::jsonio

#endif
