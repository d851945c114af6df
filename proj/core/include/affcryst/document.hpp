#ifndef AFFCRYST_DOCUMENT_HPP
#define AFFCRYST_DOCUMENT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "affcryst/affine_rep.hpp"
#include "affcryst/realization.hpp"
#include "affcryst/shadow.hpp"
#include "affcryst/torus.hpp"

namespace affcryst {

/// Lie algebra input, optionally with a grading (build graded) and a
/// derivation matrix (build derivation).
struct LieDocument {
  LieAlgebra algebra;
  std::optional<Grading> grading;
  std::optional<Matrix> derivation;
};

/// Extension input; lifts are optional (verified when supplied,
/// constructed otherwise).
struct ExtensionDocument {
  ExtensionSpec spec;
  std::optional<std::vector<AffineMap>> lifts;
};

using Payload = std::variant<std::monostate, LieDocument, AffineRep,
                             PolycyclicRep, CAProduct, ExtensionDocument>;

struct Document {
  int schema = 1;
  Payload payload;
};

/// Parses a self-describing JSON document (kind: lie | rep | pcrep | ca |
/// ext). Throws ParseError on malformed input, InvariantError on domain
/// violations. Scalars are "p" / "p/q" strings or {"a":..,"b":..} objects
/// in the document's quadratic field; unknown keys are ignored.
Document parse_document(const std::string& text);

std::string emit_document(const LieAlgebra& lie);
std::string emit_document(const AffineRep& rep);
std::string emit_document(const PolycyclicRep& rep);
std::string emit_document(const CAProduct& product);

}  // namespace affcryst

#endif
