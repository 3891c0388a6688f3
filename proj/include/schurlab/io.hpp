#pragma once

#include "schurlab/autgroup.hpp"
#include "schurlab/characters.hpp"
#include "schurlab/designs.hpp"
#include "schurlab/scheme.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace schurlab {

using Json = nlohmann::ordered_json;

/// Matrices as arrays of row arrays.
Json matrix_to_json(const ZMatrix& m);
ZMatrix matrix_from_json(const Json& j);

/// Polynomials as coefficient arrays, lowest degree first.
Json poly_to_json(Gf2Poly p);

/// {m, n, classes: [[coords...]], valencies, pairing, p}.
Json scheme_to_json(const AssociationScheme& s);

/// Contents of a scheme file. Only `partition` is authoritative; the derived
/// fields are kept so `verify` can compare them with recomputed values.
struct SchemeFile {
  SchurPartition partition;
  std::optional<std::vector<std::int64_t>> valencies;
  std::optional<std::vector<int>> pairing;
  std::optional<IntersectionTensor> p;
};

/// Throws std::invalid_argument on structurally malformed documents.
SchemeFile scheme_file_from_json(const Json& j);

/// Entries as [re, im] pairs.
Json character_table_to_json(const CharacterTable& t);
Json pgd_certificate_to_json(const std::optional<PgdCertificate>& c);

}  // namespace schurlab
