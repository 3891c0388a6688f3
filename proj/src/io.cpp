#include "schurlab/io.hpp"

#include <stdexcept>

namespace schurlab {

Json matrix_to_json(const ZMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

ZMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ZMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw std::invalid_argument("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = row[static_cast<std::size_t>(c)].get<int>();
  }
  return m;
}

Json poly_to_json(Gf2Poly p) { return Json(poly_coefficients(p)); }

Json scheme_to_json(const AssociationScheme& s) {
  const AbelianGroup& g = s.group();
  Json classes = Json::array();
  for (const auto& cls : s.partition().classes) {
    Json members = Json::array();
    for (auto e : cls) {
      const ZmVector v = g.decode(e);
      members.push_back(std::vector<int>(v.coords().begin(), v.coords().end()));
    }
    classes.push_back(std::move(members));
  }
  Json p = Json::array();
  for (int i = 0; i < s.rank(); ++i) {
    Json pi = Json::array();
    for (int j = 0; j < s.rank(); ++j) {
      Json pij = Json::array();
      for (int k = 0; k < s.rank(); ++k) pij.push_back(s.p()(i, j, k));
      pi.push_back(std::move(pij));
    }
    p.push_back(std::move(pi));
  }
  Json out;
  out["m"] = g.modulus();
  out["n"] = g.rank();
  out["classes"] = std::move(classes);
  out["valencies"] = s.valencies();
  out["pairing"] = s.pairing();
  out["p"] = std::move(p);
  return out;
}

SchemeFile scheme_file_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("scheme document must be an object");
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    SchemeFile file{SchurPartition{AbelianGroup(m, n), {}}, std::nullopt, std::nullopt, std::nullopt};
    const AbelianGroup& g = file.partition.group;
    for (const Json& cls : j.at("classes")) {
      std::vector<AbelianGroup::Element> members;
      for (const Json& v : cls) {
        const auto coords = v.get<std::vector<int>>();
        if (static_cast<int>(coords.size()) != n) throw std::invalid_argument("class member has wrong length");
        ZRowVector c(n);
        for (int i = 0; i < n; ++i) {
          if (coords[static_cast<std::size_t>(i)] < 0 || coords[static_cast<std::size_t>(i)] >= m) {
            throw std::invalid_argument("class member coordinate out of range");
          }
          c(i) = coords[static_cast<std::size_t>(i)];
        }
        members.push_back(g.encode(ZmVector(m, c)));
      }
      file.partition.classes.push_back(std::move(members));
    }
    if (j.contains("valencies")) file.valencies = j["valencies"].get<std::vector<std::int64_t>>();
    if (j.contains("pairing")) file.pairing = j["pairing"].get<std::vector<int>>();
    if (j.contains("p")) {
      const Json& p = j["p"];
      const int rank = static_cast<int>(p.size());
      IntersectionTensor t(rank);
      for (int a = 0; a < rank; ++a) {
        if (p[static_cast<std::size_t>(a)].size() != static_cast<std::size_t>(rank)) throw std::invalid_argument("p is not cubic");
        for (int b = 0; b < rank; ++b) {
          const Json& row = p[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          if (row.size() != static_cast<std::size_t>(rank)) throw std::invalid_argument("p is not cubic");
          for (int c = 0; c < rank; ++c) t(a, b, c) = row[static_cast<std::size_t>(c)].get<std::int64_t>();
        }
      }
      file.p = std::move(t);
    }
    return file;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed scheme JSON: ") + e.what());
  }
}

Json character_table_to_json(const CharacterTable& t) {
  Json entries = Json::array();
  for (int r = 0; r < t.rank(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < t.rank(); ++c) row.push_back({t.entries(r, c).re, t.entries(r, c).im});
    entries.push_back(std::move(row));
  }
  Json out;
  out["entries"] = std::move(entries);
  out["valencies"] = t.valencies;
  out["multiplicities"] = t.multiplicities;
  return out;
}

Json pgd_certificate_to_json(const std::optional<PgdCertificate>& c) {
  if (!c) return nullptr;
  Json out;
  out["alpha"] = c->alpha ? Json(*c->alpha) : Json("vacuous");
  out["beta"] = c->beta;
  out["replication"] = c->replication;
  return out;
}

}  // namespace schurlab
