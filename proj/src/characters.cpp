#include "schurlab/characters.hpp"

#include "schurlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace schurlab {

std::int64_t CharacterTable::num_points() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), std::int64_t{0});
}

GaussInt abelian_char_value(const AbelianGroup& g, AbelianGroup::Element u, AbelianGroup::Element v) {
  const int k = g.dot(u, v);
  if (g.modulus() == 2) return k == 0 ? GaussInt{1} : GaussInt{-1};
  return i_pow(k);
}

GaussInt abelian_char_value(const ZmVector& u, const ZmVector& v) {
  if (u.modulus() != v.modulus() || u.size() != v.size()) throw DimensionError("abelian_char_value: group mismatch");
  const AbelianGroup g(u.modulus(), u.size());
  return abelian_char_value(g, g.encode(u), g.encode(v));
}

CharacterTable character_table(const AssociationScheme& s) {
  const AbelianGroup& g = s.group();
  const int rank = s.rank();
  const auto& classes = s.partition().classes;

  std::map<std::vector<GaussInt>, std::int64_t> rows;
  std::vector<GaussInt> row(static_cast<std::size_t>(rank));
  for (std::uint32_t u = 0; u < g.order(); ++u) {
    for (int j = 0; j < rank; ++j) {
      GaussInt acc;
      for (auto v : classes[static_cast<std::size_t>(j)]) acc += abelian_char_value(g, u, v);
      row[static_cast<std::size_t>(j)] = acc;
    }
    ++rows[row];
  }
  if (static_cast<int>(rows.size()) != rank) {
    throw SchemeError("character table has " + std::to_string(rows.size()) + " distinct rows for rank " +
                      std::to_string(rank));
  }

  std::vector<GaussInt> trivial(s.valencies().begin(), s.valencies().end());
  CharacterTable t;
  t.entries.resize(rank, rank);
  t.valencies = s.valencies();
  auto put = [&](int r, const std::vector<GaussInt>& values, std::int64_t mult) {
    for (int j = 0; j < rank; ++j) t.entries(r, j) = values[static_cast<std::size_t>(j)];
    t.multiplicities.push_back(mult);
  };
  put(0, trivial, rows.at(trivial));
  int r = 1;
  for (const auto& [values, mult] : rows) {
    if (values != trivial) put(r++, values, mult);
  }
  return t;
}

VerificationReport verify_orthogonality(const CharacterTable& t) {
  VerificationReport report;
  const int rank = t.rank();
  const std::int64_t X = t.num_points();
  std::int64_t lcm = 1;
  for (auto n : t.valencies) lcm = std::lcm(lcm, n);

  // (m_i/|X|) sum_j chi_i(A_j) conj(chi_i'(A_j)) / n_j = delta, times |X| lcm.
  for (int i = 0; i < rank; ++i) {
    for (int i2 = 0; i2 < rank; ++i2) {
      GaussInt acc;
      for (int j = 0; j < rank; ++j) {
        acc += t.entries(i, j) * conj(t.entries(i2, j)) * GaussInt{lcm / t.valencies[static_cast<std::size_t>(j)]};
      }
      acc *= GaussInt{t.multiplicities[static_cast<std::size_t>(i)]};
      const GaussInt expected = i == i2 ? GaussInt{X * lcm} : GaussInt{0};
      if (acc != expected) {
        report.failures.push_back("first orthogonality relation fails for rows (" + std::to_string(i) + "," +
                                  std::to_string(i2) + "): " + to_string(acc) + " != " + to_string(expected));
      }
    }
  }
  // (1/(n_j|X|)) sum_i m_i chi_i(A_j) conj(chi_i(A_j')) = delta.
  for (int j = 0; j < rank; ++j) {
    for (int j2 = 0; j2 < rank; ++j2) {
      GaussInt acc;
      for (int i = 0; i < rank; ++i) {
        acc += GaussInt{t.multiplicities[static_cast<std::size_t>(i)]} * t.entries(i, j) * conj(t.entries(i, j2));
      }
      const GaussInt expected = j == j2 ? GaussInt{t.valencies[static_cast<std::size_t>(j)] * X} : GaussInt{0};
      if (acc != expected) {
        report.failures.push_back("second orthogonality relation fails for columns (" + std::to_string(j) + "," +
                                  std::to_string(j2) + "): " + to_string(acc) + " != " + to_string(expected));
      }
    }
  }
  return report;
}

VerificationReport verify_kernel_lemma(const AssociationScheme& s, const CharacterTable& t) {
  VerificationReport report;
  for (const ClosedSubset& c : closed_subsets(s)) {
    for (int r = 0; r < t.rank(); ++r) {
      bool in_kernel = true;
      GaussInt sum;
      for (int i : c.class_indices) {
        in_kernel = in_kernel && t.entries(r, i) == GaussInt{t.valencies[static_cast<std::size_t>(i)]};
        sum += t.entries(r, i);
      }
      if (!in_kernel && sum != GaussInt{0}) {
        std::ostringstream msg;
        msg << "character " << r << " is not trivial on closed subset {";
        for (std::size_t k = 0; k < c.class_indices.size(); ++k) msg << (k ? "," : "") << c.class_indices[k];
        msg << "} but sums to " << to_string(sum);
        report.failures.push_back(msg.str());
      }
    }
  }
  return report;
}

std::optional<std::vector<int>> self_dual_check(const CharacterTable& t) {
  const int rank = t.rank();
  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < rank && ok; ++i) {
      for (int j = 0; j < rank && ok; ++j) {
        const GaussInt lhs = GaussInt{t.valencies[static_cast<std::size_t>(i)]} * t.entries(perm[static_cast<std::size_t>(i)], j);
        const GaussInt rhs = GaussInt{t.valencies[static_cast<std::size_t>(j)]} * t.entries(perm[static_cast<std::size_t>(j)], i);
        ok = lhs == rhs;
      }
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return std::nullopt;
}

std::string to_string(const XuTemplate& t) {
  switch (t.kind) {
    case XuTemplate::Kind::T1: return "T1(lambda=" + std::to_string(t.parameter) + ")";
    case XuTemplate::Kind::T2: return "T2(theta=" + std::to_string(t.parameter) + ")";
    case XuTemplate::Kind::T3: return "T3(theta=" + std::to_string(t.parameter) + ")";
  }
  return "?";
}

GaussMatrix xu_table(const XuTemplate& t) {
  GaussMatrix m(4, 4);
  const std::int64_t p = t.parameter;
  if (t.kind == XuTemplate::Kind::T1) {
    if (p <= 0 || p % 3 != 0) throw ConfigurationError("T1 requires a positive lambda divisible by 3");
    const std::int64_t l = p;
    m << GaussInt{1}, GaussInt{l * (l - 1)}, GaussInt{l * (l + 1)}, GaussInt{(l - 1) * (l + 1)},
         GaussInt{1}, GaussInt{l},           GaussInt{0},           GaussInt{-l - 1},
         GaussInt{1}, GaussInt{0},           GaussInt{-l},          GaussInt{l - 1},
         GaussInt{1}, GaussInt{-l},          GaussInt{l},           GaussInt{-1};
    return m;
  }
  if (p <= 0 || p % 2 == 0) throw ConfigurationError("T2/T3 require a positive odd theta");
  const std::int64_t big = p * (p + 1) / 2;
  const std::int64_t h = (p + 1) / 2;
  const GaussInt a = t.kind == XuTemplate::Kind::T2 ? GaussInt{h} : GaussInt{0, h};
  m << GaussInt{1}, GaussInt{big}, GaussInt{big}, GaussInt{p},
       GaussInt{1}, a,             -a,            GaussInt{-1},
       GaussInt{1}, -a,            a,             GaussInt{-1},
       GaussInt{1}, GaussInt{-h},  GaussInt{-h},  GaussInt{p};
  return m;
}

namespace {

bool rows_match(const GaussMatrix& table, int row, const GaussMatrix& tmpl, int trow, const std::vector<int>& cols) {
  bool plain = true;
  bool conjugated = true;
  for (int c = 0; c < tmpl.cols(); ++c) {
    const GaussInt v = table(row, cols[static_cast<std::size_t>(c)]);
    plain = plain && v == tmpl(trow, c);
    conjugated = conjugated && conj(v) == tmpl(trow, c);
  }
  return plain || conjugated;
}

bool matches(const GaussMatrix& table, const GaussMatrix& tmpl) {
  const int rank = static_cast<int>(tmpl.rows());
  std::vector<int> cols(static_cast<std::size_t>(rank));
  std::iota(cols.begin(), cols.end(), 0);
  do {
    std::vector<int> rows(static_cast<std::size_t>(rank));
    std::iota(rows.begin(), rows.end(), 0);
    do {
      bool ok = true;
      for (int r = 0; r < rank && ok; ++r) ok = rows_match(table, rows[static_cast<std::size_t>(r)], tmpl, r, cols);
      if (ok) return true;
    } while (std::next_permutation(rows.begin() + 1, rows.end()));
  } while (std::next_permutation(cols.begin() + 1, cols.end()));
  return false;
}

std::optional<std::int64_t> exact_sqrt(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return std::nullopt;
  return r;
}

}  // namespace

std::optional<XuTemplate> template_match(const CharacterTable& t) {
  if (t.rank() != 4) return std::nullopt;
  std::vector<XuTemplate> candidates;
  for (std::size_t j = 1; j < t.valencies.size(); ++j) {
    const std::int64_t n = t.valencies[j];
    if (auto l = exact_sqrt(n + 1); l && *l > 0 && *l % 3 == 0) candidates.push_back({XuTemplate::Kind::T1, *l});
  }
  for (std::size_t j = 1; j < t.valencies.size(); ++j) {
    const std::int64_t n = t.valencies[j];
    if (n > 0 && n % 2 == 1) {
      candidates.push_back({XuTemplate::Kind::T2, n});
      candidates.push_back({XuTemplate::Kind::T3, n});
    }
  }
  for (const XuTemplate& c : candidates) {
    if (matches(t.entries, xu_table(c))) return c;
  }
  return std::nullopt;
}

}  // namespace schurlab
