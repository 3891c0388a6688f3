#include "schurlab/scheme.hpp"

#include "schurlab/errors.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace schurlab {

std::string to_string(SchurFailure::Kind kind) {
  switch (kind) {
    case SchurFailure::Kind::NotAPartition: return "not-a-partition";
    case SchurFailure::Kind::IdentityClass: return "identity-class";
    case SchurFailure::Kind::MissingInverse: return "missing-inverse";
    case SchurFailure::Kind::Closure: return "closure-violation";
  }
  return "unknown";
}

namespace {

SchurFailure make_failure(SchurFailure::Kind kind, std::string message) {
  SchurFailure f;
  f.kind = kind;
  f.message = std::move(message);
  return f;
}

}  // namespace

SchurValidation validate_schur(const SchurPartition& p) {
  SchurValidation result;
  const AbelianGroup& g = p.group;
  const int rank = p.rank();
  const std::uint32_t order = g.order();

  std::vector<int> class_of(order, -1);
  if (rank == 0) {
    result.failure = make_failure(SchurFailure::Kind::NotAPartition, "partition has no classes");
    return result;
  }
  for (int i = 0; i < rank; ++i) {
    if (p.classes[static_cast<std::size_t>(i)].empty()) {
      result.failure = make_failure(SchurFailure::Kind::NotAPartition, "class S_" + std::to_string(i) + " is empty");
      return result;
    }
    for (auto e : p.classes[static_cast<std::size_t>(i)]) {
      if (e >= order) {
        result.failure = make_failure(SchurFailure::Kind::NotAPartition,
                                      "class S_" + std::to_string(i) + " contains a non-group element");
        return result;
      }
      if (class_of[e] != -1) {
        result.failure = make_failure(SchurFailure::Kind::NotAPartition,
                                      "element " + g.decode(e).to_string() + " lies in S_" +
                                          std::to_string(class_of[e]) + " and S_" + std::to_string(i));
        result.failure->element = e;
        return result;
      }
      class_of[e] = i;
    }
  }
  if (auto missing = std::find(class_of.begin(), class_of.end(), -1); missing != class_of.end()) {
    const auto e = static_cast<AbelianGroup::Element>(missing - class_of.begin());
    result.failure = make_failure(SchurFailure::Kind::NotAPartition,
                                  "element " + g.decode(e).to_string() + " is not covered by any class");
    result.failure->element = e;
    return result;
  }

  if (p.classes[0].size() != 1 || p.classes[0][0] != g.identity()) {
    result.failure = make_failure(SchurFailure::Kind::IdentityClass, "S_0 must be exactly {0}");
    return result;
  }

  result.pairing.assign(static_cast<std::size_t>(rank), -1);
  for (int i = 0; i < rank; ++i) {
    const auto& cls = p.classes[static_cast<std::size_t>(i)];
    const int partner = class_of[g.neg(cls.front())];
    const bool closed = p.classes[static_cast<std::size_t>(partner)].size() == cls.size() &&
                        std::all_of(cls.begin(), cls.end(), [&](auto e) { return class_of[g.neg(e)] == partner; });
    if (!closed) {
      result.failure = make_failure(SchurFailure::Kind::MissingInverse,
                                    "-S_" + std::to_string(i) + " is not a class of the partition");
      result.failure->i = i;
      return result;
    }
    result.pairing[static_cast<std::size_t>(i)] = partner;
  }

  result.structure_constants = IntersectionTensor(rank);
  std::vector<std::int64_t> coef(order);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      std::fill(coef.begin(), coef.end(), 0);
      for (auto a : p.classes[static_cast<std::size_t>(i)]) {
        for (auto b : p.classes[static_cast<std::size_t>(j)]) ++coef[g.add(a, b)];
      }
      for (int k = 0; k < rank; ++k) {
        const auto& cls = p.classes[static_cast<std::size_t>(k)];
        const std::int64_t expected = coef[cls.front()];
        for (auto e : cls) {
          if (coef[e] != expected) {
            std::ostringstream msg;
            msg << "S_" << i << "*S_" << j << " is not a combination of class sums: " << g.decode(cls.front()).to_string()
                << " has coefficient " << expected << " but " << g.decode(e).to_string() << " (also in S_" << k
                << ") has " << coef[e];
            SchurFailure f = make_failure(SchurFailure::Kind::Closure, msg.str());
            f.i = i;
            f.j = j;
            f.element = cls.front();
            f.other = e;
            f.count = expected;
            f.other_count = coef[e];
            result.failure = std::move(f);
            return result;
          }
        }
        result.structure_constants(i, j, k) = expected;
      }
    }
  }
  return result;
}

bool AssociationScheme::is_symmetric() const {
  for (int i = 0; i < rank(); ++i) {
    if (pairing_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

bool AssociationScheme::is_commutative() const {
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) {
      for (int k = 0; k < rank(); ++k) {
        if (p_(i, j, k) != p_(j, i, k)) return false;
      }
    }
  }
  return true;
}

AssociationScheme scheme_from_partition(const SchurPartition& p) {
  SchurValidation v = validate_schur(p);
  if (!v.ok()) throw SchemeError(to_string(v.failure->kind) + ": " + v.failure->message);

  AssociationScheme s(p);
  s.class_of_element_.assign(p.group.order(), -1);
  for (int i = 0; i < p.rank(); ++i) {
    for (auto e : p.classes[static_cast<std::size_t>(i)]) s.class_of_element_[e] = i;
    s.valencies_.push_back(static_cast<std::int64_t>(p.classes[static_cast<std::size_t>(i)].size()));
  }
  s.pairing_ = std::move(v.pairing);
  s.p_ = intersection_numbers(s);
  if (s.p_ != v.structure_constants) throw SchemeError("intersection numbers disagree with structure constants");
  return s;
}

IntersectionTensor intersection_numbers(const AssociationScheme& s) {
  const int rank = s.rank();
  const auto& classes = s.partition().classes;
  const AbelianGroup& g = s.group();
  IntersectionTensor t(rank);
  for (int k = 0; k < rank; ++k) {
    const auto rep = classes[static_cast<std::size_t>(k)].front();
    for (int i = 0; i < rank; ++i) {
      for (auto a : classes[static_cast<std::size_t>(i)]) ++t(i, s.class_of_element(g.sub(rep, a)), k);
    }
  }
  return t;
}

void verify_representatives(const AssociationScheme& s, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, s.num_points() - 1);
  const int rank = s.rank();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(rank * rank));
  for (int t = 0; t < samples; ++t) {
    const auto x = pick(rng);
    const auto y = pick(rng);
    const int k = s.class_of(x, y);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint32_t z = 0; z < s.num_points(); ++z) ++counts[static_cast<std::size_t>(s.class_of(x, z) * rank + s.class_of(z, y))];
    for (int i = 0; i < rank; ++i) {
      for (int j = 0; j < rank; ++j) {
        if (counts[static_cast<std::size_t>(i * rank + j)] != s.p()(i, j, k)) {
          std::ostringstream msg;
          msg << "p_" << i << j << "^" << k << " depends on the representative: pair ("
              << s.group().decode(x).to_string() << "," << s.group().decode(y).to_string() << ") gives "
              << counts[static_cast<std::size_t>(i * rank + j)] << ", expected " << s.p()(i, j, k);
          throw SchemeError(msg.str());
        }
      }
    }
  }
}

std::vector<ClosedSubset> closed_subsets(const AssociationScheme& s) {
  const int d = s.d();
  std::vector<ClosedSubset> out;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    std::vector<bool> in(static_cast<std::size_t>(d + 1), false);
    in[0] = true;
    for (int i = 1; i <= d; ++i) in[static_cast<std::size_t>(i)] = ((mask >> (i - 1)) & 1u) != 0;

    bool closed = true;
    for (int i = 0; i <= d && closed; ++i) {
      for (int j = 0; j <= d && closed; ++j) {
        if (!in[static_cast<std::size_t>(i)] || !in[static_cast<std::size_t>(j)]) continue;
        for (int k = 0; k <= d; ++k) {
          if (!in[static_cast<std::size_t>(k)] && s.p()(i, j, k) != 0) {
            closed = false;
            break;
          }
        }
      }
    }
    if (!closed) continue;
    ClosedSubset c;
    for (int i = 0; i <= d; ++i) {
      if (in[static_cast<std::size_t>(i)]) c.class_indices.push_back(i);
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const ClosedSubset& a, const ClosedSubset& b) {
    return std::make_pair(a.class_indices.size(), a.class_indices) < std::make_pair(b.class_indices.size(), b.class_indices);
  });
  return out;
}

}  // namespace schurlab
