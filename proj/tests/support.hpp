#pragma once

// Shared fixtures and brute-force oracles. The oracles work from point sets
// and literal definitions and deliberately avoid the library's fast paths.

#include "schurlab/schurlab.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace schurlab;

struct NamedScheme {
  std::string label;
  SchurPartition partition;
  bool symmetric_expected;
};

// Every instance the constructions are claimed for: z2 n = 1..4 and z4
// n = 1..3 with all W.
inline std::vector<NamedScheme> generated_partitions(int max_z2 = 4, int max_z4 = 3) {
  std::vector<NamedScheme> out;
  for (int n = 1; n <= max_z2; ++n) out.push_back({"z2 n=" + std::to_string(n), lines_z2(n), true});
  for (int n = 1; n <= max_z4; ++n) {
    for (const OrbitSpec& spec : enumerate_W(n)) {
      std::string w;
      for (const auto& g : spec.w_generators) w += g.to_string();
      out.push_back({"z4 n=" + std::to_string(n) + " W=" + w, orbits_z4(spec), spec.symmetric});
    }
  }
  return out;
}

// Literal triple loop over points: p_ij^k counted at every pair in R_k, and
// required to agree across pairs. Returns nullopt if it does not.
inline std::optional<IntersectionTensor> intersection_oracle(const SchurPartition& p) {
  const AbelianGroup& g = p.group;
  const std::uint32_t N = g.order();
  std::vector<int> cls(N, -1);
  for (int i = 0; i < p.rank(); ++i) {
    for (auto e : p.classes[static_cast<std::size_t>(i)]) cls[e] = i;
  }
  auto rel = [&](std::uint32_t x, std::uint32_t y) { return cls[g.sub(x, y)]; };
  const int r = p.rank();
  IntersectionTensor t(r);
  std::vector<bool> seen(static_cast<std::size_t>(r), false);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(r * r));
  for (std::uint32_t x = 0; x < N; ++x) {
    for (std::uint32_t y = 0; y < N; ++y) {
      const int k = rel(x, y);
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint32_t z = 0; z < N; ++z) ++counts[static_cast<std::size_t>(rel(x, z) * r + rel(z, y))];
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
          const auto c = counts[static_cast<std::size_t>(i * r + j)];
          if (!seen[static_cast<std::size_t>(k)]) {
            t(i, j, k) = c;
          } else if (t(i, j, k) != c) {
            return std::nullopt;
          }
        }
      }
      seen[static_cast<std::size_t>(k)] = true;
    }
  }
  return t;
}

// Moves one random element of a non-trivial class into another non-trivial
// class (or a fresh class if the rank is 2).
inline SchurPartition perturb(const SchurPartition& p, std::mt19937_64& rng) {
  SchurPartition q = p;
  std::vector<int> sources;
  for (int i = 1; i < q.rank(); ++i) {
    if (q.classes[static_cast<std::size_t>(i)].size() > 1) sources.push_back(i);
  }
  const int from = sources[std::uniform_int_distribution<std::size_t>(0, sources.size() - 1)(rng)];
  auto& src = q.classes[static_cast<std::size_t>(from)];
  const std::size_t at = std::uniform_int_distribution<std::size_t>(0, src.size() - 1)(rng);
  const auto e = src[at];
  src.erase(src.begin() + static_cast<std::ptrdiff_t>(at));
  if (q.rank() == 2) {
    q.classes.push_back({e});
    return q;
  }
  int to = from;
  while (to == from) to = std::uniform_int_distribution<int>(1, q.rank() - 1)(rng);
  q.classes[static_cast<std::size_t>(to)].push_back(e);
  return q;
}

// chi_u(A_j) summed directly from the definition of the group characters.
inline GaussInt character_sum_oracle(const AbelianGroup& g, AbelianGroup::Element u,
                                     const std::vector<AbelianGroup::Element>& cls) {
  static const GaussInt powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  GaussInt sum{0, 0};
  const ZmVector uu = g.decode(u);
  for (auto e : cls) {
    const ZmVector v = g.decode(e);
    int dot = 0;
    for (int c = 0; c < v.size(); ++c) dot += uu[c] * v[c];
    sum = sum + (g.modulus() == 2 ? powers[(dot % 2) * 2] : powers[dot % 4]);
  }
  return sum;
}

// Flag count from the definition: for x and block B, the number of (y, C)
// with x in C and y in C and B. Returns (alpha, beta) or nullopt if either
// is not constant. alpha is nullopt when every x lies in every block.
struct PgdOracle {
  std::optional<std::int64_t> alpha;
  std::int64_t beta;
};

inline std::optional<PgdOracle> pgd_oracle(const IncidenceMatrix& N) {
  const auto v = N.rows();
  const auto b = N.cols();
  std::optional<std::int64_t> alpha, beta;
  for (Eigen::Index x = 0; x < v; ++x) {
    for (Eigen::Index B = 0; B < b; ++B) {
      std::int64_t flags = 0;
      for (Eigen::Index y = 0; y < v; ++y) {
        if (N(y, B) == 0) continue;
        for (Eigen::Index C = 0; C < b; ++C) flags += N(x, C) * N(y, C);
      }
      auto& slot = N(x, B) != 0 ? beta : alpha;
      if (slot && *slot != flags) return std::nullopt;
      slot = flags;
    }
  }
  if (!beta) return std::nullopt;
  return PgdOracle{alpha, *beta};
}

// Automorphisms of a colored complete graph by trying every permutation.
inline std::uint64_t count_automorphisms(const ColoredGraph& g) {
  Permutation p(g.n_points());
  std::iota(p.begin(), p.end(), 0u);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::uint32_t x = 0; x < g.n_points() && ok; ++x) {
      for (std::uint32_t y = 0; y < g.n_points() && ok; ++y) ok = g.color(p[x], p[y]) == g.color(x, y);
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace testing
