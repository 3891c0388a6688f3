#pragma once

#include "schurlab/algebra.hpp"
#include "schurlab/scheme.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace schurlab {

// ---------------------------------------------------------------------------
// Line partitions of V = GF(2^n)^2, viewed as Z_2^{2n}.

/// Slope of a line through the origin; nullopt is the vertical line L_inf.
using Slope = std::optional<GF2n::Element>;

std::string slope_to_string(const Slope& a);

struct LineAssignment {
  std::vector<Slope> p1;
  Slope p3;
};

/// The 2^n + 1 lines L_a and their split into parts P1, P2, P3.
struct LineSpread {
  GF2n field;
  std::vector<Slope> slopes;  // canonical order: finite slopes by coordinate vector, then infinity
  std::vector<int> part;      // part[i] in {1, 2, 3} for slopes[i]

  int n() const { return field.degree(); }
};

/// Canonical spread: P3 = {L_inf}, P1 the first 2^{n-1} finite slopes.
LineSpread make_line_spread(int n);
/// Throws std::invalid_argument unless |P1| = 2^{n-1}, |P3| = 1 and the
/// parts are disjoint.
LineSpread make_line_spread(int n, const LineAssignment& assignment);
/// Same, over a field with an explicit modulus.
LineSpread make_line_spread(const GF2n& field);
LineSpread make_line_spread(const GF2n& field, const LineAssignment& assignment);

/// Points of L_a as elements of Z_2^{2n} (coordinates h(x) then h(y)).
std::vector<AbelianGroup::Element> line_points(const LineSpread& spread, const Slope& a);

/// S_0 = {0}, S_i = union of the punctured lines in P_i.
SchurPartition lines_z2(const LineSpread& spread);
SchurPartition lines_z2(int n);

// ---------------------------------------------------------------------------
// Orbits of G = <P> x {E + f(w) : w in W} on Z_4^n.

struct OrbitSpec {
  int n = 0;
  CompanionLift lift;
  std::vector<ZmVector> w_generators;
  std::vector<ZmVector> w_elements;  // the span, sorted
  bool symmetric = false;             // (2, 0, ..., 0) in W
};

/// Validates that the generators lie in V_1 and span a subgroup of order
/// 2^{n-1}; throws std::invalid_argument otherwise.
OrbitSpec make_orbit_spec(int n, const std::vector<ZmVector>& w_generators);
OrbitSpec make_orbit_spec(int n, const std::vector<ZmVector>& w_generators, const CompanionLift& lift);

/// All 2^n - 1 index-2 subgroups of V_1, as kernels of the nonzero functionals
/// a in Z_2^n taken in lexicographic order.
std::vector<OrbitSpec> enumerate_W(int n);
std::vector<OrbitSpec> enumerate_W(int n, const CompanionLift& lift);

/// Orbits of the matrix group generated by `gens` acting on row vectors of
/// (Z_m)^n from the right, each sorted, listed by least element.
std::vector<std::vector<AbelianGroup::Element>> matrix_group_orbits(const AbelianGroup& g,
                                                                     const std::vector<ZMatrix>& gens);

/// S_0 = {0}, S_1 and S_2 the two orbits of length 2^{n-1}(2^n - 1) (ordered
/// by least element), S_3 = V_1 minus 0. Throws ConstructionError if the
/// orbit structure differs.
SchurPartition orbits_z4(const OrbitSpec& spec);

struct LemmaCReport {
  std::uint64_t hk_order = 0;
  std::vector<std::size_t> orbit_sizes;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks that HK = H x K has order 2^n(2^n - 1), that P commutes with K,
/// that (1, 0, ..., 0) has trivial stabilizer, and that the HK-orbits are
/// V_0, V_1 minus 0 and V_2 minus V_1.
LemmaCReport verify_lemma_c(const OrbitSpec& spec);

}  // namespace schurlab
