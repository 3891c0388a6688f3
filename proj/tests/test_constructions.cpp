#include <doctest.h>

#include "support.hpp"

#include <set>

using namespace schurlab;

namespace {

// Brute-force orbit of `seed` under the matrices, for cross-checking BFS.
std::set<AbelianGroup::Element> orbit_closure(const AbelianGroup& g, const std::vector<ZMatrix>& gens,
                                              AbelianGroup::Element seed) {
  std::set<AbelianGroup::Element> orbit{seed};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto x : std::vector<AbelianGroup::Element>(orbit.begin(), orbit.end())) {
      for (const auto& m : gens) grew |= orbit.insert(g.encode(z4_vec_mul(g.decode(x), m))).second;
    }
  }
  return orbit;
}

}  // namespace

TEST_CASE("line spread over GF(2^n)") {
  for (int n = 1; n <= 4; ++n) {
    const LineSpread spread = make_line_spread(n);
    CHECK(spread.slopes.size() == (1u << n) + 1);
    CHECK(std::count(spread.part.begin(), spread.part.end(), 1) == (1 << (n - 1)));
    CHECK(std::count(spread.part.begin(), spread.part.end(), 3) == 1);
    CHECK_FALSE(spread.slopes.back().has_value());
    CHECK(spread.part.back() == 3);

    // Lines are subgroups of order 2^n meeting only in 0 and covering V.
    std::set<AbelianGroup::Element> covered;
    const AbelianGroup g(2, 2 * n);
    for (const Slope& a : spread.slopes) {
      const auto pts = line_points(spread, a);
      REQUIRE(pts.size() == (1u << n));
      for (auto x : pts) {
        for (auto y : pts) CHECK(std::binary_search(pts.begin(), pts.end(), g.add(x, y)));
        if (x != 0) CHECK(covered.insert(x).second);
      }
    }
    CHECK(covered.size() == g.order() - 1);
  }
}

TEST_CASE("z2 valencies") {
  const AssociationScheme s1 = scheme_from_partition(lines_z2(1));
  CHECK(s1.valencies() == std::vector<std::int64_t>{1, 1, 1, 1});
  const AssociationScheme s2 = scheme_from_partition(lines_z2(2));
  CHECK(s2.valencies() == std::vector<std::int64_t>{1, 6, 6, 3});
  const AssociationScheme s3 = scheme_from_partition(lines_z2(3));
  CHECK(s3.valencies() == std::vector<std::int64_t>{1, 28, 28, 7});
}

TEST_CASE("any assignment of lines gives the same character table") {
  const GF2n field(3);
  const std::vector<LineAssignment> assignments = {
      {{0, 1, 2, 3}, std::nullopt},
      {{std::nullopt, 5, 6, 7}, 0},
      {{1, 3, 5, 7}, 2},
  };
  const CharacterTable base = character_table(scheme_from_partition(lines_z2(3)));
  for (const auto& a : assignments) {
    const CharacterTable t = character_table(scheme_from_partition(lines_z2(make_line_spread(field, a))));
    CHECK(t.entries == base.entries);
  }
}

TEST_CASE("bad line assignments") {
  CHECK_THROWS_AS(make_line_spread(2, {{0}, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(make_line_spread(2, {{0, 0}, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(make_line_spread(2, {{0, 1}, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_line_spread(2, {{0, 9}, std::nullopt}), std::invalid_argument);
}

TEST_CASE("index-2 subgroups of V_1") {
  for (int n = 2; n <= 4; ++n) {
    const auto specs = enumerate_W(n);
    CHECK(specs.size() == (1u << n) - 1);
    // (2,0,...,0) lies in the kernel of a iff a_0 = 0: 2^{n-1} - 1 of them.
    CHECK(std::count_if(specs.begin(), specs.end(), [](const OrbitSpec& s) { return s.symmetric; }) ==
          (1 << (n - 1)) - 1);
    std::set<std::vector<ZmVector>> distinct;
    for (const auto& s : specs) {
      CHECK(s.w_elements.size() == (1u << (n - 1)));
      distinct.insert(s.w_elements);
    }
    CHECK(distinct.size() == specs.size());
  }
  CHECK(enumerate_W(1).size() == 1);
}

TEST_CASE("W input validation") {
  CHECK_THROWS_AS(make_orbit_spec(3, {ZmVector(4, {0, 1, 0}), ZmVector(4, {0, 0, 2})}), std::invalid_argument);
  CHECK_THROWS_AS(make_orbit_spec(3, {ZmVector(4, {0, 2, 0})}), std::invalid_argument);
  CHECK_THROWS_AS(make_orbit_spec(3, {ZmVector(4, {0, 2, 0}), ZmVector(4, {0, 2, 0})}), std::invalid_argument);
  const OrbitSpec spec = make_orbit_spec(3, {ZmVector(4, {0, 2, 0}), ZmVector(4, {0, 0, 2})});
  CHECK_FALSE(spec.symmetric);
  CHECK(spec.w_elements.size() == 4);
}

TEST_CASE("orbit partition of Z_4^n") {
  for (int n = 1; n <= 3; ++n) {
    for (const OrbitSpec& spec : enumerate_W(n)) {
      const SchurPartition p = orbits_z4(spec);
      const std::size_t big = (std::size_t{1} << (n - 1)) * ((std::size_t{1} << n) - 1);
      CHECK(p.classes[1].size() == big);
      CHECK(p.classes[2].size() == big);
      CHECK(p.classes[3].size() == (std::size_t{1} << n) - 1);

      std::vector<ZMatrix> gens = {spec.lift.P};
      for (const auto& w : spec.w_generators) gens.push_back(reduce_mod(ZMatrix(z4_identity(n) + f_map(spec.lift.P, w)), 4));
      for (int i = 1; i <= 3; ++i) {
        const auto& cls = p.classes[static_cast<std::size_t>(i)];
        const auto orbit = orbit_closure(p.group, gens, cls.front());
        CHECK(std::vector<AbelianGroup::Element>(orbit.begin(), orbit.end()) == cls);
      }
    }
  }
  // n = 1: P = (1) and W = 0, so every class is a single element.
  const SchurPartition p1 = orbits_z4(enumerate_W(1).front());
  CHECK(p1.classes == std::vector<std::vector<AbelianGroup::Element>>{{0}, {1}, {3}, {2}});
}

TEST_CASE("S_3 is V_1 minus 0") {
  const SchurPartition p = orbits_z4(enumerate_W(3).front());
  CHECK(p.classes[3].size() == 7);
  for (auto e : p.classes[3]) {
    const ZmVector v = p.group.decode(e);
    for (int i = 0; i < 3; ++i) CHECK(v[i] % 2 == 0);
  }
}

TEST_CASE("HK acts regularly on the units") {
  for (int n = 1; n <= 4; ++n) {
    const LemmaCReport r = verify_lemma_c(enumerate_W(n).front());
    CAPTURE(n);
    CHECK(r.ok());
    CHECK(r.hk_order == (1ull << n) * ((1ull << n) - 1));
  }
  CHECK(verify_lemma_c(enumerate_W(2).front()).hk_order == 12);
  CHECK(verify_lemma_c(enumerate_W(3).front()).hk_order == 56);
  CHECK(verify_lemma_c(enumerate_W(1).front()).orbit_sizes == std::vector<std::size_t>{1, 1, 2});
}

TEST_CASE("polynomial choice") {
  const CompanionLift lift = lift_primitive(3, 0xd);
  CHECK(lift.order == 7);
  for (const OrbitSpec& spec : enumerate_W(3, lift)) {
    const AssociationScheme s = scheme_from_partition(orbits_z4(spec));
    const auto m = template_match(character_table(s));
    REQUIRE(m.has_value());
    CHECK(m->parameter == 7);
  }
  CHECK_THROWS_AS(lift_primitive(3, 0xf), ConfigurationError);
}
