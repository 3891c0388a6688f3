#include <doctest.h>

#include "support.hpp"

using namespace schurlab;

namespace {

SchurPartition rank_two(int m, int n) {
  const AbelianGroup g(m, n);
  SchurPartition p{g, {{0}, {}}};
  for (std::uint32_t e = 1; e < g.order(); ++e) p.classes[1].push_back(e);
  return p;
}

// {0}, V_1 \ 0 and the complement of V_1 in Z_4^n.
SchurPartition v1_split(int n) {
  const AbelianGroup g(4, n);
  SchurPartition p{g, {{0}, {}, {}}};
  for (std::uint32_t e = 1; e < g.order(); ++e) {
    const ZmVector v = g.decode(e);
    bool in_v1 = true;
    for (int i = 0; i < n; ++i) in_v1 = in_v1 && v[i] % 2 == 0;
    p.classes[in_v1 ? 1 : 2].push_back(e);
  }
  return p;
}

SchurPartition thin(int m, int n) {
  const AbelianGroup g(m, n);
  SchurPartition p{g, {}};
  for (std::uint32_t e = 0; e < g.order(); ++e) p.classes.push_back({e});
  return p;
}

}  // namespace

TEST_CASE("rank-2 scheme of a group") {
  for (int m : {2, 4}) {
    const AssociationScheme s = scheme_from_partition(rank_two(m, 2));
    const auto N = static_cast<std::int64_t>(s.num_points());
    CHECK(s.valencies() == std::vector<std::int64_t>{1, N - 1});
    CHECK(s.is_symmetric());
    CHECK(s.p()(1, 1, 0) == N - 1);
    CHECK(s.p()(1, 1, 1) == N - 2);
    CHECK(closed_subsets(s).size() == 2);
  }
}

TEST_CASE("V_1 splits Z_4^n into a Schur partition") {
  const AssociationScheme s = scheme_from_partition(v1_split(3));
  CHECK(s.valencies() == std::vector<std::int64_t>{1, 7, 56});
  const auto closed = closed_subsets(s);
  REQUIRE(closed.size() == 3);
  CHECK(closed[1].class_indices == std::vector<int>{0, 1});
}

TEST_CASE("thin schemes are non-symmetric exactly when some element has order 4") {
  CHECK(scheme_from_partition(thin(2, 3)).is_symmetric());
  const AssociationScheme s = scheme_from_partition(thin(4, 2));
  CHECK_FALSE(s.is_symmetric());
  CHECK(s.is_commutative());
  CHECK(s.pairing()[s.class_of_element(s.group().encode(ZmVector(4, {1, 0})))] ==
        s.class_of_element(s.group().encode(ZmVector(4, {3, 0}))));
}

TEST_CASE("validation witnesses") {
  SUBCASE("overlap") {
    SchurPartition p = rank_two(2, 2);
    p.classes.push_back({1});
    const auto v = validate_schur(p);
    REQUIRE_FALSE(v.ok());
    CHECK(v.failure->kind == SchurFailure::Kind::NotAPartition);
  }
  SUBCASE("identity class") {
    SchurPartition p = rank_two(2, 2);
    p.classes[0].push_back(p.classes[1].back());
    p.classes[1].pop_back();
    CHECK(validate_schur(p).failure->kind == SchurFailure::Kind::IdentityClass);
  }
  SUBCASE("inverse") {
    // {0}, {(1,0)}, rest: -(1,0) = (3,0) is not in a singleton class.
    const AbelianGroup g(4, 2);
    SchurPartition p{g, {{0}, {g.encode(ZmVector(4, {1, 0}))}, {}}};
    for (std::uint32_t e = 1; e < g.order(); ++e) {
      if (e != p.classes[1][0]) p.classes[2].push_back(e);
    }
    const auto v = validate_schur(p);
    CHECK(v.failure->kind == SchurFailure::Kind::MissingInverse);
    CHECK(v.failure->i == 1);
  }
  SUBCASE("closure") {
    // (0,0,1) + (0,1,0) = (0,1,1) is hit twice, the other members of S_2 are not.
    const AbelianGroup g(2, 3);
    SchurPartition p{g, {{0}, {1, 2}, {3, 4, 5, 6, 7}}};
    const auto v = validate_schur(p);
    REQUIRE_FALSE(v.ok());
    const SchurFailure& f = *v.failure;
    CHECK(f.kind == SchurFailure::Kind::Closure);
    REQUIRE(f.element.has_value());
    REQUIRE(f.other.has_value());
    CHECK(f.count != f.other_count);
    // Re-derive the two coefficients by brute force.
    const auto& a = p.classes[static_cast<std::size_t>(f.i)];
    const auto& b = p.classes[static_cast<std::size_t>(f.j)];
    auto coefficient = [&](std::uint32_t target) {
      std::int64_t c = 0;
      for (auto x : a) {
        for (auto y : b) c += g.add(x, y) == target;
      }
      return c;
    };
    CHECK(coefficient(*f.element) == f.count);
    CHECK(coefficient(*f.other) == f.other_count);
  }
  CHECK_THROWS_AS(scheme_from_partition(SchurPartition{AbelianGroup(2, 3), {{0}, {1, 2}, {3, 4, 5, 6, 7}}}), SchemeError);
}

TEST_CASE("intersection numbers equal the triple-loop count") {
  std::vector<SchurPartition> cases = {rank_two(2, 3), v1_split(2), v1_split(3), thin(4, 2), thin(2, 4)};
  for (const auto& named : testing::generated_partitions()) {
    if (named.partition.group.order() <= 64) cases.push_back(named.partition);
  }
  for (const auto& p : cases) {
    const AssociationScheme s = scheme_from_partition(p);
    const auto oracle = testing::intersection_oracle(p);
    REQUIRE(oracle.has_value());
    CHECK(s.p() == *oracle);
    CHECK(intersection_numbers(s) == *oracle);
    CHECK_NOTHROW(verify_representatives(s, 32, 5));
  }
}

TEST_CASE("scheme identities on generated schemes") {
  for (const auto& named : testing::generated_partitions()) {
    CAPTURE(named.label);
    const AssociationScheme s = scheme_from_partition(named.partition);
    const int r = s.rank();
    const auto& n = s.valencies();
    CHECK(s.is_commutative());
    CHECK(s.is_symmetric() == named.symmetric_expected);
    for (int i = 0; i < r; ++i) {
      const int i_star = s.pairing()[static_cast<std::size_t>(i)];
      CHECK(s.p()(i, i_star, 0) == n[static_cast<std::size_t>(i)]);
      std::int64_t row = 0;
      for (int j = 0; j < r; ++j) {
        for (int k = 0; k < r; ++k) {
          // n_k p_ij^k = n_i p_{k j*}^i
          const int j_star = s.pairing()[static_cast<std::size_t>(j)];
          REQUIRE(n[static_cast<std::size_t>(k)] * s.p()(i, j, k) == n[static_cast<std::size_t>(i)] * s.p()(k, j_star, i));
        }
        row += s.p()(i, j, 1);
      }
      CHECK(row == n[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("validate_schur accepts constructions and rejects their perturbations") {
  std::mt19937_64 rng(2024);
  std::vector<SchurPartition> bases;
  for (const auto& named : testing::generated_partitions()) {
    REQUIRE(validate_schur(named.partition).ok());
    if (named.partition.group.order() > 4) bases.push_back(named.partition);  // 4-point ones are thin
  }
  for (int t = 0; t < 100; ++t) {
    const SchurPartition q = testing::perturb(bases[static_cast<std::size_t>(t) % bases.size()], rng);
    const auto v = validate_schur(q);
    REQUIRE_FALSE(v.ok());
    // A closure failure must be a genuine failure of regularity.
    if (v.failure->kind == SchurFailure::Kind::Closure) CHECK_FALSE(testing::intersection_oracle(q).has_value());
  }
}

TEST_CASE("closed subsets of the constructions") {
  for (const auto& named : testing::generated_partitions()) {
    CAPTURE(named.label);
    const AssociationScheme s = scheme_from_partition(named.partition);
    const auto closed = closed_subsets(s);
    // {0}, {0,3} and everything, for every n >= 2 instance.
    if (s.num_points() > 4) {
      REQUIRE(closed.size() == 3);
      CHECK(closed[0].class_indices == std::vector<int>{0});
      CHECK(closed[1].class_indices == std::vector<int>{0, 3});
      CHECK(closed[2].class_indices == std::vector<int>{0, 1, 2, 3});
    }
  }
}
