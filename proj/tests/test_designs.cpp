#include <doctest.h>

#include "support.hpp"

#include <set>

using namespace schurlab;

namespace {

IncidenceMatrix square(Eigen::Index n, std::int64_t fill) { return IncidenceMatrix::Constant(n, n, fill); }

}  // namespace

TEST_CASE("identity and all-ones incidence") {
  const IncidenceMatrix e = IncidenceMatrix::Identity(5, 5);
  CHECK(t_design_check(e, 1) == 1);
  const auto c = pgd_check(e);
  REQUIRE(c.has_value());
  CHECK(c->alpha == 0);
  CHECK(c->beta == 1);

  const IncidenceMatrix j = square(4, 1);
  CHECK(t_design_check(j, 2) == 4);
  const auto cj = pgd_check(j);
  REQUIRE(cj.has_value());
  CHECK_FALSE(cj->alpha.has_value());
  CHECK(cj->beta == 16);
  CHECK(cj->replication == 4);
}

TEST_CASE("non-designs") {
  IncidenceMatrix n = IncidenceMatrix::Zero(3, 3);
  n(0, 0) = n(0, 1) = n(1, 2) = n(2, 2) = 1;
  CHECK_FALSE(t_design_check(n, 1).has_value());
  CHECK_FALSE(pgd_check(n).has_value());
}

TEST_CASE("t-design check agrees with brute-force pair counts") {
  const AssociationScheme s = scheme_from_partition(lines_z2(2));
  for (const std::vector<int>& set : {std::vector<int>{1}, {2}, {3}, {0, 3}, {1, 2}}) {
    const IncidenceMatrix n = relation_incidence(s, set);
    CHECK(t_design_check(n, 1) == n.col(0).sum());
    std::set<std::int64_t> pair_counts;
    for (Eigen::Index x = 0; x < n.rows(); ++x) {
      for (Eigen::Index y = x + 1; y < n.rows(); ++y) pair_counts.insert(n.row(x).dot(n.row(y)));
    }
    const auto lambda = t_design_check(n, 2);
    CHECK(lambda.has_value() == (pair_counts.size() == 1));
    if (lambda) CHECK(*lambda == *pair_counts.begin());
  }
  // R_1 is a symmetric 2-(16,6,2) design; R_0 u R_3 (cosets of a subgroup) is not.
  CHECK(t_design_check(relation_incidence(s, {1}), 2) == 2);
  CHECK_FALSE(t_design_check(relation_incidence(s, {0, 3}), 2).has_value());
}

TEST_CASE("PGD certificates agree with the flag-count oracle") {
  for (const auto& named : testing::generated_partitions()) {
    CAPTURE(named.label);
    const AssociationScheme s = scheme_from_partition(named.partition);
    for (const auto& e : pgd_suite(s)) {
      CAPTURE(e.label);
      REQUIRE(e.certificate.has_value());
      if (s.num_points() > 16) continue;
      const auto oracle = testing::pgd_oracle(relation_incidence(s, e.class_set));
      REQUIRE(oracle.has_value());
      CHECK(oracle->alpha == e.certificate->alpha);
      CHECK(oracle->beta == e.certificate->beta);
    }
  }
}

TEST_CASE("PGD on other class sets") {
  const AssociationScheme s = scheme_from_partition(lines_z2(2));
  for (const std::vector<int>& set : {std::vector<int>{3}, {0, 1}, {1, 3}, {0, 1, 2, 3}}) {
    CAPTURE(set.size());
    const IncidenceMatrix n = relation_incidence(s, set);
    const auto oracle = testing::pgd_oracle(n);
    const auto c = pgd_check(n);
    REQUIRE(c.has_value() == oracle.has_value());
    if (c) {
      CHECK(c->alpha == oracle->alpha);
      CHECK(c->beta == oracle->beta);
    }
  }
  // Full support: alpha has nothing to count.
  const auto all = pgd_check(relation_incidence(s, {0, 1, 2, 3}));
  REQUIRE(all.has_value());
  CHECK_FALSE(all->alpha.has_value());
}

TEST_CASE("relation incidence input checks") {
  const AssociationScheme s = scheme_from_partition(lines_z2(1));
  CHECK_THROWS_AS(relation_incidence(s, {}), std::invalid_argument);
  CHECK_THROWS_AS(relation_incidence(s, {4}), std::out_of_range);
  CHECK_THROWS_AS(pgd_suite(scheme_from_partition(SchurPartition{AbelianGroup(2, 1), {{0}, {1}}})), SchemeError);
}

TEST_CASE("suite labels and class sets") {
  const auto suite = pgd_suite(scheme_from_partition(lines_z2(3)));
  REQUIRE(suite.size() == 3);
  CHECK(suite[0].label == "R1");
  CHECK(suite[1].label == "R2");
  CHECK(suite[2].label == "R0uR3");
  CHECK(suite[2].class_set == std::vector<int>{0, 3});
  CHECK(suite[0].certificate->replication == 28);
  CHECK(suite[2].certificate->replication == 8);
}
