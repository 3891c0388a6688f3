#include "reproduce.hpp"

#include "schurlab/autgroup.hpp"
#include "schurlab/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace schurlab::cli {

namespace {

std::string format_w(const std::vector<ZmVector>& gens) {
  std::string s;
  for (const auto& g : gens) s += (s.empty() ? "" : ";") + g.to_string();
  return s;
}

void check_common(ReproRow& row, const AssociationScheme& s) {
  row.points = s.num_points();
  row.symmetric = s.is_symmetric();
  const CharacterTable t = character_table(s);
  for (const auto& f : verify_orthogonality(t).failures) row.failures.push_back(f);
  for (const auto& f : verify_kernel_lemma(s, t).failures) row.failures.push_back(f);

  row.matched = template_match(t);
  if (row.matched != row.expected) {
    row.failures.push_back("character table is " + (row.matched ? to_string(*row.matched) : std::string("unmatched")) +
                           ", expected " + to_string(*row.expected));
  }
  row.duality = self_dual_check(t);
  if (!row.duality) {
    row.failures.push_back("scheme is not self-dual");
  } else {
    row.multiplicities_match_valencies = true;
    for (int i = 0; i < t.rank(); ++i) {
      row.multiplicities_match_valencies =
          row.multiplicities_match_valencies &&
          t.multiplicities[static_cast<std::size_t>((*row.duality)[static_cast<std::size_t>(i)])] ==
              t.valencies[static_cast<std::size_t>(i)];
    }
    if (!row.multiplicities_match_valencies) row.failures.push_back("multiplicities differ from valencies under duality");
  }
  row.pgd = pgd_suite(s);
  for (const auto& e : row.pgd) {
    if (!e.certificate) row.failures.push_back(e.label + " does not induce a partial geometric design");
  }
}

ReproRow run_z2(int n) {
  ReproRow row;
  row.construction = "z2";
  row.n = n;
  row.expected = XuTemplate{XuTemplate::Kind::T2, (std::int64_t{1} << n) - 1};
  try {
    check_common(row, scheme_from_partition(lines_z2(n)));
  } catch (const std::exception& e) {
    row.failures.push_back(e.what());
  }
  return row;
}

ReproRow run_z4(const OrbitSpec& spec) {
  ReproRow row;
  row.construction = "z4";
  row.n = spec.n;
  row.w = format_w(spec.w_generators);
  const std::int64_t theta = (std::int64_t{1} << spec.n) - 1;
  row.expected = XuTemplate{spec.symmetric ? XuTemplate::Kind::T2 : XuTemplate::Kind::T3, theta};
  try {
    const AssociationScheme s = scheme_from_partition(orbits_z4(spec));
    check_common(row, s);
    if (s.is_symmetric() != spec.symmetric) row.failures.push_back("symmetry disagrees with (2,0,...,0) in W");

    if (spec.n == 3) {
      std::vector<Permutation> known = {linear_map_permutation(s.group(), spec.lift.P)};
      for (const auto& w : spec.w_generators) {
        known.push_back(linear_map_permutation(s.group(), reduce_mod(ZMatrix(z4_identity(3) + f_map(spec.lift.P, w)), 4)));
      }
      const BigInt order = automorphism_group(s, known).order;
      row.aut_order = order.str();
      if (order % s.num_points() != 0) row.failures.push_back("|Aut| is not divisible by |X|");

      const auto span_of = [](std::vector<ZmVector> gens) { return make_orbit_spec(3, gens).w_elements; };
      if (spec.w_elements == span_of({ZmVector(4, {0, 2, 0}), ZmVector(4, {0, 0, 2})})) row.expected_aut_order = "5376";
      if (spec.w_elements == span_of({ZmVector(4, {0, 2, 0}), ZmVector(4, {2, 0, 2})})) row.expected_aut_order = "1792";
      if (row.expected_aut_order && *row.expected_aut_order != *row.aut_order) {
        row.failures.push_back("|Aut| = " + *row.aut_order + ", expected " + *row.expected_aut_order);
      }
    }
  } catch (const std::exception& e) {
    row.failures.push_back(e.what());
  }
  return row;
}

}  // namespace

std::vector<ReproRow> reproduce_all(int jobs) {
  std::vector<std::function<ReproRow()>> tasks;
  for (int n = 1; n <= 4; ++n) tasks.emplace_back([n] { return run_z2(n); });
  for (int n = 2; n <= 3; ++n) {
    for (const OrbitSpec& spec : enumerate_W(n)) tasks.emplace_back([spec] { return run_z4(spec); });
  }

  std::vector<ReproRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) rows[i] = tasks[i]();
  };
  const int threads = std::clamp(jobs, 1, static_cast<int>(tasks.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

}  // namespace schurlab::cli
