#include "schurlab/constructions.hpp"

#include "schurlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace schurlab {

namespace {

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

bool lex_less(const ZRowVector& a, const ZRowVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

AbelianGroup::Element encode_pair(const AbelianGroup& g, const GF2n& field, GF2n::Element x, GF2n::Element y) {
  const int n = field.degree();
  ZRowVector c(2 * n);
  c << field.coordinates(x), field.coordinates(y);
  return g.encode(ZmVector(2, c));
}

bool in_v1(const ZmVector& v) {
  return v.modulus() == 4 && v.coords().unaryExpr([](int x) { return x % 2; }).isZero();
}

std::vector<ZmVector> span_v1(int n, const std::vector<ZmVector>& gens) {
  std::set<ZmVector> span = {ZmVector::zero(4, n)};
  for (const ZmVector& g : gens) {
    std::vector<ZmVector> added;
    for (const ZmVector& s : span) added.push_back(s + g);
    span.insert(added.begin(), added.end());
  }
  return {span.begin(), span.end()};
}

// Image table of v -> v * m over the whole group.
std::vector<AbelianGroup::Element> action_table(const AbelianGroup& g, const ZMatrix& m) {
  std::vector<AbelianGroup::Element> img(g.order());
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    const ZmVector x = g.decode(v);
    img[v] = g.encode(ZmVector(g.modulus(), ZRowVector(x.coords() * m)));
  }
  return img;
}

}  // namespace

std::string slope_to_string(const Slope& a) { return a ? std::to_string(*a) : "inf"; }

// ---------------------------------------------------------------------------
// Lines over Z_2^{2n}

LineSpread make_line_spread(int n) { return make_line_spread(GF2n(n)); }

LineSpread make_line_spread(int n, const LineAssignment& assignment) {
  return make_line_spread(GF2n(n), assignment);
}

LineSpread make_line_spread(const GF2n& field) {
  const int n = field.degree();
  std::vector<GF2n::Element> finite(field.size());
  for (std::uint32_t a = 0; a < field.size(); ++a) finite[a] = a;
  std::sort(finite.begin(), finite.end(),
            [&](auto a, auto b) { return lex_less(field.coordinates(a), field.coordinates(b)); });
  LineAssignment assignment;
  assignment.p1.assign(finite.begin(), finite.begin() + static_cast<std::ptrdiff_t>(pow2(n - 1)));
  assignment.p3 = std::nullopt;
  return make_line_spread(field, assignment);
}

LineSpread make_line_spread(const GF2n& base, const LineAssignment& assignment) {
  LineSpread spread{base, {}, {}};
  const GF2n& field = spread.field;
  const int n = field.degree();
  std::vector<GF2n::Element> finite(field.size());
  for (std::uint32_t a = 0; a < field.size(); ++a) finite[a] = a;
  std::sort(finite.begin(), finite.end(),
            [&](auto a, auto b) { return lex_less(field.coordinates(a), field.coordinates(b)); });
  spread.slopes.assign(finite.begin(), finite.end());
  spread.slopes.emplace_back(std::nullopt);

  auto valid = [&](const Slope& a) { return !a || *a < field.size(); };
  if (assignment.p1.size() != pow2(n - 1)) {
    throw std::invalid_argument("P1 must contain exactly " + std::to_string(pow2(n - 1)) + " lines");
  }
  std::set<Slope> p1(assignment.p1.begin(), assignment.p1.end());
  if (p1.size() != assignment.p1.size()) throw std::invalid_argument("P1 lists a line twice");
  if (!std::all_of(p1.begin(), p1.end(), valid) || !valid(assignment.p3)) {
    throw std::invalid_argument("slope is not an element of GF(2^" + std::to_string(n) + ")");
  }
  if (p1.count(assignment.p3) != 0) throw std::invalid_argument("P1 and P3 share a line");

  for (const Slope& a : spread.slopes) {
    spread.part.push_back(a == assignment.p3 ? 3 : (p1.count(a) != 0 ? 1 : 2));
  }
  return spread;
}

std::vector<AbelianGroup::Element> line_points(const LineSpread& spread, const Slope& a) {
  const GF2n& field = spread.field;
  const AbelianGroup g(2, 2 * field.degree());
  std::vector<AbelianGroup::Element> pts;
  for (std::uint32_t x = 0; x < field.size(); ++x) {
    pts.push_back(a ? encode_pair(g, field, x, field.mul(*a, x)) : encode_pair(g, field, 0, x));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

SchurPartition lines_z2(const LineSpread& spread) {
  SchurPartition p{AbelianGroup(2, 2 * spread.n()), std::vector<std::vector<AbelianGroup::Element>>(4)};
  p.classes[0] = {0};
  for (std::size_t i = 0; i < spread.slopes.size(); ++i) {
    auto& cls = p.classes[static_cast<std::size_t>(spread.part[i])];
    for (auto e : line_points(spread, spread.slopes[i])) {
      if (e != 0) cls.push_back(e);
    }
  }
  for (auto& cls : p.classes) std::sort(cls.begin(), cls.end());
  return p;
}

SchurPartition lines_z2(int n) { return lines_z2(make_line_spread(n)); }

// ---------------------------------------------------------------------------
// Orbits over Z_4^n

OrbitSpec make_orbit_spec(int n, const std::vector<ZmVector>& w_generators) {
  return make_orbit_spec(n, w_generators, lift_primitive(n));
}

OrbitSpec make_orbit_spec(int n, const std::vector<ZmVector>& w_generators, const CompanionLift& lift) {
  if (lift.P.rows() != n) throw std::invalid_argument("companion lift has the wrong dimension");
  for (const ZmVector& w : w_generators) {
    if (w.size() != n || !in_v1(w)) {
      throw std::invalid_argument("W generator " + w.to_string() + " is not in V_1 (entries in {0,2}, length " +
                                  std::to_string(n) + ")");
    }
  }
  OrbitSpec spec;
  spec.n = n;
  spec.lift = lift;
  spec.w_generators = w_generators;
  spec.w_elements = span_v1(n, w_generators);
  if (spec.w_elements.size() != pow2(n - 1)) {
    throw std::invalid_argument("W has order " + std::to_string(spec.w_elements.size()) + ", expected " +
                                std::to_string(pow2(n - 1)));
  }
  const ZmVector two_e = ZmVector(4, ZRowVector(2 * ZRowVector::Unit(n, 0)));
  spec.symmetric = std::find(spec.w_elements.begin(), spec.w_elements.end(), two_e) != spec.w_elements.end();
  return spec;
}

std::vector<OrbitSpec> enumerate_W(int n) { return enumerate_W(n, lift_primitive(n)); }

std::vector<OrbitSpec> enumerate_W(int n, const CompanionLift& lift) {
  if (n < 1) throw std::invalid_argument("enumerate_W: n must be positive");
  // Bits of an index, most significant first, as a 0/1 vector of length n.
  auto bits = [n](std::uint32_t x) {
    ZRowVector v(n);
    for (int i = 0; i < n; ++i) v(i) = static_cast<int>((x >> (n - 1 - i)) & 1u);
    return v;
  };
  std::vector<OrbitSpec> out;
  for (std::uint32_t a = 1; a < pow2(n); ++a) {
    const ZRowVector functional = bits(a);
    std::vector<ZmVector> gens;
    std::vector<ZmVector> span = {ZmVector::zero(4, n)};
    for (std::uint32_t x = 1; x < pow2(n); ++x) {
      const ZRowVector w = bits(x);
      if (functional.dot(w) % 2 != 0) continue;
      const ZmVector candidate(4, ZRowVector(2 * w));
      if (std::find(span.begin(), span.end(), candidate) != span.end()) continue;
      gens.push_back(candidate);
      span = span_v1(n, gens);
    }
    out.push_back(make_orbit_spec(n, gens, lift));
  }
  return out;
}

std::vector<std::vector<AbelianGroup::Element>> matrix_group_orbits(const AbelianGroup& g,
                                                                     const std::vector<ZMatrix>& gens) {
  std::vector<std::vector<AbelianGroup::Element>> tables;
  tables.reserve(gens.size());
  for (const ZMatrix& m : gens) tables.push_back(action_table(g, m));

  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<AbelianGroup::Element>> orbits;
  for (std::uint32_t start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    std::vector<AbelianGroup::Element> orbit = {start};
    seen[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& t : tables) {
        const auto next = t[orbit[head]];
        if (!seen[next]) {
          seen[next] = true;
          orbit.push_back(next);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

SchurPartition orbits_z4(const OrbitSpec& spec) {
  const int n = spec.n;
  const AbelianGroup g(4, n);
  std::vector<ZMatrix> gens = {spec.lift.P};
  for (const ZmVector& w : spec.w_generators) gens.push_back(reduce_mod(ZMatrix(z4_identity(n) + f_map(spec.lift.P, w)), 4));

  auto orbits = matrix_group_orbits(g, gens);
  const std::uint64_t big = pow2(n - 1) * (pow2(n) - 1);
  const AbelianGroup::Element two_e = g.encode(ZmVector(4, ZRowVector(2 * ZRowVector::Unit(n, 0))));

  SchurPartition p{g, std::vector<std::vector<AbelianGroup::Element>>(4)};
  std::vector<std::vector<AbelianGroup::Element>> large;
  for (auto& orbit : orbits) {
    if (orbit.front() == 0) {
      p.classes[0] = orbit;
    } else if (std::binary_search(orbit.begin(), orbit.end(), two_e)) {
      p.classes[3] = orbit;
    } else {
      large.push_back(orbit);
    }
  }
  if (orbits.size() != 4 || large.size() != 2 || p.classes[0].size() != 1 || p.classes[3].size() != pow2(n) - 1 ||
      large[0].size() != big || large[1].size() != big) {
    throw ConstructionError("orbits_z4: G-orbits on Z_4^" + std::to_string(n) + " do not have lengths (1, " +
                            std::to_string(big) + ", " + std::to_string(big) + ", " + std::to_string(pow2(n) - 1) + ")");
  }
  for (auto e : p.classes[3]) {
    if (!in_v1(g.decode(e))) throw ConstructionError("orbits_z4: short orbit is not V_1 minus 0");
  }
  p.classes[1] = large[0];
  p.classes[2] = large[1];
  return p;
}

LemmaCReport verify_lemma_c(const OrbitSpec& spec) {
  LemmaCReport report;
  const int n = spec.n;
  const ZMatrix& P = spec.lift.P;
  const ZMatrix E = z4_identity(n);
  const std::uint64_t h_order = pow2(n) - 1;

  std::vector<ZMatrix> H;
  for (std::uint64_t i = 0; i < h_order; ++i) H.push_back(z4_pow(P, i));
  std::vector<ZMatrix> K;
  for (const ZmVector& v : span_v1(n, [&] {
         std::vector<ZmVector> basis;
         for (int i = 0; i < n; ++i) basis.emplace_back(4, ZRowVector(2 * ZRowVector::Unit(n, i)));
         return basis;
       }())) {
    K.push_back(reduce_mod(ZMatrix(E + f_map(P, v)), 4));
  }

  for (const ZMatrix& k : K) {
    if (z4_mat_mul(P, k) != z4_mat_mul(k, P)) {
      report.failures.push_back("P does not commute with an element of K");
      break;
    }
  }

  std::set<std::vector<int>> hk;
  const ZRowVector e = ZRowVector::Unit(n, 0);
  std::size_t stabilizer = 0;
  for (const ZMatrix& h : H) {
    for (const ZMatrix& k : K) {
      const ZMatrix m = z4_mat_mul(h, k);
      hk.insert(std::vector<int>(m.data(), m.data() + m.size()));
      if (reduce_mod(ZRowVector(e * m), 4) == e) ++stabilizer;
    }
  }
  report.hk_order = hk.size();
  if (report.hk_order != pow2(n) * h_order) {
    report.failures.push_back("|HK| = " + std::to_string(report.hk_order) + ", expected " +
                              std::to_string(pow2(n) * h_order));
  }
  if (stabilizer != 1) report.failures.push_back("stabilizer of (1,0,...,0) in HK is not trivial");

  const AbelianGroup g(4, n);
  std::vector<ZMatrix> gens = {P};
  for (int i = 0; i < n; ++i) gens.push_back(reduce_mod(ZMatrix(E + f_map(P, ZmVector(4, ZRowVector(2 * ZRowVector::Unit(n, i))))), 4));
  const auto orbits = matrix_group_orbits(g, gens);
  for (const auto& o : orbits) report.orbit_sizes.push_back(o.size());
  std::sort(report.orbit_sizes.begin(), report.orbit_sizes.end());

  bool shape = orbits.size() == 3;
  if (shape) {
    for (const auto& o : orbits) {
      const bool has_zero = o.front() == 0;
      const bool all_v1 = std::all_of(o.begin(), o.end(), [&](auto x) { return in_v1(g.decode(x)); });
      const bool none_v1 = std::none_of(o.begin(), o.end(), [&](auto x) { return in_v1(g.decode(x)); });
      if (has_zero) shape = shape && o.size() == 1;
      else if (all_v1) shape = shape && o.size() == h_order;
      else shape = shape && none_v1 && o.size() == pow2(n) * h_order;
    }
  }
  if (!shape) report.failures.push_back("HK-orbits are not V_0, V_1 minus 0, V_2 minus V_1");
  return report;
}

}  // namespace schurlab
