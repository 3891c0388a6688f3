#pragma once

#include "schurlab/scheme.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace schurlab {

using Permutation = std::vector<std::uint32_t>;  // image of each point
using BigInt = boost::multiprecision::cpp_int;

/// Complete directed graph on n points with every ordered pair colored.
class ColoredGraph {
 public:
  ColoredGraph(std::uint32_t n_points, std::vector<int> colors);

  std::uint32_t n_points() const { return n_; }
  int num_colors() const { return num_colors_; }
  int color(std::uint32_t x, std::uint32_t y) const { return colors_[static_cast<std::size_t>(x) * n_ + y]; }

 private:
  std::uint32_t n_;
  int num_colors_ = 0;
  std::vector<int> colors_;
};

/// Colors each pair (x, y) by the class of x - y.
ColoredGraph colored_graph(const AssociationScheme& s);

bool is_automorphism(const ColoredGraph& g, const Permutation& p);

struct AutGroupResult {
  BigInt order;
  std::vector<std::uint32_t> base;
  std::vector<std::size_t> orbit_lengths;  // basic orbit length per base point
  std::vector<Permutation> generators;     // strong generating set relative to base
};

/// Individualization/refinement search with orbit-stabilizer counting.
/// `known` automorphisms are verified and used to prune the search.
AutGroupResult automorphism_group(const ColoredGraph& g, const std::vector<Permutation>& known = {});

BigInt aut_order(const ColoredGraph& g);
/// Seeds the search with the translations of the underlying group.
AutGroupResult automorphism_group(const AssociationScheme& s, const std::vector<Permutation>& extra_known = {});

/// Literal filter over all n! permutations; n <= 8.
std::uint64_t aut_order_bruteforce(const ColoredGraph& g);

/// Translation x -> x + t of the scheme's group, as a permutation.
Permutation translation(const AssociationScheme& s, AbelianGroup::Element t);

/// Right action v -> v * m of a matrix on the group elements.
Permutation linear_map_permutation(const AbelianGroup& g, const ZMatrix& m);

}  // namespace schurlab
