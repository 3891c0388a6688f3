#include "schurlab/autgroup.hpp"

#include "schurlab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace schurlab {

ColoredGraph::ColoredGraph(std::uint32_t n_points, std::vector<int> colors) : n_(n_points), colors_(std::move(colors)) {
  if (colors_.size() != static_cast<std::size_t>(n_) * n_) throw std::invalid_argument("color table has wrong size");
  for (int c : colors_) {
    if (c < 0) throw std::invalid_argument("colors must be nonnegative");
    num_colors_ = std::max(num_colors_, c + 1);
  }
  // Diagonal color 0 only on the diagonal, and each color has a single
  // reversed color.
  std::vector<int> reverse(static_cast<std::size_t>(num_colors_), -1);
  for (std::uint32_t x = 0; x < n_; ++x) {
    for (std::uint32_t y = 0; y < n_; ++y) {
      const int c = color(x, y);
      if ((x == y) != (c == 0)) throw std::invalid_argument("inconsistent coloring: color 0 must be the diagonal");
      int& r = reverse[static_cast<std::size_t>(c)];
      if (r == -1) r = color(y, x);
      else if (r != color(y, x)) throw std::invalid_argument("inconsistent coloring: reversed pairs change color");
    }
  }
}

ColoredGraph colored_graph(const AssociationScheme& s) {
  const std::uint32_t n = s.num_points();
  std::vector<int> colors(static_cast<std::size_t>(n) * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) colors[static_cast<std::size_t>(x) * n + y] = s.class_of(x, y);
  }
  return {n, std::move(colors)};
}

bool is_automorphism(const ColoredGraph& g, const Permutation& p) {
  const std::uint32_t n = g.n_points();
  if (p.size() != n) return false;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (g.color(p[x], p[y]) != g.color(x, y)) return false;
    }
  }
  return true;
}

namespace {

using Cell = std::vector<std::uint32_t>;
using Partition = std::vector<Cell>;

// Splits cells by the color profile towards each splitter cell until the
// partition is equitable. Subcells are ordered by profile, so the result is
// label-invariant.
void refine(const ColoredGraph& g, Partition& cells) {
  const int colors = g.num_colors();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const Cell splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() == 1) continue;
        std::map<std::vector<int>, Cell> groups;
        for (auto v : cells[c]) {
          std::vector<int> profile(static_cast<std::size_t>(colors), 0);
          for (auto u : splitter) ++profile[static_cast<std::size_t>(g.color(v, u))];
          groups[profile].push_back(v);
        }
        if (groups.size() == 1) continue;
        Partition pieces;
        for (auto& [profile, cell] : groups) pieces.push_back(std::move(cell));
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

Partition individualize(const ColoredGraph& g, const Partition& cells, std::size_t target, std::uint32_t v) {
  Partition out = cells;
  Cell rest;
  for (auto u : cells[target]) {
    if (u != v) rest.push_back(u);
  }
  out[target] = {v};
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
  refine(g, out);
  return out;
}

// Cell sizes plus the color counts from each cell to each other cell; equal
// for partitions related by an automorphism.
std::vector<int> invariant(const ColoredGraph& g, const Partition& cells) {
  std::vector<int> inv;
  for (const Cell& c : cells) inv.push_back(static_cast<int>(c.size()));
  const int colors = g.num_colors();
  for (const Cell& a : cells) {
    for (const Cell& b : cells) {
      std::vector<int> profile(static_cast<std::size_t>(colors), 0);
      for (auto u : b) ++profile[static_cast<std::size_t>(g.color(a.front(), u))];
      inv.insert(inv.end(), profile.begin(), profile.end());
    }
  }
  return inv;
}

std::optional<std::size_t> target_cell(const Partition& cells) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() > 1 && (!best || cells[i].size() < cells[*best].size())) best = i;
  }
  return best;
}

class Search {
 public:
  explicit Search(const ColoredGraph& g) : g_(g) {
    Partition p = {Cell(g.n_points())};
    std::iota(p[0].begin(), p[0].end(), 0u);
    refine(g_, p);
    for (;;) {
      path_.push_back(p);
      invariants_.push_back(invariant(g_, p));
      const auto t = target_cell(p);
      if (!t) break;
      targets_.push_back(*t);
      base_.push_back(p[*t].front());
      p = individualize(g_, p, *t, p[*t].front());
    }
  }

  std::size_t depth() const { return targets_.size(); }
  const std::vector<std::uint32_t>& base() const { return base_; }
  const Cell& target(std::size_t level) const { return path_[level][targets_[level]]; }

  // An automorphism that fixes base[0..level) and maps base[level] to v.
  std::optional<Permutation> find(std::size_t level, std::uint32_t v) const {
    return descend(individualize(g_, path_[level], targets_[level], v), level + 1);
  }

 private:
  std::optional<Permutation> descend(const Partition& p, std::size_t level) const {
    if (invariant(g_, p) != invariants_[level]) return std::nullopt;
    if (level == depth()) {
      Permutation gamma(g_.n_points());
      const Partition& leaf = path_.back();
      for (std::size_t i = 0; i < leaf.size(); ++i) gamma[leaf[i].front()] = p[i].front();
      if (is_automorphism(g_, gamma)) return gamma;
      return std::nullopt;
    }
    for (auto u : p[targets_[level]]) {
      if (auto found = descend(individualize(g_, p, targets_[level], u), level + 1)) return found;
    }
    return std::nullopt;
  }

  const ColoredGraph& g_;
  std::vector<Partition> path_;
  std::vector<std::vector<int>> invariants_;
  std::vector<std::size_t> targets_;
  std::vector<std::uint32_t> base_;
};

std::vector<std::uint32_t> orbit_of(std::uint32_t start, const std::vector<const Permutation*>& gens, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> orbit = {start};
  seen[start] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const Permutation* p : gens) {
      const auto next = (*p)[orbit[head]];
      if (!seen[next]) {
        seen[next] = true;
        orbit.push_back(next);
      }
    }
  }
  return orbit;
}

}  // namespace

AutGroupResult automorphism_group(const ColoredGraph& g, const std::vector<Permutation>& known) {
  const Search search(g);
  const std::size_t depth = search.depth();
  const auto& base = search.base();

  // Each generator is tagged with the number of leading base points it fixes.
  std::vector<std::pair<std::size_t, Permutation>> gens;
  for (const Permutation& p : known) {
    if (!is_automorphism(g, p)) throw std::invalid_argument("seeded permutation is not an automorphism");
    std::size_t fixed = 0;
    while (fixed < depth && p[base[fixed]] == base[fixed]) ++fixed;
    if (fixed < depth) gens.emplace_back(fixed, p);
  }

  AutGroupResult result;
  result.base = base;
  result.orbit_lengths.assign(depth, 1);
  for (std::size_t level = depth; level-- > 0;) {
    auto current = [&] {
      std::vector<const Permutation*> use;
      for (const auto& [tag, p] : gens) {
        if (tag >= level) use.push_back(&p);
      }
      return orbit_of(base[level], use, g.n_points());
    };
    std::vector<std::uint32_t> orbit = current();
    for (auto v : search.target(level)) {
      if (std::find(orbit.begin(), orbit.end(), v) != orbit.end()) continue;
      if (auto gamma = search.find(level, v)) {
        gens.emplace_back(level, std::move(*gamma));
        orbit = current();
      }
    }
    result.orbit_lengths[level] = orbit.size();
  }

  result.order = 1;
  for (auto len : result.orbit_lengths) result.order *= len;
  for (auto& [tag, p] : gens) result.generators.push_back(std::move(p));
  return result;
}

BigInt aut_order(const ColoredGraph& g) { return automorphism_group(g).order; }

Permutation translation(const AssociationScheme& s, AbelianGroup::Element t) {
  Permutation p(s.num_points());
  for (std::uint32_t x = 0; x < s.num_points(); ++x) p[x] = s.group().add(x, t);
  return p;
}

Permutation linear_map_permutation(const AbelianGroup& g, const ZMatrix& m) {
  Permutation p(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    p[x] = g.encode(ZmVector(g.modulus(), ZRowVector(g.decode(x).coords() * m)));
  }
  return p;
}

AutGroupResult automorphism_group(const AssociationScheme& s, const std::vector<Permutation>& extra_known) {
  std::vector<Permutation> known;
  const AbelianGroup& g = s.group();
  for (int i = 0; i < g.rank(); ++i) known.push_back(translation(s, g.encode(ZmVector::unit(g.modulus(), g.rank(), i))));
  known.insert(known.end(), extra_known.begin(), extra_known.end());
  return automorphism_group(colored_graph(s), known);
}

std::uint64_t aut_order_bruteforce(const ColoredGraph& g) {
  if (g.n_points() > 8) throw std::invalid_argument("aut_order_bruteforce supports at most 8 points");
  Permutation p(g.n_points());
  std::iota(p.begin(), p.end(), 0u);
  std::uint64_t count = 0;
  do {
    if (is_automorphism(g, p)) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace schurlab
