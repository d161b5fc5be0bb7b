#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmat/ground_set.hpp"
#include "qmat/submonomial.hpp"

namespace qmat {

// A quiver: ordered vertices, named arrows; loops and multi-arrows allowed.
class Quiver {
 public:
  struct Arrow {
    std::string name;
    int from;
    int to;
    bool operator==(const Arrow& o) const {
      return name == o.name && from == o.from && to == o.to;
    }
  };

  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex(int i) const { return vertices_.at(i); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const Arrow& arrow(int i) const { return arrows_.at(i); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;

  Quiver opposite() const;

  bool operator==(const Quiver& o) const {
    return vertices_ == o.vertices_ && arrows_ == o.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// An F1-representation: a pointed set per vertex (we store the nonzero part
// as a GroundSet) and an F1-linear map per arrow.
struct F1Rep {
  Quiver quiver;
  std::vector<GroundSet> sets;     // per vertex
  std::vector<F1LinearMap> maps;   // per arrow

  void validate() const;
  int dim(int v) const { return sets.at(v).size(); }
  std::vector<int> dimension_vector() const;
  // Whether element labels are unique across all vertices.
  bool labels_globally_unique() const;
  // "label" when globally unique, else "vertex:label".
  std::string element_name(int v, int e) const;
  F1Rep dual() const;  // over the opposite quiver, with adjoint maps
};

using DimVector = std::vector<int>;
using RankVector = std::vector<int>;

// Complementary dimension vector r*_v = #E_v - r_v.
DimVector complement_dim(const F1Rep& rep, const RankVector& r);

// The coefficient quiver: one vertex per nonzero element, one arrow per
// nonzero value of an arrow map.
Quiver coefficient_quiver(const F1Rep& rep);

// Every connected component of the underlying undirected multigraph is a
// tree (i.e. the graph is acyclic).
bool is_tree(const Quiver& gamma);

// The underlying graph is a single cycle and every pointed set of the
// representation has at most one nonzero element.
bool is_primitive_cycle(const Quiver& gamma, const F1Rep& rep);

// All subrepresentations with the given dimension vector, as per-vertex
// sorted index subsets of the nonzero parts, in lexicographic order.
std::vector<std::vector<Subset>> subrepresentations(const F1Rep& rep, const DimVector& d);

// All subrepresentations of every dimension (enumerated by closure directly).
std::vector<std::vector<Subset>> all_subrepresentations(const F1Rep& rep);

// An integer grading of the disjoint union of the nonzero parts.
struct Grading {
  std::vector<std::vector<long long>> values;  // per vertex, per element

  long long at(int v, int e) const { return values.at(v).at(e); }
  static Grading constant(const F1Rep& rep, long long c);
  // Injective grading by global element index.
  static Grading by_index(const F1Rep& rep);
};

bool is_nice_grading(const Grading& d, const F1Rep& rep);
bool is_nice_relative(const Grading& d, const std::vector<Grading>& priors, const F1Rep& rep);
// The whole chain: first grading nice, each later one nice relative to the
// previous ones.
bool is_nice_sequence(const std::vector<Grading>& seq, const F1Rep& rep);
bool distinguishes(const std::vector<Grading>& seq, const F1Rep& rep);

// Searches for a nice sequence of gradings that distinguishes elements.
// Succeeds constructively on forests and on representations without any
// coupled arrow fibers (e.g. primitive cycles); falls back to a bounded
// search elsewhere. Throws NotFound when the search is exhausted.
std::vector<Grading> find_nice_sequence(const F1Rep& rep, int search_bound = 64);

}  // namespace qmat
