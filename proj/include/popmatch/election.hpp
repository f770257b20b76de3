#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "popmatch/instance.hpp"
#include "popmatch/matching.hpp"

namespace popmatch {

enum class Vote { plus, minus };

// Labels of all non-matching edges with respect to a matching. For the
// canonical edge (u, v) with u < v the stored pair is
// (vote_u(v, M), vote_v(u, M)).
class EdgeLabelMap {
public:
    using Key = std::pair<Vertex, Vertex>;

    void set(Vertex u, Vertex v, Vote at_u, Vote at_v);
    // Votes oriented as asked: returns (vote_u, vote_v) for any adjacent
    // non-matching (u, v), in either endpoint order.
    std::pair<Vote, Vote> at(Vertex u, Vertex v) const;
    bool contains(Vertex u, Vertex v) const;
    std::size_t size() const { return labels_.size(); }
    const std::map<Key, std::pair<Vote, Vote>>& entries() const { return labels_; }

private:
    std::map<Key, std::pair<Vote, Vote>> labels_;
};

// vote_u(v, M): plus iff u prefers v to its M-partner (an unmatched u always
// votes plus). (u,v) must be a non-matching edge.
Vote vote(const Instance& inst, const Matching& m, Vertex u, Vertex v);

// Labels every edge of E \ M. An edge is (plus,plus) iff it blocks M.
EdgeLabelMap label_edges(const Instance& inst, const Matching& m);

// The (plus,plus) edges, canonical order.
std::vector<std::pair<Vertex, Vertex>> blocking_edges(const Instance& inst,
                                                      const Matching& m);

// Head-to-head election margin: (#vertices preferring n) - (#vertices
// preferring m). A vertex with the same partner (or unmatched) in both
// contributes 0. Antisymmetric.
int delta(const Instance& inst, const Matching& m, const Matching& n);

inline constexpr int kDefaultEnumerationEdgeBound = 24;

// Visits every matching of `inst` exactly once, in a fixed order: the empty
// extension first, then partners of the lowest uncovered vertex in its
// preference order. Returning false from the visitor stops early.
void for_each_matching(const Instance& inst,
                       const std::function<bool(const Matching&)>& visit);

// Materialized variant guarded by the edge bound (BoundError beyond it).
std::vector<Matching> enumerate_matchings(const Instance& inst,
                                          int max_edges = kDefaultEnumerationEdgeBound);

// Exponential ground-truth popularity test: no matching wins the election
// against m. Guarded by the edge bound.
bool oracle_is_popular(const Instance& inst, const Matching& m,
                       int max_edges = kDefaultEnumerationEdgeBound);

// All popular matchings, in enumeration order. Guarded by the edge bound.
std::vector<Matching> oracle_popular_matchings(const Instance& inst,
                                               int max_edges = kDefaultEnumerationEdgeBound);

}  // namespace popmatch
