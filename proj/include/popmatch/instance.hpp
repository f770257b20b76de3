#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "popmatch/error.hpp"

namespace popmatch {

// Vertices are dense 0-based indices in file declaration order; the
// declaration order is the iteration order everywhere (traces depend on it).
using Vertex = int;

// Distinguished "stays unmatched" value for preference comparisons and
// matching partners.
inline constexpr Vertex kUnmatched = -1;

// A roommates instance: an undirected graph plus, per vertex, a strict
// preference order over its neighbors (most preferred first). Lists may be
// incomplete and vertices may be isolated. Immutable after construction, so
// instances can be shared across threads freely.
class Instance {
public:
    // Builds and validates an instance from tokens and per-vertex neighbor
    // token lists. Throws ParseError on duplicate names/entries, self-entries,
    // unknown neighbors, or asymmetric lists.
    static Instance from_lists(std::vector<std::string> names,
                               const std::vector<std::vector<std::string>>& pref_tokens);

    // Instance file format:
    //   - '#' lines and blank lines are ignored
    //   - an optional first effective line holding a single integer: the
    //     vertex count (checked against the declarations)
    //   - one line per vertex: "<token>: <token> <token> ...", neighbors in
    //     strictly decreasing preference
    static Instance parse(std::istream& in);
    static Instance parse_string(std::string_view text);
    static Instance load(const std::string& path);

    // Inverse of parse: one line per vertex in declaration order. No count
    // line, no comments.
    std::string serialize() const;

    int vertex_count() const { return static_cast<int>(prefs_.size()); }
    int edge_count() const { return edge_count_; }

    const std::string& name(Vertex u) const { return names_[u]; }
    std::optional<Vertex> find(std::string_view token) const;
    // Like find, but throws Error for unknown tokens.
    Vertex vertex(std::string_view token) const;

    // Neighbors of u in preference order (most preferred first).
    const std::vector<Vertex>& neighbors(Vertex u) const { return prefs_[u]; }
    int degree(Vertex u) const { return static_cast<int>(prefs_[u].size()); }

    bool adjacent(Vertex u, Vertex v) const { return rank_or_neg(u, v) >= 0; }

    // Position of v in u's list, 0 = most preferred; -1 if not adjacent.
    int rank_or_neg(Vertex u, Vertex v) const { return rank_[static_cast<std::size_t>(u) * prefs_.size() + v]; }

    // True iff v >_u w. Either of v, w may be kUnmatched: any neighbor beats
    // kUnmatched, and kUnmatched never beats anything. Throws Error when a
    // vertex argument is neither a neighbor of u nor kUnmatched.
    bool prefers(Vertex u, Vertex v, Vertex w) const;

    // All edges as (u, v) pairs with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    // N(U): vertices adjacent to at least one member of `keep` (sorted; may
    // intersect U). Throws Error on out-of-range vertices.
    std::vector<Vertex> neighborhood(std::span<const Vertex> U) const;

    // G[keep]: the subgraph spanned by `keep`, original tokens and relative
    // preference order preserved. Vertex order follows this instance's
    // declaration order.
    Instance induced(std::span<const Vertex> keep) const;

    bool operator==(const Instance& other) const;

private:
    Instance() = default;
    void build_rank_table();

    std::vector<std::string> names_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<std::vector<Vertex>> prefs_;
    std::vector<int> rank_;  // n*n matrix, -1 for non-neighbors
    int edge_count_ = 0;
};

}  // namespace popmatch
