#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "popmatch/instance.hpp"

namespace popmatch {

// A matching of an Instance: disjoint edges, stored as a partner array.
// Edge pairs are canonicalized (u < v, sorted) wherever they are exposed,
// so equality and ordering are deterministic.
class Matching {
public:
    Matching() = default;
    explicit Matching(int n) : mate_(n, kUnmatched) {}

    // Validates that each pair is an edge of `inst` and pairs are disjoint.
    static Matching from_pairs(const Instance& inst,
                               std::span<const std::pair<Vertex, Vertex>> pairs);

    // Matching file format: one edge per line, "<token> <token>"; blank and
    // '#' lines ignored; vertices not mentioned are uncovered.
    static Matching parse(const Instance& inst, std::istream& in);
    static Matching parse_string(const Instance& inst, std::string_view text);
    static Matching load(const Instance& inst, const std::string& path);

    int vertex_count() const { return static_cast<int>(mate_.size()); }
    Vertex mate(Vertex u) const { return mate_[u]; }
    bool covers(Vertex u) const { return mate_[u] != kUnmatched; }
    int size() const;  // number of edges

    void add(Vertex u, Vertex v);     // both must be uncovered
    void remove(Vertex u);            // removes the edge at u, if any

    std::vector<std::pair<Vertex, Vertex>> pairs() const;  // canonical
    std::vector<Vertex> uncovered() const;

    // "(a,b) (d,e)" with canonical edge order; "-" for the empty matching.
    std::string format(const Instance& inst) const;
    // Matching file content (one edge per line).
    std::string serialize(const Instance& inst) const;

    bool operator==(const Matching& other) const { return mate_ == other.mate_; }
    bool operator<(const Matching& other) const { return mate_ < other.mate_; }

private:
    std::vector<Vertex> mate_;
};

// Canonical "{a,b,c}" rendering of a vertex set (declaration order).
std::string format_vertex_set(const Instance& inst, std::span<const Vertex> vs);
// Canonical "{(a,b),(d,e)}" rendering of an edge set.
std::string format_edge_set(const Instance& inst,
                            std::span<const std::pair<Vertex, Vertex>> es);

}  // namespace popmatch
