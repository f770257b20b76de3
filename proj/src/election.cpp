#include "popmatch/election.hpp"

#include <algorithm>
#include <string>

namespace popmatch {

void EdgeLabelMap::set(Vertex u, Vertex v, Vote at_u, Vote at_v) {
    if (u < v)
        labels_[{u, v}] = {at_u, at_v};
    else
        labels_[{v, u}] = {at_v, at_u};
}

std::pair<Vote, Vote> EdgeLabelMap::at(Vertex u, Vertex v) const {
    auto it = labels_.find({std::min(u, v), std::max(u, v)});
    if (it == labels_.end()) throw Error("edge not present in label map");
    auto [a, b] = it->second;
    return u < v ? std::make_pair(a, b) : std::make_pair(b, a);
}

bool EdgeLabelMap::contains(Vertex u, Vertex v) const {
    return labels_.count({std::min(u, v), std::max(u, v)}) > 0;
}

Vote vote(const Instance& inst, const Matching& m, Vertex u, Vertex v) {
    if (!inst.adjacent(u, v))
        throw Error("(" + inst.name(u) + "," + inst.name(v) + ") is not an edge");
    if (m.mate(u) == v)
        throw Error("(" + inst.name(u) + "," + inst.name(v) + ") is a matching edge");
    return inst.prefers(u, v, m.mate(u)) ? Vote::plus : Vote::minus;
}

EdgeLabelMap label_edges(const Instance& inst, const Matching& m) {
    if (m.vertex_count() != inst.vertex_count())
        throw Error("matching does not belong to this instance");
    EdgeLabelMap labels;
    for (auto [u, v] : inst.edges()) {
        if (m.mate(u) == v) continue;
        labels.set(u, v, vote(inst, m, u, v), vote(inst, m, v, u));
    }
    return labels;
}

std::vector<std::pair<Vertex, Vertex>> blocking_edges(const Instance& inst,
                                                      const Matching& m) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& [edge, votes] : label_edges(inst, m).entries())
        if (votes.first == Vote::plus && votes.second == Vote::plus)
            out.push_back(edge);
    return out;
}

int delta(const Instance& inst, const Matching& m, const Matching& n) {
    if (m.vertex_count() != inst.vertex_count() || n.vertex_count() != inst.vertex_count())
        throw Error("matching does not belong to this instance");
    int margin = 0;
    for (Vertex u = 0; u < inst.vertex_count(); ++u) {
        Vertex pm = m.mate(u), pn = n.mate(u);
        if (pm == pn) continue;
        margin += inst.prefers(u, pn, pm) ? 1 : -1;
    }
    return margin;
}

namespace {

void enumerate_from(const Instance& inst, Matching& cur, Vertex u, bool& keep_going,
                    const std::function<bool(const Matching&)>& visit) {
    if (!keep_going) return;
    while (u < inst.vertex_count() && cur.covers(u)) ++u;
    if (u == inst.vertex_count()) {
        keep_going = visit(cur);
        return;
    }
    // u stays uncovered
    enumerate_from(inst, cur, u + 1, keep_going, visit);
    // or u is matched to an unused neighbor, tried in preference order
    for (Vertex v : inst.neighbors(u)) {
        if (!keep_going) return;
        if (cur.covers(v)) continue;
        cur.add(u, v);
        enumerate_from(inst, cur, u + 1, keep_going, visit);
        cur.remove(u);
    }
}

void check_edge_bound(const Instance& inst, int max_edges, const char* op) {
    if (inst.edge_count() > max_edges)
        throw BoundError(std::string(op) + ": instance has " +
                         std::to_string(inst.edge_count()) + " edges, enumeration bound is " +
                         std::to_string(max_edges));
}

}  // namespace

void for_each_matching(const Instance& inst,
                       const std::function<bool(const Matching&)>& visit) {
    Matching cur(inst.vertex_count());
    bool keep_going = true;
    enumerate_from(inst, cur, 0, keep_going, visit);
}

std::vector<Matching> enumerate_matchings(const Instance& inst, int max_edges) {
    check_edge_bound(inst, max_edges, "enumerate_matchings");
    std::vector<Matching> out;
    for_each_matching(inst, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

bool oracle_is_popular(const Instance& inst, const Matching& m, int max_edges) {
    check_edge_bound(inst, max_edges, "oracle_is_popular");
    if (m.vertex_count() != inst.vertex_count())
        throw Error("matching does not belong to this instance");
    bool popular = true;
    for_each_matching(inst, [&](const Matching& n) {
        if (delta(inst, m, n) > 0) {
            popular = false;
            return false;
        }
        return true;
    });
    return popular;
}

std::vector<Matching> oracle_popular_matchings(const Instance& inst, int max_edges) {
    check_edge_bound(inst, max_edges, "oracle_popular_matchings");
    std::vector<Matching> all = enumerate_matchings(inst, max_edges);
    std::vector<Matching> popular;
    for (const Matching& m : all) {
        bool ok = true;
        for (const Matching& n : all)
            if (delta(inst, m, n) > 0) {
                ok = false;
                break;
            }
        if (ok) popular.push_back(m);
    }
    return popular;
}

}  // namespace popmatch
