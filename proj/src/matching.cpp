#include "popmatch/matching.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace popmatch {

Matching Matching::from_pairs(const Instance& inst,
                              std::span<const std::pair<Vertex, Vertex>> pairs) {
    Matching m(inst.vertex_count());
    for (auto [u, v] : pairs) {
        if (u < 0 || v < 0 || u >= inst.vertex_count() || v >= inst.vertex_count())
            throw Error("matching edge endpoint out of range");
        if (!inst.adjacent(u, v))
            throw Error("(" + inst.name(u) + "," + inst.name(v) + ") is not an edge");
        if (m.covers(u) || m.covers(v))
            throw Error("vertex matched twice in matching");
        m.mate_[u] = v;
        m.mate_[v] = u;
    }
    return m;
}

Matching Matching::parse(const Instance& inst, std::istream& in) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream is(raw);
        std::string a, b, extra;
        if (!(is >> a)) continue;
        if (a[0] == '#') continue;
        if (!(is >> b) || (is >> extra))
            throw ParseError(lineno, "expected '<token> <token>'");
        auto ua = inst.find(a);
        auto ub = inst.find(b);
        if (!ua) throw ParseError(lineno, "unknown vertex '" + a + "'");
        if (!ub) throw ParseError(lineno, "unknown vertex '" + b + "'");
        pairs.emplace_back(*ua, *ub);
    }
    return from_pairs(inst, pairs);
}

Matching Matching::parse_string(const Instance& inst, std::string_view text) {
    std::istringstream is{std::string(text)};
    return parse(inst, is);
}

Matching Matching::load(const Instance& inst, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open matching file '" + path + "'");
    return parse(inst, in);
}

int Matching::size() const {
    int covered = 0;
    for (Vertex v : mate_) covered += (v != kUnmatched);
    return covered / 2;
}

void Matching::add(Vertex u, Vertex v) {
    if (covers(u) || covers(v)) throw Error("vertex matched twice in matching");
    mate_[u] = v;
    mate_[v] = u;
}

void Matching::remove(Vertex u) {
    Vertex v = mate_[u];
    if (v == kUnmatched) return;
    mate_[u] = kUnmatched;
    mate_[v] = kUnmatched;
}

std::vector<std::pair<Vertex, Vertex>> Matching::pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < vertex_count(); ++u)
        if (mate_[u] > u) out.emplace_back(u, mate_[u]);
    return out;  // already sorted: u ascending
}

std::vector<Vertex> Matching::uncovered() const {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < vertex_count(); ++u)
        if (mate_[u] == kUnmatched) out.push_back(u);
    return out;
}

std::string Matching::format(const Instance& inst) const {
    auto ps = pairs();
    if (ps.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out += ' ';
        out += '(' + inst.name(ps[i].first) + ',' + inst.name(ps[i].second) + ')';
    }
    return out;
}

std::string Matching::serialize(const Instance& inst) const {
    std::string out;
    for (auto [u, v] : pairs()) out += inst.name(u) + ' ' + inst.name(v) + '\n';
    return out;
}

std::string format_vertex_set(const Instance& inst, std::span<const Vertex> vs) {
    std::vector<Vertex> sorted(vs.begin(), vs.end());
    std::sort(sorted.begin(), sorted.end());
    std::string out = "{";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) out += ',';
        out += inst.name(sorted[i]);
    }
    out += '}';
    return out;
}

std::string format_edge_set(const Instance& inst,
                            std::span<const std::pair<Vertex, Vertex>> es) {
    std::vector<std::pair<Vertex, Vertex>> sorted;
    sorted.reserve(es.size());
    for (auto [u, v] : es) sorted.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(sorted.begin(), sorted.end());
    std::string out = "{";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) out += ',';
        out += '(' + inst.name(sorted[i].first) + ',' + inst.name(sorted[i].second) + ')';
    }
    out += '}';
    return out;
}

}  // namespace popmatch
