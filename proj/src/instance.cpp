#include "popmatch/instance.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace popmatch {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream is{std::string(s)};
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Instance Instance::from_lists(std::vector<std::string> names,
                              const std::vector<std::vector<std::string>>& pref_tokens) {
    Instance inst;
    inst.names_ = std::move(names);
    const int n = static_cast<int>(inst.names_.size());
    for (Vertex u = 0; u < n; ++u) {
        const std::string& tok = inst.names_[u];
        if (tok.empty()) throw ParseError(0, "empty vertex token");
        if (!inst.index_.emplace(tok, u).second)
            throw ParseError(0, "duplicate vertex declaration '" + tok + "'");
    }
    inst.prefs_.resize(n);
    for (Vertex u = 0; u < n; ++u) {
        for (const std::string& tok : pref_tokens[u]) {
            auto it = inst.index_.find(tok);
            if (it == inst.index_.end())
                throw ParseError(0, "'" + inst.names_[u] + "' lists unknown vertex '" + tok + "'");
            Vertex v = it->second;
            if (v == u)
                throw ParseError(0, "'" + inst.names_[u] + "' lists itself");
            if (std::find(inst.prefs_[u].begin(), inst.prefs_[u].end(), v) != inst.prefs_[u].end())
                throw ParseError(0, "'" + inst.names_[u] + "' lists '" + tok + "' twice");
            inst.prefs_[u].push_back(v);
        }
    }
    inst.build_rank_table();
    // symmetry: u lists v iff v lists u
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : inst.prefs_[u])
            if (inst.rank_or_neg(v, u) < 0)
                throw ParseError(0, "symmetry violation: '" + inst.names_[u] + "' lists '" +
                                        inst.names_[v] + "' but not vice versa");
    return inst;
}

void Instance::build_rank_table() {
    const std::size_t n = prefs_.size();
    rank_.assign(n * n, -1);
    edge_count_ = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t r = 0; r < prefs_[u].size(); ++r) {
            rank_[u * n + prefs_[u][r]] = static_cast<int>(r);
            if (static_cast<std::size_t>(prefs_[u][r]) > u) ++edge_count_;
        }
    }
}

Instance Instance::parse(std::istream& in) {
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> pref_tokens;
    std::vector<int> decl_line;
    std::optional<int> declared_count;
    bool first_effective = true;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) {
            // only legal as a leading vertex-count line
            std::istringstream is(line);
            int n = 0;
            if (first_effective && (is >> n) && (is >> std::ws).eof() && n >= 0) {
                declared_count = n;
                first_effective = false;
                continue;
            }
            throw ParseError(lineno, "expected '<vertex>: <neighbors...>'");
        }
        first_effective = false;
        std::string head = trim(line.substr(0, colon));
        if (head.empty()) throw ParseError(lineno, "missing vertex token before ':'");
        if (split_ws(head).size() != 1) throw ParseError(lineno, "vertex token contains whitespace");
        std::string tail = line.substr(colon + 1);
        if (tail.find(':') != std::string::npos) throw ParseError(lineno, "unexpected ':'");
        names.push_back(head);
        pref_tokens.push_back(split_ws(tail));
        decl_line.push_back(lineno);
    }
    if (declared_count && *declared_count != static_cast<int>(names.size()))
        throw ParseError(0, "declared vertex count " + std::to_string(*declared_count) +
                                " does not match " + std::to_string(names.size()) + " vertex lines");
    try {
        return from_lists(std::move(names), pref_tokens);
    } catch (const ParseError& e) {
        throw;  // from_lists reports token context; line numbers only for syntax
    }
}

Instance Instance::parse_string(std::string_view text) {
    std::istringstream is{std::string(text)};
    return parse(is);
}

Instance Instance::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open instance file '" + path + "'");
    return parse(in);
}

std::string Instance::serialize() const {
    std::string out;
    for (Vertex u = 0; u < vertex_count(); ++u) {
        out += names_[u];
        out += ':';
        for (Vertex v : prefs_[u]) {
            out += ' ';
            out += names_[v];
        }
        out += '\n';
    }
    return out;
}

std::optional<Vertex> Instance::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vertex Instance::vertex(std::string_view token) const {
    auto v = find(token);
    if (!v) throw Error("unknown vertex '" + std::string(token) + "'");
    return *v;
}

bool Instance::prefers(Vertex u, Vertex v, Vertex w) const {
    if (v != kUnmatched && rank_or_neg(u, v) < 0)
        throw Error("'" + names_[v] + "' is not adjacent to '" + names_[u] + "'");
    if (w != kUnmatched && rank_or_neg(u, w) < 0)
        throw Error("'" + names_[w] + "' is not adjacent to '" + names_[u] + "'");
    if (v == kUnmatched) return false;          // unmatched never preferred
    if (w == kUnmatched) return true;           // any neighbor beats unmatched
    return rank_or_neg(u, v) < rank_or_neg(u, w);
}

std::vector<std::pair<Vertex, Vertex>> Instance::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : prefs_[u])
            if (v > u) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> Instance::neighborhood(std::span<const Vertex> U) const {
    std::vector<char> in_n(vertex_count(), 0);
    for (Vertex u : U) {
        if (u < 0 || u >= vertex_count()) throw Error("vertex index out of range");
        for (Vertex v : prefs_[u]) in_n[v] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (in_n[v]) out.push_back(v);
    return out;
}

Instance Instance::induced(std::span<const Vertex> keep) const {
    std::vector<char> kept(vertex_count(), 0);
    for (Vertex u : keep) {
        if (u < 0 || u >= vertex_count()) throw Error("vertex index out of range");
        kept[u] = 1;
    }
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> pref_tokens;
    for (Vertex u = 0; u < vertex_count(); ++u) {
        if (!kept[u]) continue;
        names.push_back(names_[u]);
        std::vector<std::string> row;
        for (Vertex v : prefs_[u])
            if (kept[v]) row.push_back(names_[v]);
        pref_tokens.push_back(std::move(row));
    }
    return from_lists(std::move(names), pref_tokens);
}

bool Instance::operator==(const Instance& other) const {
    return names_ == other.names_ && prefs_ == other.prefs_;
}

}  // namespace popmatch
