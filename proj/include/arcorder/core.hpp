#pragma once

// Bipartite graphs, circular orderings and discrete circular-arc models.
//
// Positions on a clock are 1-based (hour markers 1..m). Vertices are addressed
// internally by their declaration index 0..n-1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace arcorder {

using VertexIndex = std::size_t;
using Position = int;

/// Malformed or inconsistent input (vertex mismatch, bad position, ...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Side : std::uint8_t { X, Y };

constexpr Side opposite(Side s) noexcept { return s == Side::X ? Side::Y : Side::X; }

constexpr std::string_view to_string(Side s) noexcept { return s == Side::X ? "X" : "Y"; }

struct VertexSpec {
    std::string name;
    Side side;
};

/// Bipartite graph with a fixed declaration order. Immutable once built.
class Bigraph {
public:
    Bigraph() = default;

    Bigraph(std::vector<VertexSpec> vertices, const std::vector<std::pair<VertexIndex, VertexIndex>>& edges)
    {
        names_.reserve(vertices.size());
        sides_.reserve(vertices.size());
        for (auto& v : vertices) {
            if (v.name.empty()) throw InputError("vertex name must be nonempty");
            if (!index_.emplace(v.name, names_.size()).second)
                throw InputError("duplicate vertex name '" + v.name + "'");
            names_.push_back(std::move(v.name));
            sides_.push_back(v.side);
        }
        adj_.assign(size() * size(), 0);
        for (auto [u, v] : edges) add_edge(u, v);
    }

    /// X vertices are declared first, then Y vertices; edges are (x-name, y-name) pairs.
    static Bigraph from_names(const std::vector<std::string>& xs, const std::vector<std::string>& ys,
                              const std::vector<std::pair<std::string, std::string>>& edges)
    {
        std::vector<VertexSpec> vs;
        for (const auto& x : xs) vs.push_back({x, Side::X});
        for (const auto& y : ys) vs.push_back({y, Side::Y});
        Bigraph g(std::move(vs), {});
        for (const auto& [a, b] : edges) {
            auto u = g.find(a);
            auto v = g.find(b);
            if (!u) throw InputError("edge references undeclared vertex '" + a + "'");
            if (!v) throw InputError("edge references undeclared vertex '" + b + "'");
            g.add_edge(*u, *v);
        }
        return g;
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(VertexIndex v) const { return names_.at(v); }
    Side side(VertexIndex v) const { return sides_.at(v); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<Side>& sides() const noexcept { return sides_; }

    std::optional<VertexIndex> find(std::string_view name) const
    {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    VertexIndex index_of(std::string_view name) const
    {
        auto v = find(name);
        if (!v) throw InputError("unknown vertex '" + std::string(name) + "'");
        return *v;
    }

    bool adjacent(VertexIndex u, VertexIndex v) const noexcept { return adj_[u * size() + v] != 0; }

    std::size_t edge_count() const noexcept
    {
        return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), std::uint8_t{1})) / 2;
    }

    /// Edges as (u, v) with u < v in declaration order, lexicographically sorted.
    std::vector<std::pair<VertexIndex, VertexIndex>> edges() const
    {
        std::vector<std::pair<VertexIndex, VertexIndex>> out;
        for (VertexIndex u = 0; u < size(); ++u)
            for (VertexIndex v = u + 1; v < size(); ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    std::vector<VertexIndex> vertices_on(Side s) const
    {
        std::vector<VertexIndex> out;
        for (VertexIndex v = 0; v < size(); ++v)
            if (sides_[v] == s) out.push_back(v);
        return out;
    }

    /// Copy with the cross edge (u, v) set present or absent.
    Bigraph with_edge(VertexIndex u, VertexIndex v, bool present) const
    {
        Bigraph g = *this;
        if (present) {
            if (!g.adjacent(u, v)) g.add_edge(u, v);
        } else {
            g.adj_[u * size() + v] = g.adj_[v * size() + u] = 0;
        }
        return g;
    }

    /// Copy with every vertex moved to the other side.
    Bigraph with_sides_swapped() const
    {
        Bigraph g = *this;
        for (auto& s : g.sides_) s = opposite(s);
        return g;
    }

    friend bool operator==(const Bigraph& a, const Bigraph& b)
    {
        return a.names_ == b.names_ && a.sides_ == b.sides_ && a.adj_ == b.adj_;
    }

private:
    void add_edge(VertexIndex u, VertexIndex v)
    {
        if (u >= size() || v >= size()) throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("self-loop on '" + names_[u] + "'");
        if (sides_[u] == sides_[v])
            throw InputError("edge '" + names_[u] + "'-'" + names_[v] + "' joins two vertices on side " +
                             std::string(to_string(sides_[u])));
        if (adjacent(u, v)) throw InputError("duplicate edge '" + names_[u] + "'-'" + names_[v] + "'");
        adj_[u * size() + v] = adj_[v * size() + u] = 1;
    }

    std::vector<std::string> names_;
    std::vector<Side> sides_;
    std::vector<std::uint8_t> adj_;
    std::unordered_map<std::string, VertexIndex> index_;
};

/// 64-bit FNV-1a over a canonical text rendering of the graph.
inline std::uint64_t fingerprint(const Bigraph& g)
{
    std::string canon;
    for (VertexIndex v = 0; v < g.size(); ++v) {
        canon += to_string(g.side(v));
        canon += ':';
        canon += g.name(v);
        canon += ';';
    }
    canon += '|';
    for (auto [u, v] : g.edges()) canon += std::to_string(u) + '-' + std::to_string(v) + ';';
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string fingerprint_hex(const Bigraph& g)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::uint64_t h = fingerprint(g);
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = digits[h & 0xf];
    return s;
}

/// Bijection between vertex indices and clock positions 1..n.
class CircularOrdering {
public:
    CircularOrdering() = default;

    explicit CircularOrdering(std::vector<VertexIndex> sequence) : sequence_(std::move(sequence))
    {
        position_.assign(sequence_.size(), 0);
        for (std::size_t p = 0; p < sequence_.size(); ++p) {
            VertexIndex v = sequence_[p];
            if (v >= sequence_.size() || position_[v] != 0)
                throw InputError("ordering is not a permutation of the vertex set");
            position_[v] = static_cast<Position>(p + 1);
        }
    }

    static CircularOrdering from_names(const Bigraph& g, const std::vector<std::string>& names)
    {
        if (names.size() != g.size())
            throw InputError("ordering has " + std::to_string(names.size()) + " vertices, graph has " +
                             std::to_string(g.size()));
        std::vector<VertexIndex> seq;
        seq.reserve(names.size());
        for (const auto& n : names) seq.push_back(g.index_of(n));
        return CircularOrdering(std::move(seq));
    }

    static CircularOrdering identity(std::size_t n)
    {
        std::vector<VertexIndex> seq(n);
        for (std::size_t i = 0; i < n; ++i) seq[i] = i;
        return CircularOrdering(std::move(seq));
    }

    std::size_t size() const noexcept { return sequence_.size(); }
    VertexIndex vertex_at(Position p) const { return sequence_.at(static_cast<std::size_t>(p - 1)); }
    Position position(VertexIndex v) const { return position_.at(v); }
    const std::vector<VertexIndex>& sequence() const noexcept { return sequence_; }

    /// Same cyclic order, starting `shift` places later.
    CircularOrdering rotated(std::size_t shift) const
    {
        std::vector<VertexIndex> seq(sequence_.size());
        for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = sequence_[(i + shift) % seq.size()];
        return CircularOrdering(std::move(seq));
    }

    std::vector<std::string> names(const Bigraph& g) const
    {
        std::vector<std::string> out;
        out.reserve(size());
        for (auto v : sequence_) out.push_back(g.name(v));
        return out;
    }

    friend bool operator==(const CircularOrdering&, const CircularOrdering&) = default;

private:
    std::vector<VertexIndex> sequence_;
    std::vector<Position> position_;
};

inline void require_matching(const Bigraph& g, const CircularOrdering& ord)
{
    if (ord.size() != g.size())
        throw InputError("ordering covers " + std::to_string(ord.size()) + " vertices but the graph has " +
                         std::to_string(g.size()));
}

/// Clockwise successor on an m-clock.
constexpr Position clockwise(Position p, int m) noexcept { return p == m ? 1 : p + 1; }
constexpr Position anticlockwise(Position p, int m) noexcept { return p == 1 ? m : p - 1; }

/// Positions strictly between a and b walking clockwise from a. For a == b this is every other position.
inline std::vector<Position> cyclic_interval(Position a, Position b, int m)
{
    if (a < 1 || a > m || b < 1 || b > m) throw InputError("clock position out of range");
    std::vector<Position> out;
    for (Position p = clockwise(a, m); p != b; p = clockwise(p, m)) out.push_back(p);
    return out;
}

/// Closed arc traversed clockwise from `start` to `end`. start == end is a single point.
struct Arc {
    Position start = 1;
    Position end = 1;
    int m = 1;

    friend bool operator==(const Arc&, const Arc&) = default;
};

inline Arc make_arc(Position start, Position end, int m)
{
    if (m < 1) throw InputError("clock size must be positive");
    if (start < 1 || start > m || end < 1 || end > m)
        throw InputError("arc [" + std::to_string(start) + "," + std::to_string(end) + "] does not fit a " +
                         std::to_string(m) + "-clock");
    return Arc{start, end, m};
}

/// Clockwise distance from a to b, in 0..m-1.
constexpr int clockwise_distance(Position a, Position b, int m) noexcept { return ((b - a) % m + m) % m; }

inline bool arc_contains(const Arc& arc, Position p) noexcept
{
    return clockwise_distance(arc.start, p, arc.m) <= clockwise_distance(arc.start, arc.end, arc.m);
}

// Two clockwise-closed arcs meet iff one of them contains the other's end.
inline bool arcs_intersect(const Arc& a, const Arc& b)
{
    if (a.m != b.m) throw InputError("arcs live on clocks of different sizes");
    return arc_contains(b, a.end) || arc_contains(a, b.end);
}

/// Arc per vertex, all on one m-clock. Vertex names are carried so a model is self-describing.
class ArcModel {
public:
    ArcModel() = default;

    ArcModel(int m, std::vector<std::string> names, std::vector<Arc> arcs)
        : m_(m), names_(std::move(names)), arcs_(std::move(arcs))
    {
        if (names_.size() != arcs_.size()) throw InputError("model names and arcs differ in length");
        for (const auto& a : arcs_)
            if (a.m != m_) throw InputError("all arcs of a model must share the clock size");
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (!index_.emplace(names_[i], i).second) throw InputError("duplicate arc for '" + names_[i] + "'");
    }

    int clock_size() const noexcept { return m_; }
    std::size_t size() const noexcept { return arcs_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    const Arc& arc(std::size_t i) const { return arcs_.at(i); }

    const Arc& arc_of(std::string_view name) const
    {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) throw InputError("model has no arc for '" + std::string(name) + "'");
        return arcs_[it->second];
    }

    std::optional<std::size_t> find(std::string_view name) const
    {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    friend bool operator==(const ArcModel& a, const ArcModel& b)
    {
        return a.m_ == b.m_ && a.names_ == b.names_ && a.arcs_ == b.arcs_;
    }

private:
    int m_ = 0;
    std::vector<std::string> names_;
    std::vector<Arc> arcs_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Bigraph on the model's vertices (model order); only cross-side intersections become edges.
inline Bigraph intersection_bigraph(const ArcModel& model, const std::vector<Side>& sides)
{
    if (sides.size() != model.size()) throw InputError("side assignment does not cover the model");
    std::vector<VertexSpec> vs;
    for (std::size_t i = 0; i < model.size(); ++i) vs.push_back({model.names()[i], sides[i]});
    std::vector<std::pair<VertexIndex, VertexIndex>> edges;
    for (std::size_t u = 0; u < model.size(); ++u)
        for (std::size_t v = u + 1; v < model.size(); ++v)
            if (sides[u] != sides[v] && arcs_intersect(model.arc(u), model.arc(v))) edges.emplace_back(u, v);
    return Bigraph(std::move(vs), edges);
}

enum class MismatchKind : std::uint8_t { missing_edge, spurious_intersection };

constexpr std::string_view to_string(MismatchKind k) noexcept
{
    return k == MismatchKind::missing_edge ? "missing-edge" : "spurious-intersection";
}

struct Mismatch {
    VertexIndex x;  // graph index of the X endpoint
    VertexIndex y;  // graph index of the Y endpoint
    MismatchKind kind;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct ModelCheck {
    bool pass = true;
    std::vector<Mismatch> mismatches;
};

/// Compares the model's intersection bigraph with g. Arcs are matched to vertices by name.
inline ModelCheck verify_model(const Bigraph& g, const ArcModel& model)
{
    if (model.size() != g.size())
        throw InputError("model has " + std::to_string(model.size()) + " arcs, graph has " +
                         std::to_string(g.size()) + " vertices");
    std::vector<const Arc*> arc_of(g.size());
    for (VertexIndex v = 0; v < g.size(); ++v) arc_of[v] = &model.arc_of(g.name(v));

    ModelCheck out;
    for (auto x : g.vertices_on(Side::X)) {
        for (auto y : g.vertices_on(Side::Y)) {
            bool meet = arcs_intersect(*arc_of[x], *arc_of[y]);
            bool edge = g.adjacent(x, y);
            if (meet == edge) continue;
            out.pass = false;
            out.mismatches.push_back({x, y, edge ? MismatchKind::missing_edge : MismatchKind::spurious_intersection});
        }
    }
    return out;
}

}  // namespace arcorder
