#pragma once

// Per-ordering predicates: total-circular, bi-circular (W-run coverage),
// circular-arc forbidden patterns and interval-bigraph forbidden patterns.
// Each returns a pass verdict or a replayable witness.

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arcorder/core.hpp"

namespace arcorder {

enum class Method : std::uint8_t { total, bicirc, pattern, interval3, interval4 };

constexpr std::string_view to_string(Method m) noexcept
{
    switch (m) {
    case Method::total: return "total";
    case Method::bicirc: return "bicirc";
    case Method::pattern: return "pattern";
    case Method::interval3: return "interval3";
    case Method::interval4: return "interval4";
    }
    return "?";
}

inline Method parse_method(std::string_view s)
{
    for (auto m : {Method::total, Method::bicirc, Method::pattern, Method::interval3, Method::interval4})
        if (s == to_string(m)) return m;
    throw InputError("unknown method '" + std::string(s) + "' (expected total|bicirc|pattern|interval3|interval4)");
}

/// Methods that characterize circular-arc bigraphs (as opposed to the interval subclass).
constexpr bool is_circular_arc_method(Method m) noexcept
{
    return m == Method::total || m == Method::bicirc || m == Method::pattern;
}

enum class WitnessKind : std::uint8_t { edge_violation, uncovered_cell, pattern_match };

constexpr std::string_view to_string(WitnessKind k) noexcept
{
    switch (k) {
    case WitnessKind::edge_violation: return "edge-violation";
    case WitnessKind::uncovered_cell: return "uncovered-cell";
    case WitnessKind::pattern_match: return "pattern-match";
    }
    return "?";
}

enum class PatternId : std::uint8_t { ca_i, ca_ii, ca_iii, ca_iv, int3, int4_i, int4_ii, int4_iii, int4_iv };

constexpr std::string_view to_string(PatternId p) noexcept
{
    switch (p) {
    case PatternId::ca_i: return "CA-i";
    case PatternId::ca_ii: return "CA-ii";
    case PatternId::ca_iii: return "CA-iii";
    case PatternId::ca_iv: return "CA-iv";
    case PatternId::int3: return "INT3";
    case PatternId::int4_i: return "INT4-i";
    case PatternId::int4_ii: return "INT4-ii";
    case PatternId::int4_iii: return "INT4-iii";
    case PatternId::int4_iv: return "INT4-iv";
    }
    return "?";
}

struct PlacedVertex {
    VertexIndex vertex;
    Position position;

    friend bool operator==(const PlacedVertex&, const PlacedVertex&) = default;
};

struct Witness {
    WitnessKind kind = WitnessKind::edge_violation;
    // edge-violation and uncovered-cell: [x, y]; pattern-match: the matched vertices in position order.
    std::vector<PlacedVertex> vertices;
    std::optional<PatternId> pattern;
    // edge-violation only: Y vertices strictly inside y -> x (clockwise) not adjacent to x,
    // and X vertices strictly inside x -> y not adjacent to y.
    std::vector<PlacedVertex> x_branch_blockers;
    std::vector<PlacedVertex> y_branch_blockers;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
    bool pass = true;
    std::optional<Witness> witness;

    static Verdict ok() { return {}; }
    static Verdict fail(Witness w) { return {false, std::move(w)}; }
};

/// Graph relabelled by clock position: side and adjacency indexed by position 1..n.
class PositionView {
public:
    PositionView(const Bigraph& g, const CircularOrdering& ord)
    {
        require_matching(g, ord);
        assign(g, ord.sequence());
    }

    PositionView(const Bigraph& g, const std::vector<VertexIndex>& sequence) { assign(g, sequence); }

    /// Re-targets the view at another ordering of the same graph, reusing storage.
    void assign(const Bigraph& g, const std::vector<VertexIndex>& sequence)
    {
        const auto n = sequence.size();
        n_ = static_cast<int>(n);
        side_.resize(n + 1);
        vertex_.resize(n + 1);
        adj_.resize((n + 1) * (n + 1));
        for (std::size_t p = 1; p <= n; ++p) {
            vertex_[p] = sequence[p - 1];
            side_[p] = g.side(vertex_[p]);
        }
        for (std::size_t p = 1; p <= n; ++p)
            for (std::size_t q = 1; q <= n; ++q) adj_[p * (n + 1) + q] = g.adjacent(vertex_[p], vertex_[q]) ? 1 : 0;
    }

    int size() const noexcept { return n_; }
    Side side(Position p) const noexcept { return side_[static_cast<std::size_t>(p)]; }
    VertexIndex vertex(Position p) const noexcept { return vertex_[static_cast<std::size_t>(p)]; }
    bool adjacent(Position p, Position q) const noexcept
    {
        return adj_[static_cast<std::size_t>(p) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(q)] != 0;
    }
    PlacedVertex placed(Position p) const noexcept { return {vertex(p), p}; }

private:
    int n_ = 0;
    std::vector<Side> side_;
    std::vector<VertexIndex> vertex_;
    std::vector<std::uint8_t> adj_;
};

// ---------------------------------------------------------------------------
// Total-circular orderings

namespace detail {

/// Positions strictly inside a -> b (clockwise) holding side `s` and not adjacent to `anchor`.
inline std::vector<PlacedVertex> blockers(const PositionView& view, Position a, Position b, Side s, Position anchor)
{
    std::vector<PlacedVertex> out;
    const int n = view.size();
    for (Position p = clockwise(a, n); p != b; p = clockwise(p, n))
        if (view.side(p) == s && !view.adjacent(p, anchor)) out.push_back(view.placed(p));
    return out;
}

inline bool branch_holds(const PositionView& view, Position a, Position b, Side s, Position anchor)
{
    const int n = view.size();
    for (Position p = clockwise(a, n); p != b; p = clockwise(p, n))
        if (view.side(p) == s && !view.adjacent(p, anchor)) return false;
    return true;
}

}  // namespace detail

inline Verdict check_total_circular(const PositionView& view)
{
    const int n = view.size();
    for (Position a = 1; a <= n; ++a) {
        for (Position b = a + 1; b <= n; ++b) {
            if (view.side(a) == view.side(b) || !view.adjacent(a, b)) continue;
            const Position i = view.side(a) == Side::X ? a : b;  // x
            const Position j = view.side(a) == Side::X ? b : a;  // y
            if (detail::branch_holds(view, j, i, Side::Y, i)) continue;
            if (detail::branch_holds(view, i, j, Side::X, j)) continue;
            Witness w;
            w.kind = WitnessKind::edge_violation;
            w.vertices = {view.placed(i), view.placed(j)};
            w.x_branch_blockers = detail::blockers(view, j, i, Side::Y, i);
            w.y_branch_blockers = detail::blockers(view, i, j, Side::X, j);
            return Verdict::fail(std::move(w));
        }
    }
    return Verdict::ok();
}

/// For every edge x-y: either x sees every Y strictly inside y -> x, or y sees every X strictly inside x -> y.
inline Verdict check_total_circular(const Bigraph& g, const CircularOrdering& ord)
{
    return check_total_circular(PositionView(g, ord));
}

// ---------------------------------------------------------------------------
// W-runs and bi-circular orderings

struct WRun {
    VertexIndex owner = 0;
    std::vector<VertexIndex> cells;  // anticlockwise order

    friend bool operator==(const WRun&, const WRun&) = default;
};

/// Positions of the run members of the vertex at position p, nearest first.
/// The scan starts at the nearest opposite-side position anticlockwise of p, passes over
/// same-side positions, stops at the first non-adjacent opposite-side vertex and never
/// visits an opposite-side vertex twice.
inline std::vector<Position> run_positions(const PositionView& view, Position p)
{
    std::vector<Position> out;
    const int n = view.size();
    const Side other = opposite(view.side(p));
    for (Position q = anticlockwise(p, n); q != p; q = anticlockwise(q, n)) {
        if (view.side(q) != other) continue;
        if (!view.adjacent(p, q)) break;
        out.push_back(q);
    }
    return out;
}

/// Runs indexed by vertex index.
inline std::vector<WRun> compute_w_runs(const Bigraph& g, const CircularOrdering& ord)
{
    PositionView view(g, ord);
    std::vector<WRun> runs(g.size());
    for (Position p = 1; p <= view.size(); ++p) {
        auto& run = runs[view.vertex(p)];
        run.owner = view.vertex(p);
        for (auto q : run_positions(view, p)) run.cells.push_back(view.vertex(q));
    }
    return runs;
}

namespace detail {

/// Number of opposite-side vertices met walking anticlockwise from p to q (q included).
inline int opposite_rank(const PositionView& view, Position p, Position q)
{
    const int n = view.size();
    const Side other = opposite(view.side(p));
    int rank = 0;
    for (Position r = anticlockwise(p, n);; r = anticlockwise(r, n)) {
        if (view.side(r) == other) ++rank;
        if (r == q) return rank;
    }
}

}  // namespace detail

inline Verdict check_bi_circular(const PositionView& view)
{
    const int n = view.size();
    std::vector<int> run_length(static_cast<std::size_t>(n) + 1, 0);
    for (Position p = 1; p <= n; ++p) run_length[static_cast<std::size_t>(p)] = static_cast<int>(run_positions(view, p).size());

    auto in_run = [&](Position owner, Position other) {
        return detail::opposite_rank(view, owner, other) <= run_length[static_cast<std::size_t>(owner)];
    };

    // Rows are X vertices, columns Y vertices, both in position order.
    for (Position i = 1; i <= n; ++i) {
        if (view.side(i) != Side::X) continue;
        for (Position j = 1; j <= n; ++j) {
            if (view.side(j) != Side::Y || !view.adjacent(i, j)) continue;
            if (in_run(i, j) || in_run(j, i)) continue;
            Witness w;
            w.kind = WitnessKind::uncovered_cell;
            w.vertices = {view.placed(i), view.placed(j)};
            return Verdict::fail(std::move(w));
        }
    }
    return Verdict::ok();
}

/// Every 1 of the biadjacency matrix lies in its row's or its column's W-run.
inline Verdict check_bi_circular(const Bigraph& g, const CircularOrdering& ord)
{
    return check_bi_circular(PositionView(g, ord));
}

// ---------------------------------------------------------------------------
// Forbidden patterns

inline constexpr std::size_t all_matches = std::numeric_limits<std::size_t>::max();

/// A configuration on positions a < b < c (< d). `layout[t]` is 0 for the first vertex's side
/// and 1 for the other side; either side may play the first role.
struct PatternSpec {
    PatternId id;
    int arity;
    std::array<int, 4> layout;
    std::vector<std::array<int, 2>> present;
    std::vector<std::array<int, 2>> absent;
};

inline const std::vector<PatternSpec>& circular_arc_patterns()
{
    static const std::vector<PatternSpec> specs = {
        {PatternId::ca_i, 4, {0, 0, 1, 1}, {{0, 2}}, {{1, 2}, {0, 3}, {1, 3}}},
        {PatternId::ca_ii, 4, {0, 0, 1, 1}, {{0, 2}, {1, 3}}, {{1, 2}, {0, 3}}},
        {PatternId::ca_iii, 4, {1, 0, 0, 1}, {{1, 3}}, {{0, 1}, {0, 2}, {2, 3}}},
        {PatternId::ca_iv, 4, {1, 0, 0, 1}, {{1, 3}, {0, 2}}, {{0, 1}, {2, 3}}},
    };
    return specs;
}

inline const std::vector<PatternSpec>& interval_triple_patterns()
{
    static const std::vector<PatternSpec> specs = {
        {PatternId::int3, 3, {0, 0, 1, 0}, {{0, 2}}, {{1, 2}}},
    };
    return specs;
}

inline const std::vector<PatternSpec>& interval_quad_patterns()
{
    static const std::vector<PatternSpec> specs = {
        {PatternId::int4_i, 4, {0, 0, 1, 1}, {{1, 2}, {0, 3}}, {{0, 2}, {1, 3}}},
        {PatternId::int4_ii, 4, {0, 1, 0, 1}, {{1, 2}, {0, 3}}, {{0, 1}, {2, 3}}},
        {PatternId::int4_iii, 4, {0, 1, 0, 1}, {{0, 3}}, {{0, 1}, {1, 2}, {2, 3}}},
        {PatternId::int4_iv, 4, {0, 0, 1, 1}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}},
    };
    return specs;
}

inline const PatternSpec& pattern_spec(PatternId id)
{
    for (const auto* family : {&circular_arc_patterns(), &interval_triple_patterns(), &interval_quad_patterns()})
        for (const auto& s : *family)
            if (s.id == id) return s;
    throw InputError("unknown pattern id");
}

/// Whether the positions (in increasing order) realize the pattern.
inline bool matches(const PositionView& view, const PatternSpec& spec, const Position* pos)
{
    const Side first = view.side(pos[0]);
    for (int t = 1; t < spec.arity; ++t) {
        Side want = spec.layout[static_cast<std::size_t>(t)] == spec.layout[0] ? first : opposite(first);
        if (view.side(pos[t]) != want) return false;
    }
    for (auto [u, v] : spec.present)
        if (!view.adjacent(pos[u], pos[v])) return false;
    for (auto [u, v] : spec.absent)
        if (view.adjacent(pos[u], pos[v])) return false;
    return true;
}

namespace detail {

inline Witness pattern_witness(const PositionView& view, PatternId id, const Position* pos, int arity)
{
    Witness w;
    w.kind = WitnessKind::pattern_match;
    w.pattern = id;
    for (int t = 0; t < arity; ++t) w.vertices.push_back(view.placed(pos[t]));
    return w;
}

/// Lexicographic scan over position tuples, then pattern id; all specs share one arity.
inline std::vector<Witness> scan_patterns(const PositionView& view, const std::vector<PatternSpec>& specs,
                                          std::size_t limit)
{
    std::vector<Witness> out;
    if (limit == 0 || specs.empty()) return out;
    const int n = view.size();
    const int arity = specs.front().arity;
    Position pos[4] = {0, 0, 0, 0};
    auto visit = [&]() {
        for (const auto& s : specs) {
            if (!matches(view, s, pos)) continue;
            out.push_back(pattern_witness(view, s.id, pos, arity));
            if (out.size() >= limit) return true;
        }
        return false;
    };
    if (arity == 3) {
        for (pos[0] = 1; pos[0] <= n; ++pos[0])
            for (pos[1] = pos[0] + 1; pos[1] <= n; ++pos[1])
                for (pos[2] = pos[1] + 1; pos[2] <= n; ++pos[2])
                    if (visit()) return out;
    } else {
        for (pos[0] = 1; pos[0] <= n; ++pos[0])
            for (pos[1] = pos[0] + 1; pos[1] <= n; ++pos[1])
                for (pos[2] = pos[1] + 1; pos[2] <= n; ++pos[2])
                    for (pos[3] = pos[2] + 1; pos[3] <= n; ++pos[3])
                        if (visit()) return out;
    }
    return out;
}

inline Verdict first_match_verdict(std::vector<Witness> found)
{
    if (found.empty()) return Verdict::ok();
    return Verdict::fail(std::move(found.front()));
}

}  // namespace detail

/// Quadruples i < j < k < l (linear order, no wraparound) in any Figure-6 style configuration.
inline std::vector<Witness> find_ca_patterns(const PositionView& view, std::size_t limit = all_matches)
{
    return detail::scan_patterns(view, circular_arc_patterns(), limit);
}

inline std::vector<Witness> find_ca_patterns(const Bigraph& g, const CircularOrdering& ord,
                                             std::size_t limit = all_matches)
{
    return find_ca_patterns(PositionView(g, ord), limit);
}

inline Verdict check_ca_pattern_free(const PositionView& view)
{
    return detail::first_match_verdict(find_ca_patterns(view, 1));
}

inline Verdict check_ca_pattern_free(const Bigraph& g, const CircularOrdering& ord)
{
    return check_ca_pattern_free(PositionView(g, ord));
}

enum class IntervalVariant : std::uint8_t { triple, quad };

inline std::vector<Witness> find_interval_patterns(const PositionView& view, IntervalVariant variant,
                                                   std::size_t limit = all_matches)
{
    return detail::scan_patterns(
        view, variant == IntervalVariant::triple ? interval_triple_patterns() : interval_quad_patterns(), limit);
}

inline std::vector<Witness> find_interval_patterns(const Bigraph& g, const CircularOrdering& ord,
                                                   IntervalVariant variant, std::size_t limit = all_matches)
{
    return find_interval_patterns(PositionView(g, ord), variant, limit);
}

inline Verdict check_interval_pattern_free(const PositionView& view, IntervalVariant variant)
{
    return detail::first_match_verdict(find_interval_patterns(view, variant, 1));
}

inline Verdict check(const PositionView& view, Method method)
{
    switch (method) {
    case Method::total: return check_total_circular(view);
    case Method::bicirc: return check_bi_circular(view);
    case Method::pattern: return check_ca_pattern_free(view);
    case Method::interval3: return check_interval_pattern_free(view, IntervalVariant::triple);
    case Method::interval4: return check_interval_pattern_free(view, IntervalVariant::quad);
    }
    return Verdict::ok();
}

/// Runs the checker for `method` on (g, ord).
inline Verdict check(const Bigraph& g, const CircularOrdering& ord, Method method)
{
    return check(PositionView(g, ord), method);
}

}  // namespace arcorder
