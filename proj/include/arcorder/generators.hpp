#pragma once

// Deterministic instance sources: named families, the two worked figure graphs,
// seeded random bigraphs, seeded general-position arc models and exhaustive corpora.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arcorder/core.hpp"

namespace arcorder {

/// Name of the pseudo-random scheme; bump when any sampling rule changes.
inline constexpr std::string_view random_scheme = "mt19937_64+rejection/v1";

/// std::mt19937_64 is fully specified by the standard; the distributions are not, so the
/// integer and Bernoulli draws are done by hand to keep streams identical across platforms.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound)
    {
        if (bound <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    bool bernoulli(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to give every task of a seeded run its own stream.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace detail {

inline std::vector<std::string> numbered(char prefix, int count)
{
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

inline void require_sizes(const std::vector<int>& params, std::size_t count, std::string_view family)
{
    if (params.size() != count)
        throw InputError("family '" + std::string(family) + "' takes " + std::to_string(count) + " size parameter(s)");
    for (int p : params)
        if (p < 0) throw InputError("family sizes must be nonnegative");
}

}  // namespace detail

/// The 8-vertex graph whose total-circular ordering is x1,y2,y3,x4,y5,x6,y7,x8.
inline Bigraph figure1_graph()
{
    return Bigraph::from_names({"x1", "x4", "x6", "x8"}, {"y2", "y3", "y5", "y7"},
                               {{"x1", "y2"}, {"x1", "y3"}, {"x4", "y2"}, {"x4", "y3"}, {"x4", "y5"},
                                {"x6", "y5"}, {"x6", "y7"}, {"x8", "y7"}, {"x8", "y3"}});
}

/// The 10-vertex graph whose bi-circular ordering is y1,x2,x3,y4,y5,x6,y7,y8,x9,y10.
/// Rows x2,x3,x6,x9 and columns y1,y4,y5,y7,y8,y10 reproduce its biadjacency matrix.
inline Bigraph figure2_graph()
{
    return Bigraph::from_names({"x2", "x3", "x6", "x9"}, {"y1", "y4", "y5", "y7", "y8", "y10"},
                               {{"x2", "y1"}, {"x2", "y4"},
                                {"x3", "y1"}, {"x3", "y4"}, {"x3", "y5"}, {"x3", "y10"},
                                {"x6", "y4"}, {"x6", "y5"}, {"x6", "y7"}, {"x6", "y8"}, {"x6", "y10"},
                                {"x9", "y1"}, {"x9", "y7"}, {"x9", "y8"}, {"x9", "y10"}});
}

inline std::vector<std::string> figure1_ordering() { return {"x1", "y2", "y3", "x4", "y5", "x6", "y7", "x8"}; }

inline std::vector<std::string> figure2_ordering()
{
    return {"y1", "x2", "x3", "y4", "y5", "x6", "y7", "y8", "x9", "y10"};
}

inline const std::vector<std::string_view>& family_names()
{
    static const std::vector<std::string_view> names = {"complete", "path",  "even-cycle", "star",
                                                        "matching", "fig1", "fig2"};
    return names;
}

/// complete(a,b) = K_{a,b}; path(n) = P_n; even-cycle(2k) = C_{2k}; star(k) = K_{1,k};
/// matching(k) = k disjoint edges; fig1 and fig2 take no sizes.
inline Bigraph gen_family(std::string_view name, const std::vector<int>& params)
{
    using detail::numbered;
    std::vector<std::pair<std::string, std::string>> edges;
    if (name == "complete") {
        detail::require_sizes(params, 2, name);
        auto xs = numbered('x', params[0]);
        auto ys = numbered('y', params[1]);
        for (const auto& x : xs)
            for (const auto& y : ys) edges.emplace_back(x, y);
        return Bigraph::from_names(xs, ys, edges);
    }
    if (name == "path") {
        detail::require_sizes(params, 1, name);
        const int n = params[0];
        auto xs = numbered('x', (n + 1) / 2);
        auto ys = numbered('y', n / 2);
        // x1 - y1 - x2 - y2 - ...
        for (int i = 0; i + 1 < n; ++i) {
            const auto& x = xs[static_cast<std::size_t>((i + 1) / 2)];
            const auto& y = ys[static_cast<std::size_t>(i / 2)];
            edges.emplace_back(x, y);
        }
        return Bigraph::from_names(xs, ys, edges);
    }
    if (name == "even-cycle") {
        detail::require_sizes(params, 1, name);
        const int len = params[0];
        if (len < 4 || len % 2 != 0) throw InputError("even-cycle length must be even and at least 4");
        const int k = len / 2;
        auto xs = numbered('x', k);
        auto ys = numbered('y', k);
        for (int i = 0; i < k; ++i) {
            edges.emplace_back(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]);
            edges.emplace_back(xs[static_cast<std::size_t>((i + 1) % k)], ys[static_cast<std::size_t>(i)]);
        }
        return Bigraph::from_names(xs, ys, edges);
    }
    if (name == "star") {
        detail::require_sizes(params, 1, name);
        auto ys = numbered('y', params[0]);
        for (const auto& y : ys) edges.emplace_back("x1", y);
        return Bigraph::from_names({"x1"}, ys, edges);
    }
    if (name == "matching") {
        detail::require_sizes(params, 1, name);
        auto xs = numbered('x', params[0]);
        auto ys = numbered('y', params[0]);
        for (std::size_t i = 0; i < xs.size(); ++i) edges.emplace_back(xs[i], ys[i]);
        return Bigraph::from_names(xs, ys, edges);
    }
    if (name == "fig1") {
        detail::require_sizes(params, 0, name);
        return figure1_graph();
    }
    if (name == "fig2") {
        detail::require_sizes(params, 0, name);
        return figure2_graph();
    }
    throw InputError("unknown family '" + std::string(name) + "'");
}

/// Each of the nx*ny cross pairs (x-major order) is an edge with probability p.
inline Bigraph gen_random_bigraph(int nx, int ny, double p, std::uint64_t seed)
{
    if (nx < 0 || ny < 0) throw InputError("sizes must be nonnegative");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0,1]");
    SeededRng rng(seed);
    auto xs = detail::numbered('x', nx);
    auto ys = detail::numbered('y', ny);
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& x : xs)
        for (const auto& y : ys)
            if (rng.bernoulli(p)) edges.emplace_back(x, y);
    return Bigraph::from_names(xs, ys, edges);
}

enum class SideRule : std::uint8_t { alternate, seeded };

struct RandomModel {
    ArcModel model;
    std::vector<Side> sides;

    Bigraph graph() const { return intersection_bigraph(model, sides); }
};

/// n arcs on an m-clock with pairwise-distinct end points. Vertex i (1-based) is named
/// x<i> or y<i> by its side. With `points_only` every arc is the single point at its end.
inline RandomModel gen_random_arc_model(int n, int m, std::uint64_t seed, SideRule rule = SideRule::alternate,
                                        bool points_only = false)
{
    if (n < 1 || m < n) throw InputError("random model needs m >= n >= 1");
    SeededRng rng(seed);
    std::vector<Position> clock(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) clock[static_cast<std::size_t>(i)] = i + 1;
    // Partial Fisher-Yates: the first n slots become the end points.
    for (int i = 0; i < n; ++i) {
        auto j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(m - i));
        std::swap(clock[static_cast<std::size_t>(i)], clock[j]);
    }
    std::vector<std::string> names;
    std::vector<Arc> arcs;
    std::vector<Side> sides;
    for (int i = 0; i < n; ++i) {
        const Position end = clock[static_cast<std::size_t>(i)];
        const Position start = points_only ? end : static_cast<Position>(rng.below(static_cast<std::uint64_t>(m))) + 1;
        const Side side = rule == SideRule::alternate ? (i % 2 == 0 ? Side::X : Side::Y)
                                                      : (rng.bernoulli(0.5) ? Side::X : Side::Y);
        names.push_back((side == Side::X ? "x" : "y") + std::to_string(i + 1));
        arcs.push_back(Arc{start, end, m});
        sides.push_back(side);
    }
    return {ArcModel(m, std::move(names), std::move(arcs)), std::move(sides)};
}

/// All 2^(nx*ny) labelled bigraphs on x1..x<nx>, y1..y<ny>; bit b of the index is the
/// b-th cross pair in x-major order.
inline Bigraph exhaustive_graph(int nx, int ny, std::uint64_t index)
{
    auto xs = detail::numbered('x', nx);
    auto ys = detail::numbered('y', ny);
    std::vector<std::pair<std::string, std::string>> edges;
    int bit = 0;
    for (const auto& x : xs)
        for (const auto& y : ys)
            if ((index >> bit++) & 1U) edges.emplace_back(x, y);
    return Bigraph::from_names(xs, ys, edges);
}

inline std::vector<Bigraph> exhaustive_corpus(int nx, int ny)
{
    if (nx < 0 || ny < 0 || nx * ny > 24) throw InputError("exhaustive corpus limited to nx*ny <= 24");
    std::vector<Bigraph> out;
    const std::uint64_t count = std::uint64_t{1} << (nx * ny);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(exhaustive_graph(nx, ny, i));
    return out;
}

/// Every split nx + ny = n for 1 <= n <= max_n, in order of n then nx.
inline std::vector<Bigraph> exhaustive_corpus_up_to(int max_n)
{
    std::vector<Bigraph> out;
    for (int n = 1; n <= max_n; ++n)
        for (int nx = 0; nx <= n; ++nx) {
            auto part = exhaustive_corpus(nx, n - nx);
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    return out;
}

struct GeneratorSpec {
    enum class Kind : std::uint8_t { family, exhaustive, random_graph, random_model };

    Kind kind = Kind::family;
    std::string family;       // family
    std::vector<int> sizes;   // family sizes; exhaustive: {nx, ny} or {max_n}
    int nx = 0, ny = 0;       // random_graph
    double p = 0.5;           // random_graph
    int n = 0, m = 0;         // random_model; m == 0 means 2n
    std::uint64_t seed = 0;   // random kinds
    std::size_t count = 1;    // random kinds

    void validate() const
    {
        switch (kind) {
        case Kind::family:
            for (int s : sizes)
                if (s < 0) throw InputError("sizes must be nonnegative");
            break;
        case Kind::exhaustive:
            if (sizes.size() != 1 && sizes.size() != 2) throw InputError("exhaustive takes max_n or nx,ny");
            for (int s : sizes)
                if (s < 0) throw InputError("sizes must be nonnegative");
            break;
        case Kind::random_graph:
            if (nx < 0 || ny < 0) throw InputError("sizes must be nonnegative");
            if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0,1]");
            break;
        case Kind::random_model:
            if (n < 1) throw InputError("random model needs n >= 1");
            if (m != 0 && m < n) throw InputError("clock size must be at least n");
            break;
        }
    }
};

/// Materializes the corpus a spec describes. Random kinds draw item i from derive_seed(seed, i).
inline std::vector<Bigraph> generate_corpus(const GeneratorSpec& spec)
{
    spec.validate();
    std::vector<Bigraph> out;
    switch (spec.kind) {
    case GeneratorSpec::Kind::family: out.push_back(gen_family(spec.family, spec.sizes)); break;
    case GeneratorSpec::Kind::exhaustive:
        out = spec.sizes.size() == 1 ? exhaustive_corpus_up_to(spec.sizes[0])
                                     : exhaustive_corpus(spec.sizes[0], spec.sizes[1]);
        break;
    case GeneratorSpec::Kind::random_graph:
        for (std::size_t i = 0; i < spec.count; ++i)
            out.push_back(gen_random_bigraph(spec.nx, spec.ny, spec.p, derive_seed(spec.seed, i)));
        break;
    case GeneratorSpec::Kind::random_model:
        for (std::size_t i = 0; i < spec.count; ++i)
            out.push_back(gen_random_arc_model(spec.n, spec.m == 0 ? 2 * spec.n : spec.m, derive_seed(spec.seed, i))
                              .graph());
        break;
    }
    return out;
}

}  // namespace arcorder
