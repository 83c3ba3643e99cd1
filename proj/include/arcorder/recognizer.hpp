#pragma once

// Certified recognition by exhaustive ordering search, and the cross-validation harness
// comparing the characterizations against each other.
//
// Parallel search partitions the lexicographic ordering sequence by its first free slot;
// per-task results are merged by task index, so every result equals the sequential one.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "arcorder/checkers.hpp"
#include "arcorder/construction.hpp"
#include "arcorder/core.hpp"
#include "arcorder/generators.hpp"

namespace arcorder {

enum class EnumerationMode : std::uint8_t { rotation_fixed, all_linear };

/// Rotation-fixed for the checkers whose verdict only depends on the cyclic order.
constexpr EnumerationMode default_mode(Method m) noexcept
{
    return m == Method::total || m == Method::bicirc ? EnumerationMode::rotation_fixed : EnumerationMode::all_linear;
}

inline std::uint64_t factorial(std::size_t n)
{
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

inline std::uint64_t search_space(std::size_t n, EnumerationMode mode)
{
    if (n == 0) return 1;
    return mode == EnumerationMode::rotation_fixed ? factorial(n - 1) : factorial(n);
}

/// Visits vertex sequences in lexicographic order; rotation-fixed pins vertex 0 first.
/// Stops early when `visit` returns true.
inline void for_each_ordering(std::size_t n, EnumerationMode mode,
                              const std::function<bool(const std::vector<VertexIndex>&)>& visit)
{
    std::vector<VertexIndex> seq(n);
    std::iota(seq.begin(), seq.end(), VertexIndex{0});
    const auto first_free = (mode == EnumerationMode::rotation_fixed && n > 0) ? 1 : 0;
    do {
        if (visit(seq)) return;
    } while (std::next_permutation(seq.begin() + first_free, seq.end()));
}

inline std::vector<CircularOrdering> enumerate_orderings(const Bigraph& g, EnumerationMode mode)
{
    std::vector<CircularOrdering> out;
    for_each_ordering(g.size(), mode, [&](const std::vector<VertexIndex>& seq) {
        out.emplace_back(seq);
        return false;
    });
    return out;
}

/// The graph is larger than the configured search budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::size_t n, std::size_t budget)
        : std::runtime_error("graph has " + std::to_string(n) + " vertices; exhaustive search is limited to n <= " +
                             std::to_string(budget)),
          vertices(n), limit(budget)
    {
    }

    std::size_t vertices;
    std::size_t limit;
};

struct SearchOptions {
    std::size_t budget = 10;
    unsigned threads = 1;
};

struct RecognizeResult {
    enum class Status : std::uint8_t { found, not_found, discrepancy };

    Method method = Method::total;
    Status status = Status::not_found;
    std::optional<Certificate> certificate;
    std::optional<TheoremDiscrepancy> discrepancy;
    EnumerationMode mode = EnumerationMode::all_linear;
    std::uint64_t search_space = 0;
    // Orderings up to and including the hit in sequential order (the whole space when not found).
    std::uint64_t candidates_examined = 0;
    std::string statement;

    bool exists() const noexcept { return status != Status::not_found; }
};

constexpr std::string_view to_string(RecognizeResult::Status s) noexcept
{
    switch (s) {
    case RecognizeResult::Status::found: return "found";
    case RecognizeResult::Status::not_found: return "not-found";
    case RecognizeResult::Status::discrepancy: return "theorem-discrepancy";
    }
    return "?";
}

inline std::string_view ordering_kind(Method m) noexcept
{
    switch (m) {
    case Method::total: return "total-circular ordering";
    case Method::bicirc: return "bi-circular ordering";
    case Method::pattern: return "ordering free of the circular-arc patterns";
    case Method::interval3: return "ordering free of the three-vertex interval pattern";
    case Method::interval4: return "ordering free of the four-vertex interval patterns";
    }
    return "ordering";
}

namespace detail {

struct TaskHit {
    std::uint64_t local_rank = 0;  // 1-based within the task
    std::vector<VertexIndex> sequence;
};

/// Runs `task(t)` for t in [0, count) on up to `threads` workers, handing out tasks in order.
inline void run_tasks(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task)
{
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t t = 0; t < count; ++t) task(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (std::size_t t = next++; t < count; t = next++) task(t);
        });
    for (auto& th : pool) th.join();
}

}  // namespace detail

/// Searches for the lexicographically first ordering accepted by the method's checker, then
/// certifies it. Non-membership is certified by exhausting the search space.
inline RecognizeResult recognize(const Bigraph& g, Method method, const SearchOptions& options = {})
{
    const std::size_t n = g.size();
    if (n > options.budget) throw BudgetExceeded(n, options.budget);

    RecognizeResult result;
    result.method = method;
    result.mode = default_mode(method);
    result.search_space = search_space(n, result.mode);

    // Task t fixes the vertex at the first free slot to the t-th remaining vertex.
    const std::size_t first_free = (result.mode == EnumerationMode::rotation_fixed && n > 0) ? 1 : 0;
    const std::size_t tasks = n > first_free ? n - first_free : 1;
    const std::uint64_t per_task = n > first_free ? search_space(n, result.mode) / tasks : 1;

    std::vector<std::optional<detail::TaskHit>> hits(tasks);
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

    detail::run_tasks(tasks, options.threads, [&](std::size_t t) {
        if (t > best.load()) return;
        std::vector<VertexIndex> seq(n);
        std::iota(seq.begin(), seq.end(), VertexIndex{0});
        if (n > first_free) std::rotate(seq.begin() + first_free, seq.begin() + first_free + t,
                                        seq.begin() + first_free + t + 1);
        const auto suffix = std::min(n, first_free + 1);
        PositionView view(g, seq);
        std::uint64_t rank = 0;
        do {
            ++rank;
            if ((rank & 0xff) == 0 && best.load() < t) return;
            view.assign(g, seq);
            if (check(view, method).pass) {
                hits[t] = detail::TaskHit{rank, seq};
                std::size_t cur = best.load();
                while (t < cur && !best.compare_exchange_weak(cur, t)) {
                }
                return;
            }
        } while (std::next_permutation(seq.begin() + static_cast<std::ptrdiff_t>(suffix), seq.end()));
    });

    std::optional<std::size_t> winner;
    for (std::size_t t = 0; t < tasks; ++t)
        if (hits[t]) {
            winner = t;
            break;
        }

    if (!winner) {
        result.status = RecognizeResult::Status::not_found;
        result.candidates_examined = result.search_space;
        result.statement = "no " + std::string(ordering_kind(method)) + " among " + std::to_string(result.search_space) +
                           " candidate orderings; by the " + std::string(to_string(method)) +
                           " characterization the graph is not " +
                           (is_circular_arc_method(method) ? "a circular-arc bigraph" : "an interval bigraph");
        return result;
    }

    result.candidates_examined = *winner * per_task + hits[*winner]->local_rank;
    CircularOrdering ord(hits[*winner]->sequence);
    auto realized = realize(g, ord, method);
    if (auto* cert = std::get_if<Certificate>(&realized)) {
        result.status = RecognizeResult::Status::found;
        result.certificate = std::move(*cert);
        result.statement = "certificate found: " + std::string(ordering_kind(method));
    } else if (auto* disc = std::get_if<TheoremDiscrepancy>(&realized)) {
        result.status = RecognizeResult::Status::discrepancy;
        result.discrepancy = std::move(*disc);
        result.statement = "checker accepted an ordering whose canonical arc model does not realize the graph";
    } else {
        // The checker accepted this ordering during the search; a rejection here is a bug.
        throw std::logic_error("checker verdict changed between search and realization");
    }
    return result;
}

// ---------------------------------------------------------------------------
// Cross-validation

struct CrossOptions {
    SearchOptions search;
    bool include_interval = true;
};

struct Counterexample {
    enum class Kind : std::uint8_t { existence_disagreement, containment_violation, theorem_discrepancy };

    Kind kind = Kind::existence_disagreement;
    Method first = Method::total;
    Method second = Method::total;
    bool first_exists = false;
    bool second_exists = false;
};

constexpr std::string_view to_string(Counterexample::Kind k) noexcept
{
    switch (k) {
    case Counterexample::Kind::existence_disagreement: return "existence-disagreement";
    case Counterexample::Kind::containment_violation: return "containment-violation";
    case Counterexample::Kind::theorem_discrepancy: return "theorem-discrepancy";
    }
    return "?";
}

struct CrossReport {
    Bigraph graph;
    std::string graph_hash;
    std::vector<RecognizeResult> outcomes;  // total, bicirc, pattern[, interval3, interval4]
    bool agreement = true;
    std::vector<Counterexample> counterexamples;
    // Rotations of the pattern certificate ordering, and how many of them contain a pattern.
    std::size_t rotations_checked = 0;
    std::size_t rotations_failing = 0;
    double elapsed_ms = 0.0;  // not part of serialized reports

    const RecognizeResult* outcome(Method m) const
    {
        for (const auto& o : outcomes)
            if (o.method == m) return &o;
        return nullptr;
    }
};

inline CrossReport cross_validate(const Bigraph& g, const CrossOptions& options = {})
{
    const auto started = std::chrono::steady_clock::now();
    CrossReport report;
    report.graph = g;
    report.graph_hash = fingerprint_hex(g);

    std::vector<Method> methods = {Method::total, Method::bicirc, Method::pattern};
    if (options.include_interval) {
        methods.push_back(Method::interval3);
        methods.push_back(Method::interval4);
    }
    for (auto m : methods) report.outcomes.push_back(recognize(g, m, options.search));

    for (const auto& o : report.outcomes)
        if (o.status == RecognizeResult::Status::discrepancy)
            report.counterexamples.push_back({Counterexample::Kind::theorem_discrepancy, o.method, o.method, true, false});

    auto compare = [&](Method a, Method b, Counterexample::Kind kind) {
        const auto* oa = report.outcome(a);
        const auto* ob = report.outcome(b);
        if (!oa || !ob) return;
        const bool bad = kind == Counterexample::Kind::containment_violation ? (oa->exists() && !ob->exists())
                                                                             : (oa->exists() != ob->exists());
        if (bad) report.counterexamples.push_back({kind, a, b, oa->exists(), ob->exists()});
    };
    compare(Method::total, Method::bicirc, Counterexample::Kind::existence_disagreement);
    compare(Method::total, Method::pattern, Counterexample::Kind::existence_disagreement);
    compare(Method::bicirc, Method::pattern, Counterexample::Kind::existence_disagreement);
    compare(Method::interval3, Method::interval4, Counterexample::Kind::existence_disagreement);
    compare(Method::interval3, Method::pattern, Counterexample::Kind::containment_violation);
    compare(Method::interval4, Method::pattern, Counterexample::Kind::containment_violation);
    report.agreement = report.counterexamples.empty();

    if (const auto* pat = report.outcome(Method::pattern); pat && pat->certificate) {
        PositionView view(g, pat->certificate->ordering);
        for (std::size_t r = 0; r < g.size(); ++r) {
            view.assign(g, pat->certificate->ordering.rotated(r).sequence());
            ++report.rotations_checked;
            if (!check_ca_pattern_free(view).pass) ++report.rotations_failing;
        }
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return report;
}

struct SweepAggregate {
    std::size_t graphs = 0;
    std::size_t agreeing = 0;
    std::size_t counterexamples = 0;
    std::size_t discrepancies = 0;
    std::vector<std::pair<Method, std::size_t>> exists_counts;
    std::size_t rotation_sensitive_graphs = 0;
    std::size_t rotations_checked = 0;
    std::size_t rotations_failing = 0;

    bool agreement() const noexcept { return counterexamples == 0; }
};

/// Cross-validates every graph of the corpus, streaming reports to `on_report` in corpus order.
/// Graphs are processed in parallel batches; each graph's own search runs single-threaded.
inline SweepAggregate sweep(const GeneratorSpec& spec, const CrossOptions& options,
                            const std::function<void(std::size_t, const CrossReport&)>& on_report = {})
{
    const auto corpus = generate_corpus(spec);
    for (const auto& g : corpus)
        if (g.size() > options.search.budget) throw BudgetExceeded(g.size(), options.search.budget);

    CrossOptions per_graph = options;
    per_graph.search.threads = 1;

    SweepAggregate agg;
    const std::size_t batch = std::max<std::size_t>(1, static_cast<std::size_t>(options.search.threads) * 8);
    std::vector<CrossReport> reports;
    for (std::size_t begin = 0; begin < corpus.size(); begin += batch) {
        const std::size_t end = std::min(corpus.size(), begin + batch);
        reports.assign(end - begin, CrossReport{});
        detail::run_tasks(end - begin, options.search.threads,
                          [&](std::size_t i) { reports[i] = cross_validate(corpus[begin + i], per_graph); });
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            ++agg.graphs;
            if (r.agreement) ++agg.agreeing;
            agg.counterexamples += r.counterexamples.size();
            for (const auto& o : r.outcomes) {
                if (o.status == RecognizeResult::Status::discrepancy) ++agg.discrepancies;
                auto it = std::find_if(agg.exists_counts.begin(), agg.exists_counts.end(),
                                       [&](const auto& e) { return e.first == o.method; });
                if (it == agg.exists_counts.end()) it = agg.exists_counts.insert(agg.exists_counts.end(), {o.method, 0});
                if (o.exists()) ++it->second;
            }
            agg.rotations_checked += r.rotations_checked;
            agg.rotations_failing += r.rotations_failing;
            if (r.rotations_failing > 0) ++agg.rotation_sensitive_graphs;
            if (on_report) on_report(begin + i, r);
        }
    }
    return agg;
}

}  // namespace arcorder
