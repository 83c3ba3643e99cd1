#pragma once

// Arc models from orderings (canonical construction) and orderings from arc models
// (sorting by clockwise end point), plus the certified composition of the two.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arcorder/checkers.hpp"
#include "arcorder/core.hpp"

namespace arcorder {

/// Where a vertex's arc starts: the position of the last member of its W-run.
struct RunAnchor {
    VertexIndex vertex = 0;
    Position r = 1;
    std::size_t run_length = 0;

    friend bool operator==(const RunAnchor&, const RunAnchor&) = default;
};

struct CanonicalModel {
    ArcModel model;                  // arcs in graph declaration order, clock size n
    std::vector<RunAnchor> anchors;  // indexed by vertex
};

/// A_v = [r, position(v)] with r the farthest W-run member anticlockwise, or position(v)
/// itself when the run is empty. No validity check of the ordering is made.
inline CanonicalModel canonical_arc_model(const Bigraph& g, const CircularOrdering& ord)
{
    PositionView view(g, ord);
    const int n = view.size();
    std::vector<Arc> arcs(g.size());
    std::vector<RunAnchor> anchors(g.size());
    for (Position p = 1; p <= n; ++p) {
        const auto run = run_positions(view, p);
        const Position r = run.empty() ? p : run.back();
        const VertexIndex v = view.vertex(p);
        arcs[v] = Arc{r, p, n};
        anchors[v] = RunAnchor{v, r, run.size()};
    }
    return {ArcModel(n, g.names(), std::move(arcs)), std::move(anchors)};
}

/// Two or more arcs share a clockwise end point.
class DuplicateEndpointError : public InputError {
public:
    DuplicateEndpointError(const std::string& a, const std::string& b, Position end)
        : InputError("arcs of '" + a + "' and '" + b + "' share the clockwise end point " + std::to_string(end)),
          first(a), second(b), endpoint(end)
    {
    }

    std::string first;
    std::string second;
    Position endpoint;
};

/// Vertices sorted by increasing clockwise end point, as indices into the model.
inline CircularOrdering ordering_from_model(const ArcModel& model)
{
    std::vector<VertexIndex> seq(model.size());
    std::iota(seq.begin(), seq.end(), VertexIndex{0});
    std::stable_sort(seq.begin(), seq.end(),
                     [&](VertexIndex a, VertexIndex b) { return model.arc(a).end < model.arc(b).end; });
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (model.arc(seq[i - 1]).end == model.arc(seq[i]).end)
            throw DuplicateEndpointError(model.names()[seq[i - 1]], model.names()[seq[i]], model.arc(seq[i]).end);
    }
    return CircularOrdering(std::move(seq));
}

/// Same, with vertices mapped by name onto g's declaration indices.
inline CircularOrdering ordering_from_model(const ArcModel& model, const Bigraph& g)
{
    if (model.size() != g.size()) throw InputError("model and graph cover different vertex sets");
    auto local = ordering_from_model(model);
    std::vector<std::string> names;
    names.reserve(local.size());
    for (auto v : local.sequence()) names.push_back(model.names()[v]);
    return CircularOrdering::from_names(g, names);
}

/// Membership proof: an ordering accepted by the method, and for circular-arc methods the
/// arc model built from it.
struct Certificate {
    Method method = Method::total;
    CircularOrdering ordering;
    std::optional<ArcModel> model;
    std::string graph_hash;
};

/// The checker accepted the ordering but the canonical model does not realize the graph.
struct TheoremDiscrepancy {
    Method method = Method::total;
    Bigraph graph;
    CircularOrdering ordering;
    ArcModel model;
    std::vector<Mismatch> mismatches;
};

struct CheckerRejected {
    Verdict verdict;
};

using Realization = std::variant<Certificate, CheckerRejected, TheoremDiscrepancy>;

inline Realization realize(const Bigraph& g, const CircularOrdering& ord, Method method)
{
    auto verdict = check(g, ord, method);
    if (!verdict.pass) return CheckerRejected{std::move(verdict)};
    if (!is_circular_arc_method(method)) return Certificate{method, ord, std::nullopt, fingerprint_hex(g)};
    auto canonical = canonical_arc_model(g, ord);
    auto verified = verify_model(g, canonical.model);
    if (!verified.pass) return TheoremDiscrepancy{method, g, ord, std::move(canonical.model), std::move(verified.mismatches)};
    return Certificate{method, ord, std::move(canonical.model), fingerprint_hex(g)};
}

struct ReplayResult {
    bool pass = true;
    std::string reason;
};

/// Re-checks a certificate from scratch: fingerprint, checker verdict and model verification.
inline ReplayResult replay_certificate(const Bigraph& g, const Certificate& cert)
{
    if (cert.graph_hash != fingerprint_hex(g)) return {false, "graph fingerprint does not match the certificate"};
    if (cert.ordering.size() != g.size()) return {false, "certificate ordering does not cover the graph"};
    auto verdict = check(g, cert.ordering, cert.method);
    if (!verdict.pass) return {false, "checker rejects the certified ordering"};
    if (is_circular_arc_method(cert.method)) {
        if (!cert.model) return {false, "certificate lacks an arc model"};
        auto verified = verify_model(g, *cert.model);
        if (!verified.pass) return {false, "arc model does not realize the graph"};
    }
    return {true, {}};
}

}  // namespace arcorder
