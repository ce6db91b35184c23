#include "tilecert/transforms.hpp"

#include <algorithm>
#include <set>

namespace tilecert {

const char* step_name_text(StepName n) {
    switch (n) {
    case StepName::TRFC: return "TRFC";
    case StepName::TRFCU: return "TRFCU";
    case StepName::TROC: return "TROC";
    case StepName::TROCU: return "TROCU";
    case StepName::MIRROR: return "MIRROR";
    case StepName::DP: return "DP";
    case StepName::WEIGHTS: return "WEIGHTS";
    }
    return "?";
}

std::optional<StepName> step_name_from(std::string_view s) {
    for (StepName n : {StepName::TRFC, StepName::TRFCU, StepName::TROC, StepName::TROCU,
                       StepName::MIRROR, StepName::DP, StepName::WEIGHTS}) {
        if (s == step_name_text(n)) return n;
    }
    return std::nullopt;
}

namespace {

ProofStep make_step(StepName n, std::vector<int> params, const RelProblem& in,
                    const RelProblem& out) {
    ProofStep st;
    st.name = n;
    st.params = std::move(params);
    st.in = size_triple(in);
    st.out = size_triple(out);
    return st;
}

void require_standard(const RelProblem& p, const char* what) {
    if (!p.weak().empty())
        throw TransformError(std::string(what) + " requires a standard problem (no weak rules)");
}

CompletionResult completed(const RelProblem& p, int k, ClosureMode mode,
                           const TransformLimits& tl) {
    CompletionOptions co;
    co.tile_budget = tl.tile_budget;
    co.limits = tl.limits;
    return complete(initial_automaton(p, k, mode), closure_rules(p, k, mode), co);
}

} // namespace

TransformResult trfc(const RelProblem& p, int k, const TransformLimits& tl) {
    require_standard(p, "TRFC");
    CompletionResult cr = completed(p, k, ClosureMode::RFC, tl);
    RelProblem out = btiled_rules(cr.automaton, p).problem();
    ProofStep st = make_step(StepName::TRFC, {k}, p, out);
    st.tiles = TileSummary{k, cr.tile_count};
    return {std::move(out), std::move(st)};
}

TransformResult trfcu(const RelProblem& p, int k, const TransformLimits& tl) {
    require_standard(p, "TRFCU");
    CompletionResult cr = completed(p, k, ClosureMode::RFC, tl);
    std::vector<Rule> kept;
    for (const Rule& r : p.strict())
        if (has_covered_redex(cr.automaton, r.lhs)) kept.push_back(r);
    RelProblem out(std::move(kept), {});
    ProofStep st = make_step(StepName::TRFCU, {k}, p, out);
    st.tiles = TileSummary{k, cr.tile_count};
    return {std::move(out), std::move(st)};
}

TransformResult troc(const RelProblem& p, int k, const TransformLimits& tl) {
    CompletionResult cr = completed(p, k, ClosureMode::ROC, tl);
    RelProblem out = btiled_rules(cr.automaton, p).problem();
    ProofStep st = make_step(StepName::TROC, {k}, p, out);
    st.tiles = TileSummary{k, cr.tile_count};
    return {std::move(out), std::move(st)};
}

TransformResult trocu(const RelProblem& p, int k, const TransformLimits& tl) {
    CompletionResult cr = completed(p, k, ClosureMode::ROC, tl);
    std::vector<Rule> ks, kw;
    for (const Rule& r : p.strict())
        if (has_covered_redex(cr.automaton, r.lhs)) ks.push_back(r);
    for (const Rule& r : p.weak())
        if (has_covered_redex(cr.automaton, r.lhs)) kw.push_back(r);
    RelProblem out(std::move(ks), std::move(kw));
    ProofStep st = make_step(StepName::TROCU, {k}, p, out);
    st.tiles = TileSummary{k, cr.tile_count};
    return {std::move(out), std::move(st)};
}

TransformResult mirror(const RelProblem& p) {
    std::vector<Rule> s, w;
    for (const Rule& r : p.strict()) s.push_back({reversed(r.lhs), reversed(r.rhs)});
    for (const Rule& r : p.weak()) w.push_back({reversed(r.lhs), reversed(r.rhs)});
    RelProblem out(std::move(s), std::move(w));
    return {out, make_step(StepName::MIRROR, {}, p, out)};
}

TransformResult dp(const RelProblem& p) {
    require_standard(p, "DP");
    for (const Rule& r : p.strict()) {
        if (r.rhs.empty()) throw TransformError("DP requires a non-collapsing system");
        if (r.lhs.empty()) throw TransformError("DP requires nonempty left-hand sides");
    }
    std::set<Letter> defined;
    for (const Rule& r : p.strict()) defined.insert(r.lhs.back());
    auto mark_last = [](Word w) {
        w.back() = symbols::marked(w.back());
        return w;
    };
    std::vector<Rule> pairs;
    for (const Rule& r : p.strict()) {
        Word ml = mark_last(r.lhs);
        for (std::size_t n = 1; n <= r.rhs.size(); ++n) {
            if (!defined.count(r.rhs[n - 1])) continue;
            Word pre(r.rhs.begin(), r.rhs.begin() + n);
            pairs.push_back({ml, mark_last(std::move(pre))});
        }
    }
    RelProblem out(std::move(pairs), p.strict());
    return {out, make_step(StepName::DP, {}, p, out)};
}

TransformResult weight_removal(const RelProblem& p, const TransformLimits& tl) {
    std::vector<Rule> rules = p.strict();
    rules.insert(rules.end(), p.weak().begin(), p.weak().end());
    WeightSearchOptions wo;
    wo.cap = tl.weight_cap;
    wo.limits = tl.limits;
    WeightSearchResult ws = find_weights(rules, wo);

    std::set<std::size_t> removed(ws.removed.begin(), ws.removed.end());
    std::vector<Rule> s, w;
    for (std::size_t i = 0; i < p.strict().size(); ++i)
        if (!removed.count(i)) s.push_back(p.strict()[i]);
    for (std::size_t i = 0; i < p.weak().size(); ++i)
        if (!removed.count(p.strict().size() + i)) w.push_back(p.weak()[i]);
    RelProblem out(std::move(s), std::move(w));
    ProofStep st = make_step(StepName::WEIGHTS, {}, p, out);
    st.weights = std::move(ws.weights);
    return {std::move(out), std::move(st)};
}

} // namespace tilecert
