#include "tilecert/strategy.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace tilecert {

namespace {

const std::set<std::string> kAtomNames = {"trfc", "trfcu", "troc",    "trocu",
                                          "mirror", "dp",  "weights", "repeat"};

bool takes_width(const std::string& name) {
    return name == "trfc" || name == "trfcu" || name == "troc" || name == "trocu";
}

} // namespace

Strategy parse_strategy(std::string_view text) {
    Strategy s;
    std::size_t pos = 0;
    auto trim = [](std::string t) {
        auto issp = [](unsigned char c) { return std::isspace(c); };
        while (!t.empty() && issp(t.front())) t.erase(t.begin());
        while (!t.empty() && issp(t.back())) t.pop_back();
        return t;
    };
    while (pos <= text.size()) {
        std::size_t sep = text.find(';', pos);
        std::string part = trim(std::string(text.substr(
            pos, sep == std::string_view::npos ? std::string_view::npos : sep - pos)));
        pos = sep == std::string_view::npos ? text.size() + 1 : sep + 1;
        if (part.empty()) continue;
        StrategyAtom atom;
        std::size_t colon = part.find(':');
        atom.name = trim(part.substr(0, colon));
        while (colon != std::string::npos) {
            std::size_t next = part.find(':', colon + 1);
            std::string num = trim(part.substr(colon + 1, next == std::string::npos
                                                              ? std::string::npos
                                                              : next - colon - 1));
            try {
                atom.params.push_back(std::stoi(num));
            } catch (const std::exception&) {
                throw TransformError("bad strategy parameter '" + num + "'");
            }
            colon = next;
        }
        if (!kAtomNames.count(atom.name))
            throw TransformError("unknown strategy atom '" + atom.name + "'");
        if (takes_width(atom.name) && atom.params.empty())
            throw TransformError("atom '" + atom.name + "' needs a width parameter");
        if (!takes_width(atom.name) && !atom.params.empty())
            throw TransformError("atom '" + atom.name + "' takes no parameters");
        for (int k : atom.params)
            if (k < 1) throw TransformError("width parameters must be >= 1");
        s.atoms.push_back(std::move(atom));
    }
    return s;
}

std::string strategy_text(const Strategy& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.atoms.size(); ++i) {
        if (i) os << "; ";
        os << s.atoms[i].name;
        for (int p : s.atoms[i].params) os << ":" << p;
    }
    return os.str();
}

namespace {

RunLimits limits_of(const Budget& b, std::chrono::steady_clock::time_point start) {
    RunLimits rl;
    if (b.wall_seconds > 0)
        rl.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                  std::chrono::duration<double>(b.wall_seconds));
    rl.cancel = b.cancel;
    return rl;
}

TransformLimits transform_limits(const Budget& b, const RunLimits& rl) {
    TransformLimits tl;
    tl.tile_budget = b.tile_cap;
    tl.weight_cap = b.weight_cap;
    tl.limits = rl;
    return tl;
}

// Applies one transform atom at one width; throws what the transform
// throws.
TransformResult apply_one(const RelProblem& p, const std::string& name, int k,
                          const TransformLimits& tl) {
    if (name == "trfc") return trfc(p, k, tl);
    if (name == "trfcu") return trfcu(p, k, tl);
    if (name == "troc") return troc(p, k, tl);
    if (name == "trocu") return trocu(p, k, tl);
    if (name == "mirror") return mirror(p);
    if (name == "dp") return dp(p);
    if (name == "weights") return weight_removal(p, tl);
    throw TransformError("unknown transform '" + name + "'");
}

} // namespace

ProofTrace run_strategy(const RelProblem& p, const Strategy& s, const Budget& budget) {
    auto start = std::chrono::steady_clock::now();
    RunLimits rl = limits_of(budget, start);
    TransformLimits tl = transform_limits(budget, rl);

    ProofTrace trace;
    trace.initial = p;
    RelProblem cur = p;

    // repeat scopes: map from repeat atom index to the set of problem
    // states already seen there (cycle detection ends the loop)
    std::map<std::size_t, std::set<std::string>> seen;
    auto loop_start = [&](std::size_t i) {
        for (std::size_t j = i; j-- > 0;)
            if (s.atoms[j].name == "repeat") return j + 1;
        return std::size_t{0};
    };

    std::size_t i = 0;
    while (true) {
        if (cur.strict().empty()) {
            trace.verdict = Verdict::YES;
            break;
        }
        if (i >= s.atoms.size()) break;
        if (rl.expired() || rl.cancelled()) break;
        if (trace.steps.size() >= static_cast<std::size_t>(budget.max_steps)) break;

        const StrategyAtom& atom = s.atoms[i];
        if (atom.name == "repeat") {
            std::string key = render_tpdb(cur);
            if (seen[i].insert(key).second) {
                i = loop_start(i);
            } else {
                ++i;
            }
            continue;
        }

        bool try_widths = atom.params.size() > 1;
        std::vector<int> widths = atom.params.empty() ? std::vector<int>{0} : atom.params;
        for (int k : widths) {
            std::optional<TransformResult> res;
            try {
                res = apply_one(cur, atom.name, k, tl);
            } catch (const CancelledError&) {
                trace.verdict = cur.strict().empty() ? Verdict::YES : Verdict::MAYBE;
                return trace;
            } catch (const std::exception&) {
                continue; // inapplicable or budget-aborted: skip
            }
            bool changed = !(res->first == cur);
            if (try_widths && !changed) continue;
            trace.steps.push_back(std::move(res->second));
            trace.problems.push_back(res->first);
            cur = std::move(res->first);
            break;
        }
        ++i;
    }
    trace.verdict = cur.strict().empty() ? Verdict::YES : Verdict::MAYBE;
    return trace;
}

namespace {

bool sizes_match(const ProofStep& st, const SizeTriple& in, const SizeTriple& out) {
    return st.in == in && st.out == out;
}

} // namespace

bool replay(const ProofTrace& trace, std::string* diagnosis) {
    auto fail = [&](std::size_t idx, const std::string& why) {
        if (diagnosis) {
            std::ostringstream os;
            os << "step " << idx + 1 << ": " << why;
            *diagnosis = os.str();
        }
        return false;
    };
    RelProblem cur = trace.initial;
    TransformLimits tl; // replay is deterministic; default limits
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const ProofStep& st = trace.steps[i];
        if (st.in != size_triple(cur)) return fail(i, "input size mismatch");
        RelProblem next;
        if (st.name == StepName::WEIGHTS) {
            if (!st.weights) return fail(i, "missing weight certificate");
            // apply the certificate: all rules must weakly decrease;
            // removal is exactly the strictly decreasing rules
            std::vector<Rule> ks, kw, removed;
            for (const Rule& r : cur.strict()) {
                long long dl = st.weights->of_word(r.lhs), dr = st.weights->of_word(r.rhs);
                if (dl < dr) return fail(i, "weight certificate violates weak decrease");
                if (dl > dr) removed.push_back(r);
                else ks.push_back(r);
            }
            for (const Rule& r : cur.weak()) {
                long long dl = st.weights->of_word(r.lhs), dr = st.weights->of_word(r.rhs);
                if (dl < dr) return fail(i, "weight certificate violates weak decrease");
                if (dl > dr) removed.push_back(r);
                else kw.push_back(r);
            }
            if (!validate_weights(cur, removed, *st.weights))
                return fail(i, "weight certificate failed validation");
            next = RelProblem(std::move(ks), std::move(kw));
        } else {
            int k = st.params.empty() ? 0 : st.params[0];
            TransformResult res;
            try {
                switch (st.name) {
                case StepName::TRFC: res = trfc(cur, k, tl); break;
                case StepName::TRFCU: res = trfcu(cur, k, tl); break;
                case StepName::TROC: res = troc(cur, k, tl); break;
                case StepName::TROCU: res = trocu(cur, k, tl); break;
                case StepName::MIRROR: res = mirror(cur); break;
                case StepName::DP: res = dp(cur); break;
                default: return fail(i, "unknown step");
                }
            } catch (const std::exception& e) {
                return fail(i, std::string("step failed to re-execute: ") + e.what());
            }
            if (st.tiles && res.second.tiles && !(*st.tiles == *res.second.tiles))
                return fail(i, "tile summary mismatch");
            next = std::move(res.first);
        }
        if (st.out != size_triple(next)) return fail(i, "output size mismatch");
        if (i < trace.problems.size() && !(trace.problems[i] == next))
            return fail(i, "recorded problem mismatch");
        cur = std::move(next);
    }
    bool yes = cur.strict().empty();
    if ((trace.verdict == Verdict::YES) != yes) return fail(trace.steps.size(), "verdict mismatch");
    return true;
}

namespace {

std::vector<Strategy> default_portfolio(bool standard) {
    std::vector<const char*> texts;
    if (standard) {
        texts = {
            "trfcu:2; trfcu:3; trfcu:5; mirror; trfcu:2; trfcu:3; trfcu:5; mirror; repeat",
            "trfc:2; weights; repeat",
            "trfc:3; weights; repeat",
            "trfc:5; weights; repeat",
            "dp; troc:3; weights; repeat",
        };
    } else {
        texts = {
            "trocu:2; trocu:3; trocu:5; trocu:8; repeat",
            "troc:2; weights; repeat",
            "troc:3; weights; repeat",
            "troc:5; weights; repeat",
            "troc:8; weights; repeat",
        };
    }
    std::vector<Strategy> out;
    for (const char* t : texts) out.push_back(parse_strategy(t));
    return out;
}

} // namespace

ProofTrace auto_prove(const RelProblem& p, const Budget& budget) {
    if (p.strict().empty()) {
        ProofTrace t;
        t.initial = p;
        t.verdict = Verdict::YES;
        return t;
    }
    std::vector<Strategy> portfolio = default_portfolio(p.weak().empty());
    std::vector<ProofTrace> results(portfolio.size());
    std::vector<char> done(portfolio.size(), 0);
    std::atomic<bool> cancel(false);

    auto worker = [&](std::size_t idx) {
        Budget b = budget;
        b.cancel = &cancel;
        if (budget.cancel && budget.cancel->load()) return;
        ProofTrace t = run_strategy(p, portfolio[idx], b);
        results[idx] = std::move(t);
        done[idx] = 1;
        if (results[idx].verdict == Verdict::YES) cancel.store(true);
    };

    std::vector<std::thread> threads;
    threads.reserve(portfolio.size());
    for (std::size_t i = 0; i < portfolio.size(); ++i) threads.emplace_back(worker, i);
    for (auto& t : threads) t.join();

    for (std::size_t i = 0; i < results.size(); ++i)
        if (done[i] && results[i].verdict == Verdict::YES) return results[i];
    // no proof: report the longest attempt
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i)
        if (done[i] && results[i].steps.size() > results[best].steps.size()) best = i;
    ProofTrace out = done[best] ? std::move(results[best]) : ProofTrace{};
    if (!done[best]) out.initial = p;
    out.verdict = Verdict::MAYBE;
    return out;
}

namespace {

std::string size_text(const SizeTriple& t) {
    std::ostringstream os;
    os << "(" << t[0] << "/" << t[1] << "," << t[2] << ")";
    return os.str();
}

} // namespace

std::string trace_text(const ProofTrace& trace) {
    std::ostringstream os;
    os << "PROBLEM " << render_tpdb(trace.initial) << "\n";
    for (const ProofStep& st : trace.steps) {
        os << "STEP " << step_name_text(st.name);
        if (!st.params.empty()) os << ":" << st.params[0];
        os << " " << size_text(st.in) << " -> " << size_text(st.out) << "\n";
        if (st.tiles) os << "  TILES " << st.tiles->tile_count << "\n";
        if (st.weights) {
            std::vector<std::pair<Letter, long long>> ws(st.weights->values.begin(),
                                                         st.weights->values.end());
            std::sort(ws.begin(), ws.end(), [](const auto& a, const auto& b) {
                return symbols::less(a.first, b.first);
            });
            for (const auto& [l, v] : ws)
                os << "  WEIGHT " << symbols::plain_text(l) << " " << v << "\n";
        }
    }
    os << "VERDICT " << (trace.verdict == Verdict::YES ? "YES" : "MAYBE") << "\n";
    return os.str();
}

std::string trace_json(const ProofTrace& trace) {
    nlohmann::json j;
    j["problem"] = render_tpdb(trace.initial);
    j["verdict"] = trace.verdict == Verdict::YES ? "YES" : "MAYBE";
    j["steps"] = nlohmann::json::array();
    for (const ProofStep& st : trace.steps) {
        nlohmann::json js;
        js["name"] = step_name_text(st.name);
        js["params"] = st.params;
        js["sizes"] = {{"in", st.in}, {"out", st.out}};
        if (st.tiles) {
            js["certificate"] = {{"width", st.tiles->width}, {"tiles", st.tiles->tile_count}};
        } else if (st.weights) {
            nlohmann::json ws = nlohmann::json::array();
            for (const auto& [l, v] : st.weights->values) {
                ws.push_back({{"letter", symbols::canon_text(l)},
                              {"display", symbols::plain_text(l)},
                              {"value", v}});
            }
            js["certificate"] = {{"weights", std::move(ws)}};
        } else {
            js["certificate"] = nullptr;
        }
        j["steps"].push_back(std::move(js));
    }
    return j.dump(2);
}

ProofTrace trace_from_json(std::string_view json) {
    nlohmann::json j = nlohmann::json::parse(json);
    ProofTrace trace;
    trace.initial = parse_tpdb(j.at("problem").get<std::string>());
    trace.verdict = j.at("verdict").get<std::string>() == "YES" ? Verdict::YES : Verdict::MAYBE;

    for (const auto& js : j.at("steps")) {
        ProofStep st;
        auto name = step_name_from(js.at("name").get<std::string>());
        if (!name) throw TransformError("unknown step name in trace");
        st.name = *name;
        st.params = js.at("params").get<std::vector<int>>();
        st.in = js.at("sizes").at("in").get<SizeTriple>();
        st.out = js.at("sizes").at("out").get<SizeTriple>();
        if (js.contains("certificate") && !js.at("certificate").is_null()) {
            const auto& c = js.at("certificate");
            if (c.contains("tiles")) {
                st.tiles = TileSummary{c.at("width").get<int>(), c.at("tiles").get<std::size_t>()};
            } else if (c.contains("weights")) {
                WeightMap wm;
                for (const auto& e : c.at("weights")) {
                    std::string canon = e.at("letter").get<std::string>();
                    wm.values[resolve_canon(canon)] = e.at("value").get<long long>();
                }
                st.weights = std::move(wm);
            }
        }
        trace.steps.push_back(std::move(st));
    }
    return trace;
}

} // namespace tilecert
