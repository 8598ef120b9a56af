#include "cylschur/serialize.hpp"

#include <algorithm>

namespace cylschur {

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

json to_json(const EPoly& p) {
    json terms = json::array();
    std::vector<const EPoly::Terms::value_type*> ordered;
    for (auto& t : p.terms()) ordered.push_back(&t);
    std::stable_sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) {
        int da = EPoly::key_degree(a->first), db = EPoly::key_degree(b->first);
        return da != db ? da < db : a->first < b->first;
    });
    for (auto* t : ordered)
        terms.push_back({{"e", t->first}, {"c", t->second.get_str()}});
    return json{{"n", p.num_vars()}, {"terms", terms}};
}

json to_json(const XPoly& p) {
    json terms = json::array();
    std::vector<const XPoly::Terms::value_type*> ordered;
    for (auto& t : p.terms()) ordered.push_back(&t);
    std::stable_sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) {
        int da = XPoly::key_degree(a->first), db = XPoly::key_degree(b->first);
        return da != db ? da < db : a->first < b->first;
    });
    for (auto* t : ordered)
        terms.push_back({{"x", t->first}, {"c", t->second.get_str()}});
    return json{{"n", p.num_vars()}, {"terms", terms}};
}

json to_json(const Tableau& t) {
    json rows = json::array();
    for (auto& r : t.rows()) rows.push_back(r);
    return rows;
}

Tableau tableau_from_json(const json& j) {
    return Tableau(j.get<std::vector<std::vector<int>>>());
}

json to_json(const Matching& m) {
    json arcs = json::array();
    for (auto& [i, j] : m.arcs()) arcs.push_back({i, j});
    return json{{"n", m.n()}, {"arcs", arcs}};
}

Matching matching_from_json(const json& j) {
    std::vector<std::pair<int, int>> arcs;
    for (auto& a : j.at("arcs"))
        arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
    return Matching(j.at("n").get<int>(), std::move(arcs));
}

json to_json(const std::vector<Partition>& chain) {
    json out = json::array();
    for (auto& p : chain) out.push_back(to_json(p));
    return out;
}

std::vector<Partition> chain_from_json(const json& j) {
    std::vector<Partition> chain;
    for (auto& e : j) chain.push_back(partition_from_json(e));
    return chain;
}

json to_json(const VerificationReport& r, bool with_timing) {
    json out{{"identity", identity_name(r.identity)},
             {"h", r.h},
             {"w", r.w},
             {"vars", r.num_vars},
             {"deg", r.degree_cap},
             {"equal", r.equal}};
    if (r.first_discrepancy) {
        out["discrepancy"] = json{{"e", r.first_discrepancy->key},
                                  {"lhs", r.first_discrepancy->lhs.get_str()},
                                  {"rhs", r.first_discrepancy->rhs.get_str()}};
    } else {
        out["discrepancy"] = nullptr;
    }
    if (with_timing) out["ms"] = r.elapsed.count();
    return out;
}

json to_json(const GrowthDiagram& g) {
    json xs = json::array();
    for (auto& [x, y] : g.xs) xs.push_back({x, y});
    json labels = json::array();
    for (int x = 0; x <= g.n; ++x) {
        json col = json::array();
        for (int y = 0; y <= g.n; ++y) col.push_back(to_json(g.labels[x][y]));
        labels.push_back(col);
    }
    return json{{"n", g.n}, {"xs", xs}, {"labels", labels}};
}

json to_json(const TriDiagram& g) {
    json xs = json::array();
    for (auto& [r, c] : g.xs) xs.push_back({r, c});
    return json{
        {"n", g.n}, {"xs", xs}, {"hypotenuse", to_json(g.hypotenuse)}};
}

}  // namespace cylschur
