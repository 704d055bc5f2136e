#include "json_io.hpp"

namespace ribbonkit {

using nlohmann::json;

json to_json(const Composition& c) { return json(c.parts()); }

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const SymVector& v) {
    json terms = json::array();
    for (const auto& [p, coeff] : v.terms()) {
        terms.push_back({{"partition", to_json(p)}, {"coeff", coeff}});
    }
    return {{"basis", v.basis() == Basis::schur ? "schur" : "h"}, {"terms", terms}};
}

json to_json(const RibbonTableau& t) {
    return {{"shape", to_json(t.shape())},
            {"rows", json(t.rows())},
            {"content", json(t.content())}};
}

json to_json(const FamilyMatch& m) {
    json params = json::object();
    for (const char* name = family_param_names(m.id); *name; ++name) {
        switch (*name) {
            case 'a': params["a"] = m.params.a; break;
            case 'b': params["b"] = m.params.b; break;
            case 'c': params["c"] = m.params.c; break;
            case 'd': params["d"] = m.params.d; break;
        }
    }
    return {{"id", m.id}, {"params", params}};
}

json to_json(const NearEqualityRecord& r) {
    json families = json::array();
    for (const auto& match : r.families) families.push_back(to_json(match));
    return {{"alpha", to_json(r.alpha)},
            {"beta", to_json(r.beta)},
            {"nu", to_json(r.nu)},
            {"families", families}};
}

json to_json(const NecessaryConditionsReport& r) {
    json checks = json::array();
    for (const auto& check : r.checks) {
        checks.push_back({{"name", check.name},
                          {"applicable", check.applicable},
                          {"satisfied", check.satisfied},
                          {"detail", check.detail}});
    }
    return {{"checks", checks}, {"all_satisfied", r.all_satisfied()}};
}

json to_json(const IdentityReport& r) {
    auto tableau_array = [](const std::vector<RibbonTableau>& set) {
        json arr = json::array();
        for (const auto& t : set) arr.push_back(to_json(t));
        return arr;
    };
    return {{"alpha", to_json(r.move.base)},
            {"i", r.move.source_row},
            {"j", r.move.target_row},
            {"t", r.move.amount},
            {"beta", to_json(r.moved)},
            {"a_set", tableau_array(r.a_set)},
            {"b_set", tableau_array(r.b_set)},
            {"difference", to_json(r.difference)},
            {"direct", to_json(r.direct)},
            {"agree", r.agree}};
}

json to_json(const FamilyVerifyReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"id", f.id},
                            {"params", to_json(FamilyMatch{f.id, f.params})["params"]},
                            {"detail", f.detail}});
    }
    return {{"verdict", r.pass ? "PASS" : "FAIL"},
            {"size_cap", r.size_cap},
            {"instantiations", r.instantiations},
            {"failures", failures},
            {"seconds", r.seconds}};
}

json to_json(const ConjectureReport& r) {
    json counts = json::object();
    for (const auto& [id, count] : r.family_counts) counts[std::to_string(id)] = count;
    json counterexamples = json::array();
    for (const auto& record : r.counterexamples) counterexamples.push_back(to_json(record));
    return {{"verdict", r.pass ? "PASS" : "FAIL"},
            {"max_size", r.max_size},
            {"records", r.record_count},
            {"family_counts", counts},
            {"unclassified", r.unclassified},
            {"counterexamples", counterexamples},
            {"seconds", r.seconds}};
}

json stats_json(const Composition& c) {
    json out{{"composition", to_json(c)}};
    if (c.is_all_ones()) {
        out["stats"] = nullptr;
        out["note"] = "statistics undefined for all-ones compositions";
    } else {
        CompositionStats s = compute_stats(c);
        out["stats"] = {{"k", s.k},          {"delta", s.delta},
                        {"z", json(s.z)},    {"p", json(s.p)},
                        {"p_prime", json(s.p_prime)}, {"q", json(s.q)},
                        {"q_prime", json(s.q_prime)}, {"epsilon", json(s.epsilon)},
                        {"s_prime", s.s_prime}};
    }
    out["transpose"] = to_json(transpose(c));
    if (c.length() >= 2) {
        json pairs = json::array();
        for (const auto& pair : adjacent_pairs(c)) pairs.push_back(json({pair[0], pair[1]}));
        out["adjacent_pairs"] = pairs;
    } else {
        out["adjacent_pairs"] = nullptr;
    }
    return out;
}

std::string records_jsonl(std::span<const NearEqualityRecord> records) {
    std::string out;
    for (const auto& record : records) {
        out += to_json(record).dump();
        out += '\n';
    }
    return out;
}

}  // namespace ribbonkit
