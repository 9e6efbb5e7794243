#pragma once

#include <string>

#include <json.hpp>

#include "invariants.hpp"

namespace singcheck {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson weights_json(const std::optional<std::vector<Rational>>& w) {
    if (!w) return nullptr;
    OrderedJson arr = OrderedJson::array();
    for (const auto& q : *w) arr.push_back(q.get_str());
    return arr;
}

/// Report schema (field order is part of the format; output is
/// byte-deterministic for identical input text):
/// {vars, f, g, preconditions{...}, invariants{...}, identities{...},
///  quasihomogeneous{by_saito, weights}} plus oracle_agrees when requested.
inline OrderedJson report_json(const InvariantReport& rep, const std::string& vars,
                               const std::string& f, const std::string& g) {
    OrderedJson j;
    j["vars"] = vars;
    j["f"] = f;
    j["g"] = g;
    OrderedJson pre;
    for (const auto& [name, ok] : rep.preconditions.flags()) pre[name] = ok;
    j["preconditions"] = std::move(pre);
    OrderedJson inv;
    inv["mu_f"] = rep.mu_f;
    inv["mu_V"] = rep.mu_V;
    inv["tau_V"] = rep.tau_V;
    inv["q_V"] = rep.q_V;
    inv["mu_BR_pair"] = rep.mu_BR_pair;
    inv["mu_BR_rel"] = rep.mu_BR_rel;
    inv["mu_G"] = rep.mu_G;
    inv["mu_fV"] = rep.mu_fV;
    inv["mu_pair_topological"] = rep.mu_pair_topological;
    j["invariants"] = std::move(inv);
    OrderedJson ids;
    for (const auto& [name, chk] : rep.identities) {
        OrderedJson one;
        one["lhs"] = chk.lhs;
        one["rhs"] = chk.rhs;
        one["holds"] = chk.holds;
        ids[name] = std::move(one);
    }
    j["identities"] = std::move(ids);
    OrderedJson qh;
    qh["by_saito"] = rep.quasihomogeneous_by_saito;
    qh["weights"] = weights_json(rep.weights);
    j["quasihomogeneous"] = std::move(qh);
    if (rep.oracle_agrees) {
        OrderedJson oa;
        for (const auto& [name, ok] : *rep.oracle_agrees) oa[name] = ok;
        j["oracle_agrees"] = std::move(oa);
    }
    return j;
}

inline OrderedJson precondition_refusal_json(const PreconditionError& e, const std::string& vars,
                                             const std::string& f, const std::string& g) {
    OrderedJson j;
    j["vars"] = vars;
    j["f"] = f;
    j["g"] = g;
    OrderedJson err;
    err["kind"] = "precondition_failure";
    err["failed"] = e.failed;
    j["error"] = std::move(err);
    if (!e.flags.empty()) {
        OrderedJson pre;
        for (const auto& [name, ok] : e.flags) pre[name] = ok;
        j["preconditions"] = std::move(pre);
    }
    return j;
}

inline std::string report_text(const InvariantReport& rep, const std::string& vars,
                               const std::string& f, const std::string& g) {
    std::string out;
    out += "pair: f = " + f + ", g = " + g + "  (vars " + vars + ")\n";
    out += "preconditions:";
    for (const auto& [name, ok] : rep.preconditions.flags())
        out += " " + name + "=" + (ok ? "yes" : "no");
    out += "\ninvariants:\n";
    auto line = [&out](const char* name, std::int64_t v) {
        out += "  " + std::string(name) + " = " + std::to_string(v) + "\n";
    };
    line("mu_f", static_cast<std::int64_t>(rep.mu_f));
    line("mu_V", static_cast<std::int64_t>(rep.mu_V));
    line("tau_V", static_cast<std::int64_t>(rep.tau_V));
    line("q_V", rep.q_V);
    line("mu_BR_pair", static_cast<std::int64_t>(rep.mu_BR_pair));
    line("mu_BR_rel", static_cast<std::int64_t>(rep.mu_BR_rel));
    line("mu_G", static_cast<std::int64_t>(rep.mu_G));
    line("mu_fV", static_cast<std::int64_t>(rep.mu_fV));
    out += "  mu_pair_topological = " + std::to_string(rep.mu_pair_topological) +
           "  (reported via identity EQ5: mu_f + mu_fV)\n";
    if (rep.q_V < 0)
        out += "warning: q_V is negative; mu >= tau should always hold, this indicates an "
               "engine bug\n";
    out += "identities:\n";
    for (const auto& [name, chk] : rep.identities) {
        out += "  " + name + ": " + std::to_string(chk.lhs) +
               (chk.lhs == chk.rhs ? " = " : " != ") + std::to_string(chk.rhs) + "  " +
               (chk.holds ? "ok" : "VIOLATED") + "\n";
    }
    out += "quasihomogeneous: by_saito=" + std::string(rep.quasihomogeneous_by_saito ? "yes" : "no");
    if (rep.weights) {
        out += " weights=(";
        for (std::size_t i = 0; i < rep.weights->size(); ++i)
            out += (i ? ", " : "") + (*rep.weights)[i].get_str();
        out += ")";
    } else {
        out += " weights=none";
    }
    out += "\n";
    if (rep.oracle_agrees) {
        out += "oracle:";
        for (const auto& [name, ok] : *rep.oracle_agrees)
            out += " " + name + "=" + (ok ? "agrees" : "DISAGREES");
        out += "\n";
    }
    out += rep.all_identities_hold() ? "verdict: all identities hold\n"
                                     : "verdict: IDENTITY VIOLATION\n";
    return out;
}

} // namespace singcheck
