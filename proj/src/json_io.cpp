#include "kva/json_io.hpp"

namespace kva {

namespace {

std::string str(const Int& n) { return n.get_str(); }

Json json_decomposition(const DecompositionRecord& d) {
    Json comps = Json::array();
    for (const auto& c : d.components)
        comps.push_back(Json{{"mult", str(c.mult)}, {"alpha", str(c.alpha_eff)},
                             {"order", str(c.order)}});
    return Json{
        {"branch", d.branch},
        {"alpha_split", Json{{"floor", str(d.alpha_split.floor_q)},
                             {"ceil", str(d.alpha_split.ceil_q)},
                             {"rem", str(d.alpha_split.rem)}}},
        {"k_split", Json{{"floor", str(d.k_split.floor_q)},
                         {"ceil", str(d.k_split.ceil_q)},
                         {"rem", str(d.k_split.rem)}}},
        {"components", comps},
        {"combined", str(d.combined)},
    };
}

}  // namespace

Json json_rational(const Rational& x) {
    return Json{{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}};
}

Json json_surd(const Surd& x) {
    if (x.v() == 0) return json_rational(x.u());
    return Json{{"u", json_rational(x.u())}, {"v", json_rational(x.v())}, {"m", str(x.m())}};
}

Json json_step(const TraceStep& s) {
    return Json{{"description", s.description},
                {"lhs", json_surd(s.lhs)},
                {"relation", s.relation},
                {"rhs", json_surd(s.rhs)},
                {"anchor", s.anchor}};
}

Json json_certificate(const Certificate& c) {
    Json trace = Json::array();
    for (const auto& s : c.trace) trace.push_back(json_step(s));
    Json gates = Json::array();
    for (const auto& [gate, reason] : c.gate_reasons)
        gates.push_back(Json{{"gate", gate}, {"reason", reason}});
    Json out{{"verdict", verdict_name(c.verdict)},
             {"k", str(c.k)},
             {"gate", c.gate},
             {"reason", c.reason},
             {"assumptions", c.assumptions},
             {"trace", trace}};
    out["decomposition"] = c.decomposition ? json_decomposition(*c.decomposition) : Json(nullptr);
    out["gate_reasons"] = gates;
    return out;
}

Json json_search(const SearchOutcome& o) {
    Json survivors = Json::array();
    for (const auto& s : o.survivors) {
        Json w = Json::array();
        for (const auto& m : s.witness) w.push_back(str(m));
        survivors.push_back(Json{{"kind", s.kind},
                                 {"a", str(s.a)},
                                 {"ell", str(s.ell)},
                                 {"delta", str(s.delta)},
                                 {"s", str(s.s)},
                                 {"q", str(s.q)},
                                 {"nd", str(s.nd)},
                                 {"d2", str(s.d2)},
                                 {"witness", w},
                                 {"note", s.note}});
    }
    Json pruned = Json::array();
    for (const auto& p : o.pruned)
        pruned.push_back(
            Json{{"candidate", p.candidate}, {"rule", p.rule}, {"violated", json_step(p.violated)}});
    return Json{{"window", o.window},
                {"cap", str(o.cap)},
                {"exhaustive", o.exhaustive},
                {"examined", str(o.examined)},
                {"derivation", o.derivation},
                {"survivors", survivors},
                {"pruned", pruned}};
}

Json json_seshadri(const SeshadriBound& b) {
    Json out{{"value", json_surd(b.value)},
             {"provenance", provenance_name(b.provenance)},
             {"assumptions", b.assumptions}};
    out["relaxed"] = b.relaxed ? json_surd(*b.relaxed) : Json(nullptr);
    return out;
}

Json json_pell(const PellSolution& p) {
    return Json{{"l0", str(p.l0)}, {"k0", str(p.k0)}};
}

std::string dump_json(const Json& j) { return j.dump() + "\n"; }

std::string csv_survivors(const SearchOutcome& o) {
    std::string out = "kind,a,ell,delta,s,q,nd,d2,witness,note\n";
    for (const auto& s : o.survivors) {
        std::string w;
        for (std::size_t i = 0; i < s.witness.size(); ++i) {
            if (i) w += '+';
            w += str(s.witness[i]);
        }
        out += s.kind + ',' + str(s.a) + ',' + str(s.ell) + ',' + str(s.delta) + ',' + str(s.s) +
               ',' + str(s.q) + ',' + str(s.nd) + ',' + str(s.d2) + ',' + w + ',' + s.note + '\n';
    }
    return out;
}

}  // namespace kva
