#include "moulds/json_io.hpp"

namespace moulds {

json rat_to_json(const Rat& q) { return rat_str(q); }

Rat rat_from_json(const json& j) { return rat_parse(j.get<std::string>()); }

json poly_to_json(const Poly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.t) out.push_back(json::array({rat_to_json(c), e}));
    return out;
}

Poly poly_from_json(const json& j, int nv) {
    Poly p = p_zero(nv);
    for (const auto& term : j) {
        Rat c = rat_from_json(term.at(0));
        std::vector<int> e = term.at(1).get<std::vector<int>>();
        if ((int)e.size() != nv) throw std::invalid_argument("poly term arity mismatch");
        if (c == 0) continue;
        auto [it, fresh] = p.t.emplace(std::move(e), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) p.t.erase(it);
        }
    }
    return p;
}

json ratfun_to_json(const RatFun& f) {
    json den = json::array();
    for (const auto& [form, m] : f.den) den.push_back(json::array({form.c, m}));
    return json{{"num", poly_to_json(f.num)}, {"den", den}};
}

RatFun ratfun_from_json(const json& j, int nv, bool strict) {
    RatFun out = rf_from_poly(poly_from_json(j.at("num"), nv));
    for (const auto& fac : j.at("den")) {
        std::vector<long> raw = fac.at(0).get<std::vector<long>>();
        int mult = fac.at(1).get<int>();
        if (mult < 1) throw std::invalid_argument("denominator multiplicity < 1");
        auto [scale, form] = linform_normalize(raw);
        if (scale == 0) throw ZeroDenFactorError();
        if (strict && (scale != 1 || (int)raw.size() != form.width()))
            throw std::invalid_argument("strict: denominator form not normalized");
        for (int k = 0; k < mult; ++k) out = rf_div_raw_form(out, raw);
    }
    if (strict) {
        // Canonical input must round-trip without change.
        json back = ratfun_to_json(out);
        if (back.at("num") != j.at("num") || back.at("den") != j.at("den"))
            throw std::invalid_argument("strict: rational function not in canonical form");
    }
    return out;
}

}  // namespace moulds
