#include "moulds/mould.hpp"

#include <algorithm>
#include <stdexcept>

namespace moulds {

RatFun fam_post(const FamilyTag& fam, int m, RatFun v) {
    if (fam.kind == FamilyTag::Pol && !v.den.empty())
        throw DivisibilityError();
    if (fam.kind == FamilyTag::TruncSer) {
        if (!v.den.empty()) throw DivisibilityError();
        return rf_truncate(v, fam.trunc - m);
    }
    return v;
}

Mould mould_zero(FamilyTag fam, Alphabet gam, int maxlen) {
    return Mould{fam, std::move(gam), maxlen, {}};
}

Mould mould_unit(FamilyTag fam, Alphabet gam, int maxlen) {
    Mould m = mould_zero(fam, std::move(gam), maxlen);
    mould_set(m, {}, rf_const(0, 1));
    return m;
}

void mould_set(Mould& m, const std::vector<int>& labels, RatFun v) {
    if ((int)labels.size() > m.maxlen) throw std::out_of_range("mould_set: beyond maxlen");
    if (v.nv != (int)labels.size()) throw std::invalid_argument("mould_set: nv mismatch");
    for (int s : labels)
        if (s < 0 || s >= m.gam.size()) throw std::out_of_range("mould_set: label");
    v = fam_post(m.fam, (int)labels.size(), std::move(v));
    if (v.is_zero()) m.c.erase(labels);
    else m.c[labels] = std::move(v);
}

RatFun mould_get(const Mould& m, const std::vector<int>& labels) {
    if ((int)labels.size() > m.maxlen) throw std::out_of_range("mould_get: beyond maxlen");
    auto it = m.c.find(labels);
    return it == m.c.end() ? rf_zero((int)labels.size()) : it->second;
}

RatFun mould_eval(const Mould& m, const std::vector<Letter>& w, int nv) {
    std::vector<int> labels;
    std::vector<std::vector<long>> rows;
    labels.reserve(w.size());
    rows.reserve(w.size());
    for (const auto& l : w) {
        labels.push_back(l.sig);
        rows.push_back(l.u);
    }
    RatFun comp = mould_get(m, labels);
    if (comp.is_zero()) return rf_zero(nv);
    return rf_substitute(comp, rows, nv);
}

std::vector<std::vector<int>> label_tuples(const Alphabet& gam, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 0);
    int n = gam.size();
    while (true) {
        out.push_back(cur);
        int i = len - 1;
        while (i >= 0 && cur[i] == n - 1) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

Mould extend_by_gamma(const Mould& m, const Alphabet& gam) {
    if (m.gam.size() != 1) throw std::invalid_argument("extend_by_gamma: source not trivial");
    Mould out = mould_zero(m.fam, gam, m.maxlen);
    for (const auto& [labels, v] : m.c) {
        for (const auto& lab : label_tuples(gam, (int)labels.size())) out.c[lab] = v;
    }
    return out;
}

json mould_to_json(const Mould& m) {
    json comps = json::array();
    for (const auto& [labels, v] : m.c) {
        json names = json::array();
        for (int s : labels) names.push_back(m.gam.symbols[s]);
        comps.push_back(json{{"length", labels.size()},
                             {"labels", names},
                             {"value", ratfun_to_json(v)}});
    }
    return json{{"family", family_str(m.fam)},
                {"gamma", m.gam.name},
                {"max_length", m.maxlen},
                {"components", comps}};
}

Mould mould_from_json(const json& j, bool strict) {
    FamilyTag fam = family_parse(j.at("family").get<std::string>());
    Alphabet gam = alphabet_by_name(j.at("gamma").get<std::string>());
    Mould m = mould_zero(fam, gam, j.at("max_length").get<int>());
    for (const auto& comp : j.at("components")) {
        int len = comp.at("length").get<int>();
        std::vector<int> labels;
        for (const auto& s : comp.at("labels")) {
            std::string sym = s.get<std::string>();
            auto it = std::find(gam.symbols.begin(), gam.symbols.end(), sym);
            if (it == gam.symbols.end()) throw std::invalid_argument("unknown label " + sym);
            labels.push_back((int)(it - gam.symbols.begin()));
        }
        if ((int)labels.size() != len) throw std::invalid_argument("length/labels mismatch");
        RatFun v = ratfun_from_json(comp.at("value"), len, strict);
        if (strict && m.c.count(labels)) throw std::invalid_argument("strict: duplicate component");
        RatFun prev = mould_get(m, labels);
        mould_set(m, labels, rf_add(prev, v));
    }
    return m;
}

PolyMould pm_zero(FamilyTag fam, std::vector<Alphabet> gams, std::vector<int> maxlens) {
    if (gams.size() != maxlens.size()) throw std::invalid_argument("pm_zero: arity mismatch");
    return PolyMould{fam, std::move(gams), std::move(maxlens), {}};
}

PolyMould pm_unit(FamilyTag fam, std::vector<Alphabet> gams, std::vector<int> maxlens) {
    PolyMould m = pm_zero(fam, std::move(gams), std::move(maxlens));
    pm_set(m, std::vector<std::vector<int>>(m.blocks()), rf_const(0, 1));
    return m;
}

PolyMould p4_zero(FamilyTag fam, int maxlen1, int maxlen2) {
    return pm_zero(fam, {alphabet_labels(1), alphabet_labels(2)}, {maxlen1, maxlen2});
}

int pm_shape_total(const std::vector<std::vector<int>>& labels) {
    int t = 0;
    for (const auto& b : labels) t += (int)b.size();
    return t;
}

void pm_set(PolyMould& m, const std::vector<std::vector<int>>& labels, RatFun v) {
    if ((int)labels.size() != m.blocks()) throw std::invalid_argument("pm_set: block count");
    for (int b = 0; b < m.blocks(); ++b) {
        if ((int)labels[b].size() > m.maxlens[b]) throw std::out_of_range("pm_set: beyond maxlen");
        for (int s : labels[b])
            if (s < 0 || s >= m.gams[b].size()) throw std::out_of_range("pm_set: label");
    }
    int total = pm_shape_total(labels);
    if (v.nv != total) throw std::invalid_argument("pm_set: nv mismatch");
    v = fam_post(m.fam, total, std::move(v));
    if (v.is_zero()) m.c.erase(labels);
    else m.c[labels] = std::move(v);
}

RatFun pm_get(const PolyMould& m, const std::vector<std::vector<int>>& labels) {
    auto it = m.c.find(labels);
    return it == m.c.end() ? rf_zero(pm_shape_total(labels)) : it->second;
}

std::string mould_describe(const Mould& m) {
    std::string s;
    for (const auto& [labels, v] : m.c) {
        s += "(";
        for (size_t i = 0; i < labels.size(); ++i)
            s += (i ? "," : "") + m.gam.symbols[labels[i]];
        s += ") -> " + rf_str(v) + "\n";
    }
    return s;
}

}  // namespace moulds
