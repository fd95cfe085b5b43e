#include "moulds/ratfun.hpp"

#include <algorithm>

namespace moulds {

// Cancels shared factors between num and den and restores the zero
// normal form; every constructor and operation funnels through here.
static RatFun rf_normalize(RatFun a) {
    if (a.num.is_zero()) {
        a.den.clear();
        return a;
    }
    for (auto it = a.den.begin(); it != a.den.end();) {
        Poly f = p_from_form(a.nv, 1, it->first);
        while (it->second > 0) {
            auto q = p_divide_exact(a.num, f);
            if (!q) break;
            a.num = std::move(*q);
            --it->second;
        }
        if (it->second == 0) it = a.den.erase(it);
        else ++it;
    }
    return a;
}

RatFun rf_zero(int nv) { return RatFun{nv, p_zero(nv), {}}; }

RatFun rf_const(int nv, const Rat& c) { return RatFun{nv, p_const(nv, c), {}}; }

RatFun rf_from_poly(const Poly& p) { return RatFun{p.nv, p, {}}; }

RatFun rf_inv_raw_form(int nv, const std::vector<long>& raw) {
    return rf_div_raw_form(rf_const(nv, 1), raw);
}

// den multiset extended to cover target multiplicities, compensating num.
static Poly num_over_common(const RatFun& a, const std::map<LinForm, int>& common) {
    Poly n = a.num;
    for (const auto& [f, m] : common) {
        auto it = a.den.find(f);
        int have = it == a.den.end() ? 0 : it->second;
        Poly fp = p_from_form(a.nv, 1, f);
        for (int k = have; k < m; ++k) n = p_mul(n, fp);
    }
    return n;
}

RatFun rf_add(const RatFun& a, const RatFun& b) {
    if (a.nv != b.nv) throw std::invalid_argument("rf_add: variable count mismatch");
    std::map<LinForm, int> common = a.den;
    for (const auto& [f, m] : b.den) {
        auto& slot = common[f];
        slot = std::max(slot, m);
    }
    RatFun out{a.nv, p_add(num_over_common(a, common), num_over_common(b, common)),
               std::move(common)};
    return rf_normalize(std::move(out));
}

RatFun rf_sub(const RatFun& a, const RatFun& b) { return rf_add(a, rf_neg(b)); }

RatFun rf_neg(const RatFun& a) { return RatFun{a.nv, p_neg(a.num), a.den}; }

RatFun rf_mul(const RatFun& a, const RatFun& b) {
    if (a.nv != b.nv) throw std::invalid_argument("rf_mul: variable count mismatch");
    if (a.is_zero() || b.is_zero()) return rf_zero(a.nv);
    RatFun out{a.nv, p_mul(a.num, b.num), a.den};
    for (const auto& [f, m] : b.den) out.den[f] += m;
    return rf_normalize(std::move(out));
}

RatFun rf_scale(const RatFun& a, const Rat& c) {
    if (c == 0) return rf_zero(a.nv);
    return RatFun{a.nv, p_scale(a.num, c), a.den};
}

RatFun rf_div_raw_form(const RatFun& a, const std::vector<long>& raw) {
    auto [scale, form] = linform_normalize(raw);
    if (scale == 0) throw ZeroDenFactorError();
    RatFun out = a;
    if (out.is_zero()) return out;
    out.num = p_scale(out.num, Rat(1) / Rat(scale));
    out.den[form] += 1;
    return rf_normalize(std::move(out));
}

RatFun rf_inv(const RatFun& a) {
    if (a.is_zero()) throw std::invalid_argument("rf_inv: zero");
    Poly n = p_const(a.nv, 1);
    for (const auto& [f, m] : a.den) {
        Poly fp = p_from_form(a.nv, 1, f);
        for (int k = 0; k < m; ++k) n = p_mul(n, fp);
    }
    if (p_is_const(a.num)) {
        return rf_normalize(RatFun{a.nv, p_scale(n, 1 / p_const_value(a.num)), {}});
    }
    // Allow a numerator that is itself a single linear form.
    if (p_total_degree(a.num) == 1 && p_const_value(a.num) == 0) {
        bool linear = true;
        std::vector<long> raw(a.nv, 0);
        // num = s * integer form with s the first stored coefficient.
        Rat s = a.num.t.begin()->second;
        Poly scaled = p_scale(a.num, 1 / s);
        for (const auto& [e, c] : scaled.t) {
            int idx = -1;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] == 1) idx = (int)i;
            if (idx < 0 || c.get_den() != 1) { linear = false; break; }
            raw[idx] = c.get_num().get_si();
        }
        if (linear) {
            RatFun out = rf_div_raw_form(rf_from_poly(n), raw);
            return rf_scale(out, 1 / s);
        }
    }
    throw std::invalid_argument("rf_inv: numerator is not constant or linear");
}

bool rf_is_const(const RatFun& a) { return a.den.empty() && p_is_const(a.num); }

Rat rf_const_value(const RatFun& a) {
    if (!rf_is_const(a)) throw std::invalid_argument("rf_const_value: not constant");
    return p_const_value(a.num);
}

RatFun rf_extend(const RatFun& a, int nv) {
    if (nv < a.nv) throw std::invalid_argument("rf_extend: shrinking");
    if (nv == a.nv) return a;
    RatFun out{nv, p_zero(nv), {}};
    for (const auto& [e, c] : a.num.t) {
        std::vector<int> ee = e;
        ee.resize(nv, 0);
        out.num.t.emplace(std::move(ee), c);
    }
    out.den = a.den;  // forms carry their own width; no padding needed
    return out;
}

RatFun rf_substitute(const RatFun& a, const std::vector<std::vector<long>>& rows,
                     int target_nv) {
    if ((int)rows.size() != a.nv) throw std::invalid_argument("rf_substitute: row count");
    RatFun out{target_nv, p_substitute(a.num, rows, target_nv), {}};
    for (const auto& [f, m] : a.den) {
        std::vector<long> raw(f.c.begin(), f.c.end());
        raw.resize(a.nv, 0);
        auto img = linform_apply_rows(raw, rows);
        auto [scale, nf] = linform_normalize(img);
        if (scale == 0) throw ZeroDenFactorError();
        Rat s(scale);
        Rat inv = 1 / s;
        for (int k = 0; k < m; ++k) out.num = p_scale(out.num, inv);
        out.den[nf] += m;
    }
    return rf_normalize(std::move(out));
}

RatFun rf_divided_difference(const RatFun& a, const RatFun& b,
                             const std::vector<long>& raw, const FamilyTag& fam) {
    RatFun d = rf_div_raw_form(rf_sub(a, b), raw);
    if (fam.kind != FamilyTag::Rat && !d.den.empty()) throw DivisibilityError();
    return d;
}

RatFun rf_truncate(const RatFun& a, int deg) {
    if (!a.den.empty()) throw DivisibilityError();
    return RatFun{a.nv, p_truncate(a.num, deg), {}};
}

std::string rf_str(const RatFun& a) {
    std::string s = "(" + p_str(a.num) + ")";
    if (!a.den.empty()) {
        s += "/(";
        bool first = true;
        for (const auto& [f, m] : a.den) {
            if (!first) s += "*";
            s += "(" + linform_str(f) + ")";
            if (m > 1) s += "^" + std::to_string(m);
            first = false;
        }
        s += ")";
    }
    return s;
}

}  // namespace moulds
