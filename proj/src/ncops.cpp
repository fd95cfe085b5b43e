#include "moulds/ncops.hpp"

#include <stdexcept>

namespace moulds {

namespace {

void require_abelian(const Alphabet& gam, const char* who) {
    if (!gam.has_group)
        throw std::invalid_argument(std::string(who) + ": alphabet has no group law");
    for (int a = 0; a < gam.size(); ++a)
        for (int b = a + 1; b < gam.size(); ++b)
            if (gam.mul(a, b) != gam.mul(b, a))
                throw std::invalid_argument(std::string(who) + ": group law is not abelian");
}

void require_two_letters(const Alphabet& gam, const char* who) {
    if (gam.size() != 1)
        throw std::invalid_argument(std::string(who) +
                                    ": needs the two-letter series alphabet");
}

// Reads a word as (k0; sig_1, k_1; ...; sig_r, k_r): the runs of the
// distinguished letter around the tagged ones.
struct GapForm {
    int k0 = 0;
    std::vector<int> sigs;
    std::vector<int> ks;
};

GapForm gap_form(const NCWord& w) {
    GapForm g;
    for (int code : w) {
        if (code == 0) {
            if (g.sigs.empty())
                ++g.k0;
            else
                ++g.ks.back();
        } else {
            g.sigs.push_back(code - 1);
            g.ks.push_back(0);
        }
    }
    return g;
}

// Product of (x_1+...+x_i)^{k_i} over r variables.
Poly prefix_power(int r, const std::vector<int>& ks) {
    Poly p = p_const(r, 1);
    std::vector<long> raw;
    for (int i = 0; i < r; ++i) {
        raw.push_back(1);
        Poly base = p_from_raw_form(r, raw);
        for (int e = 0; e < ks[i]; ++e) p = p_mul(p, base);
    }
    return p;
}

}  // namespace

Mould ma_map(const NCSeries& h) {
    if (!is_dagger(h))
        throw std::invalid_argument("ma_map: input is not in the derivation kernel");
    int n = h.max_degree;
    Mould out = mould_zero(FamilyTag::trunc_ser(n), h.gam, n);
    std::map<std::vector<int>, RatFun> acc;
    for (const auto& [w, v] : h.c) {
        GapForm g = gap_form(w);
        if (g.k0 > 0) continue;
        int r = static_cast<int>(g.sigs.size());
        RatFun term = rf_scale(rf_from_poly(prefix_power(r, g.ks)), v);
        auto it = acc.find(g.sigs);
        if (it == acc.end())
            acc.emplace(g.sigs, term);
        else
            it->second = rf_add(it->second, term);
    }
    for (const auto& [labels, v] : acc) mould_set(out, labels, v);
    return out;
}

NCSeries ma_inverse(const Mould& m) {
    if (m.fam.kind != FamilyTag::TruncSer)
        throw std::invalid_argument("ma_inverse: needs a TruncSer mould");
    int n = std::min(m.fam.trunc, m.maxlen);
    NCSeries h = nc_zero(m.gam, n);
    for (const auto& [labels, v] : m.c) {
        int r = static_cast<int>(labels.size());
        if (r > n) continue;
        if (!v.den.empty())
            throw std::invalid_argument("ma_inverse: component is not polynomial");
        if (r == 0) {
            nc_set(h, {}, p_const_value(v.num));
            continue;
        }
        // expand in difference variables z_0..z_r, x_i := z_i - z_{i-1}
        std::vector<std::vector<long>> rows;
        for (int i = 1; i <= r; ++i) {
            std::vector<long> row(r + 1, 0);
            row[i - 1] = -1;
            row[i] = 1;
            rows.push_back(row);
        }
        Poly vimo = p_substitute(v.num, rows, r + 1);
        for (const auto& [mono, coef] : vimo.t) {
            NCWord w;
            for (int z = 0; z <= r; ++z) {
                if (z > 0) w.push_back(z);  // placeholder, rewritten below
                for (int e = 0; e < mono[z]; ++e) w.push_back(0);
            }
            // rewrite tagged positions with the component labels
            int at = 0;
            for (auto& code : w)
                if (code != 0) code = labels[at++] + 1;
            if (static_cast<int>(w.size()) > n)
                throw std::invalid_argument("ma_inverse: degree plus length exceeds bound");
            nc_set(h, w, nc_get(h, w) + coef);
        }
    }
    return h;
}

NCSeries nc_dagger_extend(const NCSeries& h) {
    int n = h.max_degree;
    Mould m = mould_zero(FamilyTag::trunc_ser(n), h.gam, n);
    std::map<std::vector<int>, RatFun> acc;
    for (const auto& [w, v] : h.c) {
        GapForm g = gap_form(w);
        if (g.k0 > 0) continue;
        int r = static_cast<int>(g.sigs.size());
        RatFun term = rf_scale(rf_from_poly(prefix_power(r, g.ks)), v);
        auto it = acc.find(g.sigs);
        if (it == acc.end())
            acc.emplace(g.sigs, term);
        else
            it->second = rf_add(it->second, term);
    }
    for (const auto& [labels, v] : acc) mould_set(m, labels, v);
    return ma_inverse(m);
}

DiMould dima_map(const TensorNC& t) {
    int n = t.max_degree;
    DiMould out = pm_zero(FamilyTag::trunc_ser(n), {t.gam, t.gam}, {n, n});
    std::map<std::vector<std::vector<int>>, RatFun> acc;
    for (const auto& [key, v] : t.c) {
        GapForm g1 = gap_form(key.first);
        GapForm g2 = gap_form(key.second);
        if (g1.k0 > 0 || g2.k0 > 0) continue;
        int r1 = static_cast<int>(g1.sigs.size());
        int r2 = static_cast<int>(g2.sigs.size());
        int nv = r1 + r2;
        RatFun p1 = rf_extend(rf_from_poly(prefix_power(r1, g1.ks)), nv);
        RatFun p2 = rf_place(rf_from_poly(prefix_power(r2, g2.ks)), r1, nv);
        RatFun term = rf_scale(rf_mul(p1, p2), v);
        std::vector<std::vector<int>> labels{g1.sigs, g2.sigs};
        auto it = acc.find(labels);
        if (it == acc.end())
            acc.emplace(labels, term);
        else
            it->second = rf_add(it->second, term);
    }
    for (const auto& [labels, v] : acc) pm_set(out, labels, v);
    return out;
}

NCSeries t_sigma_act(const NCSeries& psi, int sig) {
    require_abelian(psi.gam, "t_sigma_act");
    if (sig < 0 || sig >= psi.gam.size())
        throw std::invalid_argument("t_sigma_act: label out of range");
    NCSeries out = nc_zero(psi.gam, psi.max_degree);
    for (const auto& [w, v] : psi.c) {
        NCWord r = w;
        for (auto& code : r)
            if (code != 0) code = psi.gam.mul(sig, code - 1) + 1;
        nc_set(out, r, nc_get(out, r) + v);
    }
    return out;
}

NCSeries d_psi(const NCSeries& psi, const NCSeries& phi) {
    if (psi.gam != phi.gam) throw std::invalid_argument("d_psi: alphabet mismatch");
    require_abelian(psi.gam, "d_psi");
    int n = std::min(psi.max_degree, phi.max_degree);
    NCSeries out = nc_zero(psi.gam, n);
    std::vector<NCSeries> bracket;
    for (int s = 0; s < psi.gam.size(); ++s) {
        NCSeries ts = t_sigma_act(psi, s);
        NCSeries fs = nc_letter(psi.gam, psi.max_degree, s + 1);
        bracket.push_back(nc_commutator(ts, fs));
    }
    for (const auto& [w, v] : phi.c)
        for (size_t i = 0; i < w.size(); ++i) {
            if (w[i] == 0) continue;
            for (const auto& [bw, bv] : bracket[w[i] - 1].c) {
                if (static_cast<int>(w.size() - 1 + bw.size()) > n) continue;
                NCWord r(w.begin(), w.begin() + i);
                r.insert(r.end(), bw.begin(), bw.end());
                r.insert(r.end(), w.begin() + i + 1, w.end());
                nc_set(out, r, nc_get(out, r) + v * bv);
            }
        }
    return out;
}

NCSeries s_phi(const NCSeries& arg, const NCSeries& sub) {
    return nc_add(nc_mul(arg, sub), d_psi(sub, arg));
}

NCSeries ihara_bracket(const NCSeries& psi, const NCSeries& phi) {
    return nc_sub(s_phi(phi, psi), s_phi(psi, phi));
}

NCSeries exp_circledast(const NCSeries& phi) {
    if (nc_get(phi, {}) != 0)
        throw std::invalid_argument("exp_circledast: nonzero constant term");
    if (!is_dagger(phi))
        throw std::invalid_argument("exp_circledast: input is not in the derivation kernel");
    NCSeries out = nc_one(phi.gam, phi.max_degree);
    NCSeries cur = out;
    Rat fact = 1;
    for (int k = 1; k <= phi.max_degree; ++k) {
        cur = s_phi(cur, phi);
        fact *= k;
        out = nc_add(out, nc_scale(cur, Rat(1) / fact));
    }
    return out;
}

NCSeries kappa(const NCSeries& psi, const NCSeries& phi) {
    if (psi.gam != phi.gam) throw std::invalid_argument("kappa: alphabet mismatch");
    require_abelian(psi.gam, "kappa");
    if (nc_get(psi, {}) != 1)
        throw std::invalid_argument("kappa: constant term must be 1");
    int n = std::min(psi.max_degree, phi.max_degree);
    std::vector<NCSeries> img;
    img.push_back(nc_letter(psi.gam, n, 0));
    for (int s = 0; s < psi.gam.size(); ++s) {
        NCSeries ts = t_sigma_act(psi, s);
        if (ts.max_degree > n) {
            NCSeries cut = nc_zero(psi.gam, n);
            for (const auto& [w, v] : ts.c)
                if (static_cast<int>(w.size()) <= n) nc_set(cut, w, v);
            ts = cut;
        }
        NCSeries fs = nc_letter(psi.gam, n, s + 1);
        img.push_back(nc_mul(nc_mul(ts, fs), nc_inverse(ts)));
    }
    // walk the words in order, sharing partial products along common prefixes
    NCSeries out = nc_zero(psi.gam, n);
    std::vector<NCSeries> stack;  // stack[i] = image of the first i+1 letters
    NCWord prev;
    for (const auto& [w, v] : phi.c) {
        if (static_cast<int>(w.size()) > n) continue;
        size_t common = 0;
        while (common < prev.size() && common < w.size() && prev[common] == w[common]) ++common;
        stack.resize(common);
        for (size_t i = common; i < w.size(); ++i) {
            const NCSeries& step = img[w[i]];
            stack.push_back(i == 0 ? step : nc_mul(stack[i - 1], step));
        }
        out = nc_add(out, nc_scale(w.empty() ? nc_one(psi.gam, n) : stack.back(), v));
        prev = w;
    }
    return out;
}

NCSeries circledast(const NCSeries& psi, const NCSeries& phi) {
    return nc_mul(kappa(psi, phi), psi);
}

NCSeries nc_iota0(const NCSeries& phi) {
    NCSeries out = nc_zero(phi.gam, phi.max_degree);
    for (const auto& [w, v] : phi.c) {
        int zeros = 0;
        for (int code : w)
            if (code == 0) ++zeros;
        out.c[w] = (zeros % 2 ? -v : v);
    }
    return out;
}

int y_weight(const std::vector<int>& yw) {
    int t = 0;
    for (int k : yw) t += k;
    return t;
}

YSeries y_zero(int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("y_zero: negative weight bound");
    return YSeries{max_weight, {}};
}

YSeries y_one(int max_weight) {
    YSeries s = y_zero(max_weight);
    s.c[{}] = 1;
    return s;
}

void y_set(YSeries& s, const std::vector<int>& yw, const Rat& v) {
    for (int k : yw)
        if (k < 1) throw std::invalid_argument("y_set: letter index below 1");
    if (y_weight(yw) > s.max_weight)
        throw std::invalid_argument("y_set: weight exceeds bound");
    if (v == 0)
        s.c.erase(yw);
    else
        s.c[yw] = v;
}

Rat y_get(const YSeries& s, const std::vector<int>& yw) {
    auto it = s.c.find(yw);
    return it == s.c.end() ? Rat(0) : it->second;
}

YSeries y_add(const YSeries& a, const YSeries& b) {
    YSeries out = y_zero(std::min(a.max_weight, b.max_weight));
    for (const auto& [w, v] : a.c)
        if (y_weight(w) <= out.max_weight) y_set(out, w, v);
    for (const auto& [w, v] : b.c)
        if (y_weight(w) <= out.max_weight) y_set(out, w, y_get(out, w) + v);
    return out;
}

YSeries y_sub(const YSeries& a, const YSeries& b) { return y_add(a, y_scale(b, -1)); }

YSeries y_scale(const YSeries& a, const Rat& v) {
    YSeries out = y_zero(a.max_weight);
    if (v == 0) return out;
    for (const auto& [w, q] : a.c) out.c[w] = q * v;
    return out;
}

YSeries y_mul(const YSeries& a, const YSeries& b) {
    YSeries out = y_zero(std::min(a.max_weight, b.max_weight));
    for (const auto& [wa, va] : a.c)
        for (const auto& [wb, vb] : b.c) {
            if (y_weight(wa) + y_weight(wb) > out.max_weight) continue;
            std::vector<int> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            y_set(out, w, y_get(out, w) + va * vb);
        }
    return out;
}

YSeries y_exp(const YSeries& a) {
    if (y_get(a, {}) != 0) throw std::invalid_argument("y_exp: nonzero constant term");
    YSeries out = y_one(a.max_weight);
    YSeries pw = out;
    Rat fact = 1;
    for (int k = 1; k <= a.max_weight; ++k) {
        pw = y_mul(pw, a);
        fact *= k;
        out = y_add(out, y_scale(pw, Rat(1) / fact));
    }
    return out;
}

TensorY ty_zero(int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("ty_zero: negative weight bound");
    return TensorY{max_weight, {}};
}

void ty_set(TensorY& t, const std::vector<int>& w1, const std::vector<int>& w2, const Rat& v) {
    if (y_weight(w1) + y_weight(w2) > t.max_weight)
        throw std::invalid_argument("ty_set: weight exceeds bound");
    auto key = std::make_pair(w1, w2);
    if (v == 0)
        t.c.erase(key);
    else
        t.c[key] = v;
}

Rat ty_get(const TensorY& t, const std::vector<int>& w1, const std::vector<int>& w2) {
    auto it = t.c.find(std::make_pair(w1, w2));
    return it == t.c.end() ? Rat(0) : it->second;
}

TensorY ty_add(const TensorY& a, const TensorY& b) {
    TensorY out = ty_zero(std::min(a.max_weight, b.max_weight));
    for (const auto& [k, v] : a.c)
        if (y_weight(k.first) + y_weight(k.second) <= out.max_weight)
            ty_set(out, k.first, k.second, v);
    for (const auto& [k, v] : b.c)
        if (y_weight(k.first) + y_weight(k.second) <= out.max_weight)
            ty_set(out, k.first, k.second, ty_get(out, k.first, k.second) + v);
    return out;
}

TensorY ty_scale(const TensorY& a, const Rat& v) {
    TensorY out = ty_zero(a.max_weight);
    if (v == 0) return out;
    for (const auto& [k, q] : a.c) out.c[k] = q * v;
    return out;
}

TensorY ty_mul(const TensorY& a, const TensorY& b) {
    TensorY out = ty_zero(std::min(a.max_weight, b.max_weight));
    for (const auto& [ka, va] : a.c)
        for (const auto& [kb, vb] : b.c) {
            int total = y_weight(ka.first) + y_weight(ka.second) + y_weight(kb.first) +
                        y_weight(kb.second);
            if (total > out.max_weight) continue;
            std::vector<int> w1 = ka.first;
            w1.insert(w1.end(), kb.first.begin(), kb.first.end());
            std::vector<int> w2 = ka.second;
            w2.insert(w2.end(), kb.second.begin(), kb.second.end());
            ty_set(out, w1, w2, ty_get(out, w1, w2) + va * vb);
        }
    return out;
}

TensorY ty_tensor(const YSeries& a, const YSeries& b) {
    TensorY out = ty_zero(std::min(a.max_weight, b.max_weight));
    for (const auto& [wa, va] : a.c)
        for (const auto& [wb, vb] : b.c) {
            if (y_weight(wa) + y_weight(wb) > out.max_weight) continue;
            ty_set(out, wa, wb, ty_get(out, wa, wb) + va * vb);
        }
    return out;
}

YSeries pi_Y(const NCSeries& phi) {
    require_two_letters(phi.gam, "pi_Y");
    YSeries out = y_zero(phi.max_degree);
    for (const auto& [w, v] : phi.c) {
        if (!w.empty() && w[0] == 0) continue;
        GapForm g = gap_form(w);
        std::vector<int> yw;
        for (int k : g.ks) yw.push_back(k + 1);
        y_set(out, yw, y_get(out, yw) + v);
    }
    return out;
}

YSeries phi_corr(const NCSeries& phi) {
    require_two_letters(phi.gam, "phi_corr");
    int n = phi.max_degree;
    YSeries e = y_zero(n);
    for (int k = 2; k <= n; ++k) {
        NCWord w{1};
        for (int i = 1; i < k; ++i) w.push_back(0);
        Rat coef = nc_get(phi, w) / k;
        if (coef == 0) continue;
        y_set(e, std::vector<int>(k, 1), coef);
    }
    return y_exp(e);
}

YSeries phi_star(const NCSeries& phi) { return y_mul(pi_Y(phi), phi_corr(phi)); }

TensorY delta_star(const YSeries& s) {
    TensorY out = ty_zero(s.max_weight);
    for (const auto& [yw, v] : s.c) {
        TensorY term = ty_zero(s.max_weight);
        term.c[{{}, {}}] = 1;
        for (int k : yw) {
            TensorY letter = ty_zero(s.max_weight);
            if (k <= s.max_weight) {
                letter.c[{{k}, {}}] = 1;
                letter.c[{{}, {k}}] = 1;
                for (int i = 1; i < k; ++i) letter.c[{{i}, {k - i}}] = 1;
            }
            term = ty_mul(term, letter);
        }
        out = ty_add(out, ty_scale(term, v));
    }
    return out;
}

Mould mi_map(const NCSeries& phi) {
    require_two_letters(phi.gam, "mi_map");
    if (!is_dagger(phi))
        throw std::invalid_argument("mi_map: input is not in the derivation kernel");
    int n = phi.max_degree;
    Mould out = mould_zero(FamilyTag::trunc_ser(n), phi.gam, n);
    std::map<std::vector<int>, RatFun> acc;
    for (const auto& [w, v] : phi.c) {
        GapForm g = gap_form(w);
        if (g.k0 > 0) continue;
        int r = static_cast<int>(g.sigs.size());
        // z_i = x_{r+1-i}: the i-th gap exponent lands on the reversed slot
        std::vector<int> mono(r, 0);
        for (int i = 1; i <= r; ++i) mono[r - i] = g.ks[i - 1];
        Poly p{r, {{mono, v}}};
        RatFun term = rf_from_poly(p);
        auto it = acc.find(g.sigs);
        if (it == acc.end())
            acc.emplace(g.sigs, term);
        else
            it->second = rf_add(it->second, term);
    }
    for (const auto& [labels, v] : acc) mould_set(out, labels, v);
    return out;
}

Mould mi_bar_map(const YSeries& s) {
    int n = s.max_weight;
    Mould out = mould_zero(FamilyTag::trunc_ser(n), alphabet_zn(1), n);
    std::map<std::vector<int>, RatFun> acc;
    for (const auto& [yw, v] : s.c) {
        int r = static_cast<int>(yw.size());
        std::vector<int> mono(r, 0);
        for (int j = 1; j <= r; ++j) mono[j - 1] = yw[r - j] - 1;
        Poly p{r, {{mono, v}}};
        std::vector<int> labels(r, 0);
        auto it = acc.find(labels);
        if (it == acc.end())
            acc.emplace(labels, rf_from_poly(p));
        else
            it->second = rf_add(it->second, rf_from_poly(p));
    }
    for (const auto& [labels, v] : acc) mould_set(out, labels, v);
    return out;
}

DiMould dimi_bar_map(const TensorY& t) {
    int n = t.max_weight;
    Alphabet one = alphabet_zn(1);
    DiMould out = pm_zero(FamilyTag::trunc_ser(n), {one, one}, {n, n});
    std::map<std::vector<std::vector<int>>, RatFun> acc;
    for (const auto& [key, v] : t.c) {
        int r1 = static_cast<int>(key.first.size());
        int r2 = static_cast<int>(key.second.size());
        int nv = r1 + r2;
        std::vector<int> mono(nv, 0);
        for (int j = 1; j <= r1; ++j) mono[j - 1] = key.first[r1 - j] - 1;
        for (int j = 1; j <= r2; ++j) mono[r1 + j - 1] = key.second[r2 - j] - 1;
        Poly p{nv, {{mono, v}}};
        std::vector<std::vector<int>> labels{std::vector<int>(r1, 0), std::vector<int>(r2, 0)};
        auto it = acc.find(labels);
        if (it == acc.end())
            acc.emplace(labels, rf_from_poly(p));
        else
            it->second = rf_add(it->second, rf_from_poly(p));
    }
    for (const auto& [labels, v] : acc) pm_set(out, labels, v);
    return out;
}

Mould mini_mould(const NCSeries& phi, FamilyTag fam, int maxlen) {
    require_two_letters(phi.gam, "mini_mould");
    // one-variable exp of sum -zeta(k)/k t^k, zeta(k) read off phi.
    // The sign makes the length-r component match the Y_1^r coefficient of the
    // stuffle correction series, so mi_bar carries that series onto this mould.
    std::vector<Rat> e(maxlen + 1, 0);
    for (int k = 2; k <= maxlen; ++k) {
        NCWord w{1};
        for (int i = 1; i < k; ++i) w.push_back(0);
        e[k] = nc_get(phi, w) / k;
    }
    std::vector<Rat> mono(maxlen + 1, 0);
    mono[0] = 1;
    std::vector<Rat> pw = mono;
    Rat fact = 1;
    for (int j = 1; j <= maxlen; ++j) {
        std::vector<Rat> next(maxlen + 1, 0);
        for (int d1 = 0; d1 <= maxlen; ++d1) {
            if (pw[d1] == 0) continue;
            for (int d2 = 2; d1 + d2 <= maxlen; ++d2) next[d1 + d2] += pw[d1] * e[d2];
        }
        pw = next;
        fact *= j;
        for (int d = 0; d <= maxlen; ++d) mono[d] += pw[d] / fact;
    }
    Mould out = mould_zero(fam, phi.gam, maxlen);
    mould_set(out, {}, rf_const(0, 1));
    for (int m = 1; m <= maxlen; ++m)
        mould_set(out, std::vector<int>(m, 0), rf_const(m, mono[m]));
    return out;
}

bool is_dmr(const NCSeries& phi) {
    require_two_letters(phi.gam, "is_dmr");
    if (nc_get(phi, {}) != 1) return false;
    if (!is_group_like(phi)) return false;
    if (nc_get(phi, {0}) != 0 || nc_get(phi, {1}) != 0) return false;
    YSeries ps = phi_star(phi);
    return delta_star(ps) == ty_tensor(ps, ps);
}

bool is_dmr0(const NCSeries& phi) { return is_dmr(phi) && nc_get(phi, {1, 0}) == 0; }

}  // namespace moulds
