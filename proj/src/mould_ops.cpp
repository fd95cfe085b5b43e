#include "moulds/mould_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace moulds {

namespace {

void require_compatible(const Mould& a, const Mould& b, const char* who) {
    if (a.gam != b.gam || a.fam != b.fam)
        throw std::invalid_argument(std::string(who) + ": incompatible moulds");
}

std::vector<long> unit_row(int pos, int nv) {
    std::vector<long> r(nv, 0);
    r[pos] = 1;
    return r;
}

// Accumulation buffer flushed through mould_set so the family policy runs
// once per component.
struct Acc {
    std::map<std::vector<int>, RatFun> m;
    void add(const std::vector<int>& key, const RatFun& v) {
        auto it = m.find(key);
        if (it == m.end()) m.emplace(key, v);
        else it->second = rf_add(it->second, v);
    }
    void flush(Mould& out) {
        for (auto& [k, v] : m) mould_set(out, k, std::move(v));
    }
};

struct PmAcc {
    std::map<std::vector<std::vector<int>>, RatFun> m;
    void add(const std::vector<std::vector<int>>& key, const RatFun& v) {
        auto it = m.find(key);
        if (it == m.end()) m.emplace(key, v);
        else it->second = rf_add(it->second, v);
    }
    void flush(PolyMould& out) {
        for (auto& [k, v] : m) pm_set(out, k, std::move(v));
    }
};

}  // namespace

RatFun rf_place(const RatFun& v, int offset, int nv) {
    if (offset == 0) return rf_extend(v, nv);
    std::vector<std::vector<long>> rows;
    rows.reserve(v.nv);
    for (int j = 0; j < v.nv; ++j) rows.push_back(unit_row(offset + j, nv));
    return rf_substitute(v, rows, nv);
}

Mould mould_add(const Mould& a, const Mould& b) {
    require_compatible(a, b, "mould_add");
    Mould out = mould_zero(a.fam, a.gam, std::min(a.maxlen, b.maxlen));
    Acc acc;
    for (const auto& [k, v] : a.c)
        if ((int)k.size() <= out.maxlen) acc.add(k, v);
    for (const auto& [k, v] : b.c)
        if ((int)k.size() <= out.maxlen) acc.add(k, v);
    acc.flush(out);
    return out;
}

Mould mould_sub(const Mould& a, const Mould& b) { return mould_add(a, mould_neg(b)); }

Mould mould_neg(const Mould& a) { return mould_scale(a, -1); }

Mould mould_scale(const Mould& a, const Rat& c) {
    Mould out = mould_zero(a.fam, a.gam, a.maxlen);
    if (c == 0) return out;
    for (const auto& [k, v] : a.c) out.c.emplace(k, rf_scale(v, c));
    return out;
}

Mould mould_mul(const Mould& a, const Mould& b) {
    require_compatible(a, b, "mould_mul");
    Mould out = mould_zero(a.fam, a.gam, std::min(a.maxlen, b.maxlen));
    Acc acc;
    for (const auto& [ka, va] : a.c) {
        for (const auto& [kb, vb] : b.c) {
            int i = (int)ka.size(), m = i + (int)kb.size();
            if (m > out.maxlen) continue;
            std::vector<int> key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            acc.add(key, rf_mul(rf_extend(va, m), rf_place(vb, i, m)));
        }
    }
    acc.flush(out);
    return out;
}

Mould mould_inv_mul(const Mould& a) {
    RatFun e = mould_get(a, {});
    if (!rf_is_const(e) || rf_const_value(e) == 0)
        throw std::invalid_argument("mould_inv_mul: empty component not an invertible constant");
    Rat c0inv = 1 / rf_const_value(e);
    Mould out = mould_zero(a.fam, a.gam, a.maxlen);
    mould_set(out, {}, rf_const(0, c0inv));
    for (int m = 1; m <= a.maxlen; ++m) {
        for (const auto& key : label_tuples(a.gam, m)) {
            RatFun sum = rf_zero(m);
            for (int i = 1; i <= m; ++i) {
                std::vector<int> ka(key.begin(), key.begin() + i);
                RatFun va = mould_get(a, ka);
                if (va.is_zero()) continue;
                std::vector<int> kb(key.begin() + i, key.end());
                RatFun vb = mould_get(out, kb);
                if (vb.is_zero()) continue;
                sum = rf_add(sum, rf_mul(rf_extend(va, m), rf_place(vb, i, m)));
            }
            mould_set(out, key, rf_scale(sum, -c0inv));
        }
    }
    return out;
}

Mould mould_swap(const Mould& a) {
    bool trivial = a.gam.size() == 1;
    if (!trivial && !a.gam.has_group)
        throw std::invalid_argument("mould_swap: needs a group alphabet");
    Mould out = mould_zero(a.fam, a.gam, a.maxlen);
    Acc acc;
    for (const auto& [in, val] : a.c) {
        int m = (int)in.size();
        if (m == 0) {
            acc.add(in, val);
            continue;
        }
        std::vector<int> sig(m);
        if (trivial) {
            sig = in;
        } else {
            sig[0] = in[m - 1];
            for (int k = 2; k <= m; ++k)
                sig[k - 1] = a.gam.mul(a.gam.invert(in[m + 1 - k]), in[m - k]);
        }
        std::vector<std::vector<long>> rows(m);
        rows[0] = unit_row(m - 1, m);
        for (int i = 2; i <= m; ++i) {
            std::vector<long> r(m, 0);
            r[m - i] = 1;
            r[m + 1 - i] = -1;
            rows[i - 1] = std::move(r);
        }
        acc.add(sig, rf_substitute(val, rows, m));
    }
    acc.flush(out);
    return out;
}

Mould mould_swap_inv(const Mould& a) {
    bool trivial = a.gam.size() == 1;
    if (!trivial && !a.gam.has_group)
        throw std::invalid_argument("mould_swap_inv: needs a group alphabet");
    Mould out = mould_zero(a.fam, a.gam, a.maxlen);
    Acc acc;
    for (const auto& [in, val] : a.c) {
        int m = (int)in.size();
        if (m == 0) {
            acc.add(in, val);
            continue;
        }
        std::vector<int> sig(m);
        if (trivial) {
            sig = in;
        } else {
            // prefix products t_1...t_k, read off in reverse
            std::vector<int> pre(m);
            pre[0] = in[0];
            for (int k = 1; k < m; ++k) pre[k] = a.gam.mul(pre[k - 1], in[k]);
            for (int i = 1; i <= m; ++i) sig[i - 1] = pre[m - i];
        }
        std::vector<std::vector<long>> rows(m);
        for (int j = 1; j <= m; ++j) {
            std::vector<long> r(m, 0);
            for (int t = 0; t <= m - j; ++t) r[t] = 1;
            rows[j - 1] = std::move(r);
        }
        acc.add(sig, rf_substitute(val, rows, m));
    }
    acc.flush(out);
    return out;
}

Mould mould_pari(const Mould& a) {
    Mould out = mould_zero(a.fam, a.gam, a.maxlen);
    for (const auto& [k, v] : a.c)
        out.c.emplace(k, (k.size() % 2) ? rf_neg(v) : v);
    return out;
}

Mould mould_anti(const Mould& a) {
    Mould out = mould_zero(a.fam, a.gam, a.maxlen);
    Acc acc;
    for (const auto& [in, val] : a.c) {
        int m = (int)in.size();
        std::vector<int> key(in.rbegin(), in.rend());
        std::vector<std::vector<long>> rows;
        rows.reserve(m);
        for (int i = 1; i <= m; ++i) rows.push_back(unit_row(m - i, m));
        acc.add(key, rf_substitute(val, rows, m));
    }
    acc.flush(out);
    return out;
}

Mould mould_minus(const Mould& a) {
    Mould out = mould_zero(a.fam, a.gam, a.maxlen);
    for (const auto& [in, val] : a.c) {
        int m = (int)in.size();
        std::vector<std::vector<long>> rows;
        rows.reserve(m);
        for (int i = 0; i < m; ++i) {
            std::vector<long> r(m, 0);
            r[i] = -1;
            rows.push_back(std::move(r));
        }
        out.c.emplace(in, rf_substitute(val, rows, m));
    }
    return out;
}

namespace {

void require_pm_compatible(const PolyMould& a, const PolyMould& b, const char* who) {
    bool ok = a.fam == b.fam && a.gams.size() == b.gams.size();
    if (ok)
        for (size_t i = 0; i < a.gams.size(); ++i)
            if (a.gams[i] != b.gams[i]) ok = false;
    if (!ok) throw std::invalid_argument(std::string(who) + ": incompatible polymoulds");
}

std::vector<int> pm_min_lens(const PolyMould& a, const PolyMould& b) {
    std::vector<int> lens(a.maxlens.size());
    for (size_t i = 0; i < lens.size(); ++i) lens[i] = std::min(a.maxlens[i], b.maxlens[i]);
    return lens;
}

bool pm_key_fits(const std::vector<std::vector<int>>& key, const std::vector<int>& lens) {
    for (size_t b = 0; b < key.size(); ++b)
        if ((int)key[b].size() > lens[b]) return false;
    return true;
}

}  // namespace

PolyMould pm_add(const PolyMould& a, const PolyMould& b) {
    require_pm_compatible(a, b, "pm_add");
    PolyMould out = pm_zero(a.fam, a.gams, pm_min_lens(a, b));
    PmAcc acc;
    for (const auto& [k, v] : a.c)
        if (pm_key_fits(k, out.maxlens)) acc.add(k, v);
    for (const auto& [k, v] : b.c)
        if (pm_key_fits(k, out.maxlens)) acc.add(k, v);
    acc.flush(out);
    return out;
}

PolyMould pm_sub(const PolyMould& a, const PolyMould& b) { return pm_add(a, pm_neg(b)); }

PolyMould pm_neg(const PolyMould& a) { return pm_scale(a, -1); }

PolyMould pm_scale(const PolyMould& a, const Rat& c) {
    PolyMould out = pm_zero(a.fam, a.gams, a.maxlens);
    if (c == 0) return out;
    for (const auto& [k, v] : a.c) out.c.emplace(k, rf_scale(v, c));
    return out;
}

PolyMould pm_mul(const PolyMould& a, const PolyMould& b) {
    require_pm_compatible(a, b, "pm_mul");
    PolyMould out = pm_zero(a.fam, a.gams, pm_min_lens(a, b));
    int nb = out.blocks();
    PmAcc acc;
    for (const auto& [ka, va] : a.c) {
        for (const auto& [kb, vb] : b.c) {
            std::vector<std::vector<int>> key(nb);
            bool fits = true;
            for (int bl = 0; bl < nb && fits; ++bl) {
                key[bl] = ka[bl];
                key[bl].insert(key[bl].end(), kb[bl].begin(), kb[bl].end());
                fits = (int)key[bl].size() <= out.maxlens[bl];
            }
            if (!fits) continue;
            int nv = pm_shape_total(key);
            std::vector<std::vector<long>> rows_a, rows_b;
            int off = 0;
            for (int bl = 0; bl < nb; ++bl) {
                for (size_t j = 0; j < ka[bl].size(); ++j)
                    rows_a.push_back(unit_row(off + (int)j, nv));
                for (size_t j = 0; j < kb[bl].size(); ++j)
                    rows_b.push_back(unit_row(off + (int)ka[bl].size() + (int)j, nv));
                off += (int)key[bl].size();
            }
            acc.add(key, rf_mul(rf_substitute(va, rows_a, nv), rf_substitute(vb, rows_b, nv)));
        }
    }
    acc.flush(out);
    return out;
}

PolyMould pm_minus(const PolyMould& a) {
    PolyMould out = pm_zero(a.fam, a.gams, a.maxlens);
    for (const auto& [k, v] : a.c) {
        int nv = pm_shape_total(k);
        std::vector<std::vector<long>> rows;
        rows.reserve(nv);
        for (int i = 0; i < nv; ++i) {
            std::vector<long> r(nv, 0);
            r[i] = -1;
            rows.push_back(std::move(r));
        }
        out.c.emplace(k, rf_substitute(v, rows, nv));
    }
    return out;
}

PolyMould poly_tensor(const std::vector<Mould>& ms) {
    if (ms.empty()) throw std::invalid_argument("poly_tensor: no factors");
    std::vector<Alphabet> gams;
    std::vector<int> lens;
    for (const auto& m : ms) {
        if (m.fam != ms[0].fam) throw std::invalid_argument("poly_tensor: family mismatch");
        gams.push_back(m.gam);
        lens.push_back(m.maxlen);
    }
    PolyMould out = pm_zero(ms[0].fam, std::move(gams), std::move(lens));
    std::vector<std::vector<int>> key(ms.size());
    PmAcc acc;
    auto rec = [&](auto&& self, size_t b, const RatFun& sofar) -> void {
        if (b == ms.size()) {
            acc.add(key, sofar);
            return;
        }
        for (const auto& [k, v] : ms[b].c) {
            key[b] = k;
            int nv = sofar.nv + (int)k.size();
            self(self, b + 1, rf_mul(rf_extend(sofar, nv), rf_place(v, sofar.nv, nv)));
        }
    };
    rec(rec, 0, rf_const(0, 1));
    acc.flush(out);
    return out;
}

PolyMould tensor(const Mould& a, const Mould& b) { return poly_tensor({a, b}); }

namespace {

// Value-level interleaving sum: walks both words, optionally merging heads
// with a label product and a divided difference.  Equals the mould paired
// against the (quasi-)shuffle of the two words, without ever expanding the
// word combination explicitly.
struct ShEval {
    const Mould& m;
    int nv;
    bool merge;
    std::vector<Letter> prefix;

    RatFun run(const std::vector<Letter>& w1, size_t i, const std::vector<Letter>& w2,
               size_t j) {
        if (i == w1.size() && j == w2.size()) return mould_eval(m, prefix, nv);
        RatFun acc = rf_zero(nv);
        if (i < w1.size()) {
            prefix.push_back(w1[i]);
            acc = rf_add(acc, run(w1, i + 1, w2, j));
            prefix.pop_back();
        }
        if (j < w2.size()) {
            prefix.push_back(w2[j]);
            acc = rf_add(acc, run(w1, i, w2, j + 1));
            prefix.pop_back();
        }
        if (merge && i < w1.size() && j < w2.size()) {
            const Letter& la = w1[i];
            const Letter& lb = w2[j];
            int lab = m.gam.mul(la.sig, lb.sig);
            prefix.push_back(Letter{la.u, lab});
            RatFun at_u = run(w1, i + 1, w2, j + 1);
            prefix.back().u = lb.u;
            RatFun at_v = run(w1, i + 1, w2, j + 1);
            prefix.pop_back();
            std::vector<long> raw(std::max(la.u.size(), lb.u.size()), 0);
            for (size_t t = 0; t < la.u.size(); ++t) raw[t] += la.u[t];
            for (size_t t = 0; t < lb.u.size(); ++t) raw[t] -= lb.u[t];
            acc = rf_add(acc, rf_divided_difference(at_u, at_v, raw, m.fam));
        }
        return acc;
    }
};

std::vector<Letter> var_letters(const std::vector<int>& labels, int start) {
    std::vector<Letter> ls;
    ls.reserve(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) {
        std::vector<long> u(start + i + 1, 0);
        u[start + i] = 1;
        ls.push_back(Letter{std::move(u), labels[i]});
    }
    return ls;
}

DiMould sh_map_impl(const Mould& a, bool merge) {
    if (merge && !a.gam.has_group)
        throw std::invalid_argument("sh_star_map: needs a group alphabet");
    DiMould out = pm_zero(a.fam, {a.gam, a.gam}, {a.maxlen, a.maxlen});
    for (int p = 0; p <= a.maxlen; ++p) {
        for (int q = 0; p + q <= a.maxlen; ++q) {
            for (const auto& l1 : label_tuples(a.gam, p)) {
                auto w1 = var_letters(l1, 0);
                for (const auto& l2 : label_tuples(a.gam, q)) {
                    auto w2 = var_letters(l2, p);
                    ShEval ev{a, p + q, merge, {}};
                    pm_set(out, {l1, l2}, ev.run(w1, 0, w2, 0));
                }
            }
        }
    }
    return out;
}

}  // namespace

DiMould sh_map(const Mould& a) { return sh_map_impl(a, false); }

DiMould sh_star_map(const Mould& a) { return sh_map_impl(a, true); }

namespace {

// Degree cap at which two families can disagree without being different:
// truncated series carry no information past their level.
constexpr int kNoCap = -1;

int compare_cap(const FamilyTag& fa, const FamilyTag& fb, int len) {
    int cap = kNoCap;
    if (fa.kind == FamilyTag::TruncSer) cap = fa.trunc - len;
    if (fb.kind == FamilyTag::TruncSer) {
        int cb = fb.trunc - len;
        cap = cap == kNoCap ? cb : std::min(cap, cb);
    }
    return cap;
}

bool values_equal(const RatFun& va, const RatFun& vb, int cap) {
    if (cap == kNoCap) return va == vb;
    if (!va.den.empty() || !vb.den.empty()) return false;
    return rf_truncate(va, cap) == rf_truncate(vb, cap);
}

}  // namespace

bool mould_equal(const Mould& a, const Mould& b) {
    if (a.gam != b.gam) return false;
    int L = std::min(a.maxlen, b.maxlen);
    std::vector<const std::map<std::vector<int>, RatFun>*> maps = {&a.c, &b.c};
    std::map<std::vector<int>, char> keys;
    for (auto* mp : maps)
        for (const auto& [k, v] : *mp)
            if ((int)k.size() <= L) keys[k] = 1;
    for (const auto& [k, _] : keys) {
        int cap = compare_cap(a.fam, b.fam, (int)k.size());
        if (!values_equal(mould_get(a, k), mould_get(b, k), cap)) return false;
    }
    return true;
}

bool pm_equal(const PolyMould& a, const PolyMould& b, int total_cap) {
    if (a.gams.size() != b.gams.size()) return false;
    for (size_t i = 0; i < a.gams.size(); ++i)
        if (a.gams[i] != b.gams[i]) return false;
    std::vector<int> lens = pm_min_lens(a, b);
    std::map<std::vector<std::vector<int>>, char> keys;
    for (const auto* mp : {&a.c, &b.c})
        for (const auto& [k, v] : *mp) {
            if (!pm_key_fits(k, lens)) continue;
            if (total_cap >= 0 && pm_shape_total(k) > total_cap) continue;
            keys[k] = 1;
        }
    for (const auto& [k, _] : keys) {
        int cap = compare_cap(a.fam, b.fam, pm_shape_total(k));
        if (!values_equal(pm_get(a, k), pm_get(b, k), cap)) return false;
    }
    return true;
}

std::string sym_kind_str(SymKind k) {
    switch (k) {
        case SymKind::Alternal: return "alternal";
        case SymKind::Symmetral: return "symmetral";
        case SymKind::Alternil: return "alternil";
        default: return "symmetril";
    }
}

SymWitness symmetry_check(SymKind k, const Mould& m, int bound) {
    bool starred = k == SymKind::Alternil || k == SymKind::Symmetril;
    bool grouplike = k == SymKind::Symmetral || k == SymKind::Symmetril;
    bound = std::min(bound, m.maxlen);

    auto labels_str = [&](const std::vector<int>& l) {
        std::string s = "(";
        for (size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + m.gam.symbols[l[i]];
        return s + ")";
    };

    RatFun e = mould_get(m, {});
    if (grouplike) {
        if (!(rf_is_const(e) && rf_const_value(e) == 1))
            return {false, sym_kind_str(k) + ": empty component is not 1"};
    } else if (!e.is_zero()) {
        return {false, sym_kind_str(k) + ": empty component is not 0"};
    }

    for (int p = 1; p <= bound - 1; ++p) {
        for (int q = p; p + q <= bound; ++q) {
            int nv = p + q;
            int cap = m.fam.kind == FamilyTag::TruncSer ? m.fam.trunc - nv : kNoCap;
            for (const auto& l1 : label_tuples(m.gam, p)) {
                auto w1 = var_letters(l1, 0);
                RatFun m1 = rf_extend(mould_get(m, l1), nv);
                for (const auto& l2 : label_tuples(m.gam, q)) {
                    auto w2 = var_letters(l2, p);
                    ShEval ev{m, nv, starred, {}};
                    RatFun lhs = ev.run(w1, 0, w2, 0);
                    RatFun rhs = grouplike ? rf_mul(m1, rf_place(mould_get(m, l2), p, nv))
                                           : rf_zero(nv);
                    if (!values_equal(lhs, rhs, cap))
                        return {false, sym_kind_str(k) + " fails at " + labels_str(l1) +
                                           " | " + labels_str(l2) + ": got " + rf_str(lhs) +
                                           ", want " + rf_str(rhs)};
                }
            }
        }
    }
    return {true, ""};
}

}  // namespace moulds
