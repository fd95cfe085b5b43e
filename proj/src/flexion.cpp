#include "moulds/flexion.hpp"

#include <stdexcept>

namespace moulds {

namespace {

void require_pair(const Mould& a, const Mould& b, const char* who) {
    if (a.gam != b.gam)
        throw std::invalid_argument(std::string(who) + ": alphabet mismatch");
    if (a.fam != b.fam)
        throw std::invalid_argument(std::string(who) + ": family mismatch");
}

void require_flexible(const Mould& m, const char* who) {
    if (!m.gam.has_group && m.gam.size() != 1)
        throw std::invalid_argument(std::string(who) + ": alphabet has no group law");
}

Word subword(const std::vector<Letter>& w, size_t from, size_t to) {
    Word out{Orient::X, {}};
    out.ls.assign(w.begin() + from, w.begin() + to);
    return out;
}

bool empty_is(const Mould& m, const Rat& want) {
    RatFun e = mould_get(m, {});
    return rf_is_const(e) && rf_const_value(e) == want;
}

// One garit-style cut pattern walker.  Blocks alpha_i beta_i gamma_i tile the
// word; every beta_i is nonempty and no gamma_i alpha_{i+1} junction is
// wholly empty.  The beta blocks, stretched by their neighbours, concatenate
// into the word fed to a; each alpha feeds b and each gamma feeds the
// product inverse of b.
struct GaritSum {
    const std::vector<Letter>& w;
    const Alphabet& gam;
    const Mould& a;
    const Mould& b;
    const Mould& binv;
    int nv;
    RatFun total;
    Word aword{Orient::X, {}};

    GaritSum(const std::vector<Letter>& w_, const Mould& a_, const Mould& b_,
             const Mould& binv_, int nv_)
        : w(w_), gam(a_.gam), a(a_), b(b_), binv(binv_), nv(nv_), total(rf_zero(nv_)) {}

    void run() { rec(0, true, false, rf_const(nv, 1)); }

    void rec(size_t p, bool first, bool prev_gamma_empty, const RatFun& factor) {
        if (p == w.size()) {
            if (!first) total = rf_add(total, rf_mul(factor, mould_eval(a, aword.ls, nv)));
            return;
        }
        for (size_t la = 0; p + la + 1 <= w.size(); ++la) {
            if (!first && prev_gamma_empty && la == 0) continue;
            Word alpha = subword(w, p, p + la);
            for (size_t lb = 1; p + la + lb <= w.size(); ++lb) {
                Word beta = subword(w, p + la, p + la + lb);
                RatFun fb = factor;
                if (la) {
                    fb = rf_mul(fb, mould_eval(b, flexion(FlexKind::LowerLeft, alpha, beta, gam).ls, nv));
                    if (fb.is_zero()) continue;
                }
                for (size_t lg = 0; p + la + lb + lg <= w.size(); ++lg) {
                    Word gamma = subword(w, p + la + lb, p + la + lb + lg);
                    RatFun f = fb;
                    if (lg) {
                        f = rf_mul(f, mould_eval(binv, flexion(FlexKind::LowerRight, beta, gamma, gam).ls, nv));
                        if (f.is_zero()) continue;
                    }
                    Word mid = flexion(FlexKind::UpperRight, alpha, beta, gam);
                    mid = flexion(FlexKind::UpperLeft, mid, gamma, gam);
                    size_t keep = aword.ls.size();
                    aword.ls.insert(aword.ls.end(), mid.ls.begin(), mid.ls.end());
                    rec(p + la + lb + lg, false, lg == 0, f);
                    aword.ls.resize(keep);
                }
            }
        }
    }
};

long pattern_count_rec(int rem, bool first, bool prev_gamma_empty) {
    if (rem == 0) return first ? 0 : 1;
    long n = 0;
    for (int la = 0; la + 1 <= rem; ++la) {
        if (!first && prev_gamma_empty && la == 0) continue;
        for (int lb = 1; la + lb <= rem; ++lb)
            for (int lg = 0; la + lb + lg <= rem; ++lg)
                n += pattern_count_rec(rem - la - lb - lg, false, lg == 0);
    }
    return n;
}

}  // namespace

Mould mould_arit(const Mould& b, const Mould& a) {
    require_pair(a, b, "mould_arit");
    require_flexible(a, "mould_arit");
    int len = std::min(a.maxlen, b.maxlen);
    Mould out = mould_zero(a.fam, a.gam, len);
    for (int m = 2; m <= len; ++m) {
        for (const auto& labels : label_tuples(a.gam, m)) {
            Word w = word_vars(Orient::X, labels);
            RatFun sum = rf_zero(m);
            // alpha beta gamma with beta, gamma nonempty
            for (size_t la = 0; la + 2 <= w.size(); ++la) {
                Word alpha = subword(w.ls, 0, la);
                for (size_t lb = 1; la + lb + 1 <= w.size(); ++lb) {
                    Word beta = subword(w.ls, la, la + lb);
                    Word gamma = subword(w.ls, la + lb, w.size());
                    Word upper = word_cat(alpha, flexion(FlexKind::UpperRight, beta, gamma, a.gam));
                    RatFun av = mould_eval(a, upper.ls, m);
                    if (av.is_zero()) continue;
                    RatFun bv = mould_eval(b, flexion(FlexKind::LowerLeft, beta, gamma, a.gam).ls, m);
                    sum = rf_add(sum, rf_mul(av, bv));
                }
            }
            // alpha beta gamma with alpha, beta nonempty
            for (size_t la = 1; la + 1 <= w.size(); ++la) {
                Word alpha = subword(w.ls, 0, la);
                for (size_t lb = 1; la + lb <= w.size(); ++lb) {
                    Word beta = subword(w.ls, la, la + lb);
                    Word gamma = subword(w.ls, la + lb, w.size());
                    Word upper = word_cat(flexion(FlexKind::UpperLeft, alpha, beta, a.gam), gamma);
                    RatFun av = mould_eval(a, upper.ls, m);
                    if (av.is_zero()) continue;
                    RatFun bv = mould_eval(b, flexion(FlexKind::LowerRight, alpha, beta, a.gam).ls, m);
                    sum = rf_sub(sum, rf_mul(av, bv));
                }
            }
            mould_set(out, labels, sum);
        }
    }
    return out;
}

Mould mould_ari(const Mould& a, const Mould& b) {
    require_pair(a, b, "mould_ari");
    if (!empty_is(a, 0) || !empty_is(b, 0))
        throw std::invalid_argument("mould_ari: empty components must vanish");
    Mould out = mould_sub(mould_arit(b, a), mould_arit(a, b));
    out = mould_add(out, mould_mul(a, b));
    return mould_sub(out, mould_mul(b, a));
}

Mould mould_garit(const Mould& b, const Mould& a) {
    require_pair(a, b, "mould_garit");
    require_flexible(a, "mould_garit");
    if (!empty_is(b, 1))
        throw std::invalid_argument("mould_garit: acting mould needs unit empty component");
    Mould binv = mould_inv_mul(b);
    int len = std::min(a.maxlen, b.maxlen);
    Mould out = mould_zero(a.fam, a.gam, len);
    mould_set(out, {}, mould_get(a, {}));
    for (int m = 1; m <= len; ++m) {
        for (const auto& labels : label_tuples(a.gam, m)) {
            Word w = word_vars(Orient::X, labels);
            GaritSum gs(w.ls, a, b, binv, m);
            gs.run();
            mould_set(out, labels, gs.total);
        }
    }
    return out;
}

Mould mould_gari(const Mould& a, const Mould& b) {
    require_pair(a, b, "mould_gari");
    if (!empty_is(a, 1) || !empty_is(b, 1))
        throw std::invalid_argument("mould_gari: empty components must be 1");
    return mould_mul(mould_garit(b, a), b);
}

Mould mould_invgari(const Mould& b) {
    require_flexible(b, "mould_invgari");
    if (!empty_is(b, 1))
        throw std::invalid_argument("mould_invgari: empty component must be 1");
    Mould binv = mould_inv_mul(b);
    Mould inv = mould_zero(b.fam, b.gam, b.maxlen);
    mould_set(inv, {}, rf_const(0, 1));
    // garit(b)(inv) must equal the product inverse of b.  At length m the
    // identity cut pattern contributes the unknown component itself and every
    // other pattern only reads shorter ones, so the sum with the unknown left
    // at zero is exactly the correction term.
    for (int m = 1; m <= b.maxlen; ++m) {
        for (const auto& labels : label_tuples(b.gam, m)) {
            Word w = word_vars(Orient::X, labels);
            GaritSum gs(w.ls, inv, b, binv, m);
            gs.run();
            mould_set(inv, labels, rf_sub(mould_get(binv, labels), gs.total));
        }
    }
    return inv;
}

Mould mould_preari(const Mould& a, const Mould& b) {
    require_pair(a, b, "mould_preari");
    return mould_add(mould_arit(b, a), mould_mul(a, b));
}

Mould mould_expari(const Mould& a) {
    if (!empty_is(a, 0))
        throw std::invalid_argument("mould_expari: empty component must vanish");
    Mould out = mould_unit(a.fam, a.gam, a.maxlen);
    Mould cur = out;
    Rat fact = 1;
    // The k-th iterate has no component below length k, so the series stops.
    for (int k = 1; k <= a.maxlen; ++k) {
        cur = mould_preari(cur, a);
        fact *= k;
        out = mould_add(out, mould_scale(cur, Rat(1) / fact));
    }
    return out;
}

long garit_pattern_count(int m) {
    if (m < 0) throw std::invalid_argument("garit_pattern_count: negative length");
    if (m == 0) return 1;  // the empty pattern
    return pattern_count_rec(m, true, false);
}

}  // namespace moulds
