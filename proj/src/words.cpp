#include "moulds/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace moulds {

int Alphabet::mul(int a, int b) const {
    if (!has_group) throw std::logic_error("alphabet " + name + " has no group law");
    return mult[a][b];
}

int Alphabet::invert(int a) const {
    if (!has_group) throw std::logic_error("alphabet " + name + " has no group law");
    return inv[a];
}

static void check_group(Alphabet& g) {
    int n = g.size();
    if ((int)g.mult.size() != n) throw std::invalid_argument("group table size");
    for (const auto& row : g.mult) {
        if ((int)row.size() != n) throw std::invalid_argument("group table row size");
        std::vector<bool> seen(n, false);
        for (int v : row) {
            if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("group row not a bijection");
            seen[v] = true;
        }
    }
    int unit = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n; ++a) ok &= g.mult[e][a] == a && g.mult[a][e] == a;
        if (ok) { unit = e; break; }
    }
    if (unit < 0) throw std::invalid_argument("group has no unit");
    g.unit = unit;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mult[g.mult[a][b]][c] != g.mult[a][g.mult[b][c]])
                    throw std::invalid_argument("group law not associative");
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g.mult[a][b] == unit && g.mult[b][a] == unit) g.inv[a] = b;
        if (g.inv[a] < 0) throw std::invalid_argument("group element has no inverse");
    }
    g.has_group = true;
}

Alphabet alphabet_zn(int n) {
    if (n < 1) throw std::invalid_argument("alphabet_zn: n < 1");
    Alphabet g;
    g.name = n == 1 ? "trivial" : "z" + std::to_string(n);
    for (int i = 0; i < n; ++i) g.symbols.push_back(std::to_string(i));
    g.mult.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
    check_group(g);
    return g;
}

Alphabet alphabet_labels(int k) {
    Alphabet g;
    g.name = "k" + std::to_string(k);
    for (int i = 1; i <= k; ++i) g.symbols.push_back(std::to_string(i));
    return g;
}

Alphabet alphabet_with_table(std::string name, std::vector<std::string> symbols,
                             std::vector<std::vector<int>> mult) {
    Alphabet g;
    g.name = std::move(name);
    g.symbols = std::move(symbols);
    g.mult = std::move(mult);
    check_group(g);
    return g;
}

Alphabet alphabet_by_name(const std::string& name) {
    if (name == "trivial") return alphabet_zn(1);
    if (name.size() > 1 && name[0] == 'z') return alphabet_zn(std::stoi(name.substr(1)));
    if (name.size() > 1 && name[0] == 'k') return alphabet_labels(std::stoi(name.substr(1)));
    throw std::invalid_argument("unknown alphabet: " + name);
}

Word word_cat(const Word& a, const Word& b) {
    Word out = a;
    out.ls.insert(out.ls.end(), b.ls.begin(), b.ls.end());
    return out;
}

Word word_vars(Orient o, const std::vector<int>& sigs, int start) {
    Word w;
    w.orient = o;
    for (size_t i = 0; i < sigs.size(); ++i)
        w.ls.push_back(Letter{linform_var(start + (int)i), sigs[i]});
    return w;
}

std::string word_str(const Word& w, const Alphabet& gam) {
    std::string s = "[";
    for (size_t i = 0; i < w.ls.size(); ++i) {
        if (i) s += ", ";
        auto [sc, f] = linform_normalize(w.ls[i].u);
        std::string us = sc == 0 ? "0"
                       : (sc == 1 ? "" : std::to_string(sc) + "*") + linform_str(f);
        s += "(" + us + ";" + gam.symbols[w.ls[i].sig] + ")";
    }
    return s + "]";
}

void ws_add_term(WordSum& s, const Word& w, const RatFun& c) {
    if (c.is_zero()) return;
    auto it = s.terms.find(w);
    if (it == s.terms.end()) {
        s.terms.emplace(w, c);
    } else {
        it->second = rf_add(it->second, c);
        if (it->second.is_zero()) s.terms.erase(it);
    }
}

WordSum ws_add(const WordSum& a, const WordSum& b) {
    WordSum out = a;
    for (const auto& [w, c] : b.terms) ws_add_term(out, w, c);
    return out;
}

WordSum ws_scale(const WordSum& a, const RatFun& c) {
    WordSum out{a.nv, {}};
    for (const auto& [w, v] : a.terms) ws_add_term(out, w, rf_mul(v, c));
    return out;
}

static void shuffle_rec(const Word& a, size_t i, const Word& b, size_t j, Word& acc,
                        WordSum& out) {
    if (i == a.size() && j == b.size()) {
        ws_add_term(out, acc, rf_const(out.nv, 1));
        return;
    }
    if (i < a.size()) {
        acc.ls.push_back(a.ls[i]);
        shuffle_rec(a, i + 1, b, j, acc, out);
        acc.ls.pop_back();
    }
    if (j < b.size()) {
        acc.ls.push_back(b.ls[j]);
        shuffle_rec(a, i, b, j + 1, acc, out);
        acc.ls.pop_back();
    }
}

WordSum shuffle(const Word& a, const Word& b, int nv) {
    if (a.orient != b.orient) throw std::invalid_argument("shuffle: orientation mismatch");
    WordSum out{nv, {}};
    Word acc;
    acc.orient = a.orient;
    shuffle_rec(a, 0, b, 0, acc, out);
    return out;
}

static void stuffle_rec(const Word& a, size_t i, const Word& b, size_t j, Word& acc,
                        const RatFun& coef, int nv, const Alphabet& gam, WordSum& out) {
    if (i == a.size() || j == b.size()) {
        Word w = acc;
        for (size_t k = i; k < a.size(); ++k) w.ls.push_back(a.ls[k]);
        for (size_t k = j; k < b.size(); ++k) w.ls.push_back(b.ls[k]);
        ws_add_term(out, w, coef);
        return;
    }
    const Letter& la = a.ls[i];
    const Letter& lb = b.ls[j];
    if (la.u == lb.u) return;  // colliding variables kill the product
    acc.ls.push_back(la);
    stuffle_rec(a, i + 1, b, j, acc, coef, nv, gam, out);
    acc.ls.pop_back();
    acc.ls.push_back(lb);
    stuffle_rec(a, i, b, j + 1, acc, coef, nv, gam, out);
    acc.ls.pop_back();
    RatFun dd = rf_inv_raw_form(nv, linform_add(la.u, linform_neg(lb.u)));
    int merged = gam.mul(la.sig, lb.sig);
    acc.ls.push_back(Letter{la.u, merged});
    stuffle_rec(a, i + 1, b, j + 1, acc, rf_mul(coef, dd), nv, gam, out);
    acc.ls.pop_back();
    acc.ls.push_back(Letter{lb.u, merged});
    stuffle_rec(a, i + 1, b, j + 1, acc, rf_neg(rf_mul(coef, dd)), nv, gam, out);
    acc.ls.pop_back();
}

WordSum stuffle(const Word& a, const Word& b, int nv, const Alphabet& gam) {
    if (a.orient != Orient::Y || b.orient != Orient::Y)
        throw std::invalid_argument("stuffle needs y-oriented words");
    WordSum out{nv, {}};
    Word acc;
    acc.orient = Orient::Y;
    stuffle_rec(a, 0, b, 0, acc, rf_const(nv, 1), nv, gam, out);
    return out;
}

static std::vector<long> word_u_total(const Word& w) {
    std::vector<long> t;
    for (const auto& l : w.ls) t = linform_add(t, l.u);
    return t;
}

Word flexion(FlexKind kind, const Word& first, const Word& second, const Alphabet& gam) {
    bool aux_first = kind == FlexKind::UpperRight || kind == FlexKind::LowerRight;
    const Word& aux = aux_first ? first : second;
    const Word& main = aux_first ? second : first;
    if (main.empty()) return main;
    if (aux.empty()) return main;
    Word out = main;
    switch (kind) {
        case FlexKind::UpperRight:
            out.ls.front().u = linform_add(out.ls.front().u, word_u_total(aux));
            break;
        case FlexKind::UpperLeft:
            out.ls.back().u = linform_add(out.ls.back().u, word_u_total(aux));
            break;
        case FlexKind::LowerRight: {
            int t = gam.invert(aux.ls.back().sig);
            if (t == gam.unit) break;
            for (auto& l : out.ls) l.sig = gam.mul(t, l.sig);
            break;
        }
        case FlexKind::LowerLeft: {
            int t = gam.invert(aux.ls.front().sig);
            if (t == gam.unit) break;
            for (auto& l : out.ls) l.sig = gam.mul(l.sig, t);
            break;
        }
    }
    return out;
}

}  // namespace moulds
