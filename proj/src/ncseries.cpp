#include "moulds/ncseries.hpp"

#include <stdexcept>

#include "moulds/json_io.hpp"

namespace moulds {

namespace {

void require_same(const NCSeries& a, const NCSeries& b, const char* who) {
    if (a.gam != b.gam)
        throw std::invalid_argument(std::string(who) + ": alphabet mismatch");
}

void check_word(const NCSeries& h, const NCWord& w, const char* who) {
    if (static_cast<int>(w.size()) > h.max_degree)
        throw std::invalid_argument(std::string(who) + ": word exceeds degree bound");
    for (int code : w)
        if (code < 0 || code > h.gam.size())
            throw std::invalid_argument(std::string(who) + ": letter code out of range");
}

}  // namespace

NCSeries nc_zero(const Alphabet& gam, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("nc_zero: negative degree bound");
    return NCSeries{gam, max_degree, {}};
}

NCSeries nc_one(const Alphabet& gam, int max_degree) {
    NCSeries h = nc_zero(gam, max_degree);
    nc_set(h, {}, 1);
    return h;
}

NCSeries nc_letter(const Alphabet& gam, int max_degree, int code) {
    NCSeries h = nc_zero(gam, max_degree);
    nc_set(h, {code}, 1);
    return h;
}

void nc_set(NCSeries& h, const NCWord& w, const Rat& v) {
    check_word(h, w, "nc_set");
    if (v == 0)
        h.c.erase(w);
    else
        h.c[w] = v;
}

Rat nc_get(const NCSeries& h, const NCWord& w) {
    auto it = h.c.find(w);
    return it == h.c.end() ? Rat(0) : it->second;
}

NCSeries nc_add(const NCSeries& a, const NCSeries& b) {
    require_same(a, b, "nc_add");
    NCSeries out = nc_zero(a.gam, std::min(a.max_degree, b.max_degree));
    for (const auto& [w, v] : a.c)
        if (static_cast<int>(w.size()) <= out.max_degree) nc_set(out, w, v);
    for (const auto& [w, v] : b.c)
        if (static_cast<int>(w.size()) <= out.max_degree) nc_set(out, w, nc_get(out, w) + v);
    return out;
}

NCSeries nc_sub(const NCSeries& a, const NCSeries& b) { return nc_add(a, nc_neg(b)); }

NCSeries nc_neg(const NCSeries& a) { return nc_scale(a, -1); }

NCSeries nc_scale(const NCSeries& a, const Rat& v) {
    NCSeries out = nc_zero(a.gam, a.max_degree);
    if (v == 0) return out;
    for (const auto& [w, q] : a.c) out.c[w] = q * v;
    return out;
}

NCSeries nc_mul(const NCSeries& a, const NCSeries& b) {
    require_same(a, b, "nc_mul");
    NCSeries out = nc_zero(a.gam, std::min(a.max_degree, b.max_degree));
    for (const auto& [wa, va] : a.c) {
        if (static_cast<int>(wa.size()) > out.max_degree) continue;
        for (const auto& [wb, vb] : b.c) {
            if (static_cast<int>(wa.size() + wb.size()) > out.max_degree) continue;
            NCWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            nc_set(out, w, nc_get(out, w) + va * vb);
        }
    }
    return out;
}

NCSeries nc_commutator(const NCSeries& a, const NCSeries& b) {
    return nc_sub(nc_mul(a, b), nc_mul(b, a));
}

NCSeries nc_inverse(const NCSeries& a) {
    Rat c0 = nc_get(a, {});
    if (c0 == 0) throw std::invalid_argument("nc_inverse: zero constant term");
    NCSeries y = nc_sub(nc_one(a.gam, a.max_degree), nc_scale(a, Rat(1) / c0));
    NCSeries out = nc_one(a.gam, a.max_degree);
    NCSeries pw = nc_one(a.gam, a.max_degree);
    for (int k = 1; k <= a.max_degree; ++k) {
        pw = nc_mul(pw, y);
        out = nc_add(out, pw);
    }
    return nc_scale(out, Rat(1) / c0);
}

NCSeries nc_subst(const NCSeries& a, const std::vector<NCSeries>& images) {
    if (images.size() != a.gam.size() + 1)
        throw std::invalid_argument("nc_subst: one image per letter code expected");
    for (const auto& im : images)
        if (im.gam != images[0].gam || im.max_degree != images[0].max_degree)
            throw std::invalid_argument("nc_subst: image spaces disagree");
    NCSeries out = nc_zero(images[0].gam, images[0].max_degree);
    for (const auto& [w, v] : a.c) {
        NCSeries cur = nc_one(out.gam, out.max_degree);
        for (int code : w) cur = nc_mul(cur, images[code]);
        out = nc_add(out, nc_scale(cur, v));
    }
    return out;
}

NCSeries nc_exp(const NCSeries& a) {
    if (nc_get(a, {}) != 0) throw std::invalid_argument("nc_exp: nonzero constant term");
    NCSeries out = nc_one(a.gam, a.max_degree);
    NCSeries pw = nc_one(a.gam, a.max_degree);
    Rat fact = 1;
    for (int k = 1; k <= a.max_degree; ++k) {
        pw = nc_mul(pw, a);
        fact *= k;
        out = nc_add(out, nc_scale(pw, Rat(1) / fact));
    }
    return out;
}

TensorNC tnc_zero(const Alphabet& gam, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("tnc_zero: negative degree bound");
    return TensorNC{gam, max_degree, {}};
}

void tnc_set(TensorNC& t, const NCWord& w1, const NCWord& w2, const Rat& v) {
    if (static_cast<int>(w1.size() + w2.size()) > t.max_degree)
        throw std::invalid_argument("tnc_set: total degree exceeds bound");
    auto key = std::make_pair(w1, w2);
    if (v == 0)
        t.c.erase(key);
    else
        t.c[key] = v;
}

Rat tnc_get(const TensorNC& t, const NCWord& w1, const NCWord& w2) {
    auto it = t.c.find(std::make_pair(w1, w2));
    return it == t.c.end() ? Rat(0) : it->second;
}

TensorNC tnc_add(const TensorNC& a, const TensorNC& b) {
    if (a.gam != b.gam) throw std::invalid_argument("tnc_add: alphabet mismatch");
    TensorNC out = tnc_zero(a.gam, std::min(a.max_degree, b.max_degree));
    for (const auto& [k, v] : a.c)
        if (static_cast<int>(k.first.size() + k.second.size()) <= out.max_degree)
            tnc_set(out, k.first, k.second, v);
    for (const auto& [k, v] : b.c)
        if (static_cast<int>(k.first.size() + k.second.size()) <= out.max_degree)
            tnc_set(out, k.first, k.second, tnc_get(out, k.first, k.second) + v);
    return out;
}

TensorNC tnc_sub(const TensorNC& a, const TensorNC& b) { return tnc_add(a, tnc_scale(b, -1)); }

TensorNC tnc_scale(const TensorNC& a, const Rat& v) {
    TensorNC out = tnc_zero(a.gam, a.max_degree);
    if (v == 0) return out;
    for (const auto& [k, q] : a.c) out.c[k] = q * v;
    return out;
}

TensorNC tnc_mul(const TensorNC& a, const TensorNC& b) {
    if (a.gam != b.gam) throw std::invalid_argument("tnc_mul: alphabet mismatch");
    TensorNC out = tnc_zero(a.gam, std::min(a.max_degree, b.max_degree));
    for (const auto& [ka, va] : a.c)
        for (const auto& [kb, vb] : b.c) {
            size_t total = ka.first.size() + ka.second.size() + kb.first.size() + kb.second.size();
            if (static_cast<int>(total) > out.max_degree) continue;
            NCWord w1 = ka.first;
            w1.insert(w1.end(), kb.first.begin(), kb.first.end());
            NCWord w2 = ka.second;
            w2.insert(w2.end(), kb.second.begin(), kb.second.end());
            tnc_set(out, w1, w2, tnc_get(out, w1, w2) + va * vb);
        }
    return out;
}

TensorNC tnc_tensor(const NCSeries& a, const NCSeries& b) {
    require_same(a, b, "tnc_tensor");
    TensorNC out = tnc_zero(a.gam, std::min(a.max_degree, b.max_degree));
    for (const auto& [wa, va] : a.c)
        for (const auto& [wb, vb] : b.c) {
            if (static_cast<int>(wa.size() + wb.size()) > out.max_degree) continue;
            tnc_set(out, wa, wb, tnc_get(out, wa, wb) + va * vb);
        }
    return out;
}

TensorNC nc_coproduct(const NCSeries& h) {
    TensorNC out = tnc_zero(h.gam, h.max_degree);
    for (const auto& [w, v] : h.c) {
        size_t m = w.size();
        for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
            NCWord left, right;
            for (size_t i = 0; i < m; ++i)
                (mask & (size_t{1} << i) ? left : right).push_back(w[i]);
            tnc_set(out, left, right, tnc_get(out, left, right) + v);
        }
    }
    return out;
}

NCSeries nc_antipode(const NCSeries& h) {
    NCSeries out = nc_zero(h.gam, h.max_degree);
    for (const auto& [w, v] : h.c) {
        NCWord r(w.rbegin(), w.rend());
        nc_set(out, r, nc_get(out, r) + (w.size() % 2 ? -v : v));
    }
    return out;
}

bool is_group_like(const NCSeries& h) {
    if (nc_get(h, {}) != 1) return false;
    return nc_coproduct(h) == tnc_tensor(h, h);
}

bool is_lie_like(const NCSeries& h) {
    NCSeries one = nc_one(h.gam, h.max_degree);
    return nc_coproduct(h) == tnc_add(tnc_tensor(h, one), tnc_tensor(one, h));
}

NCSeries nc_d0(const NCSeries& h) {
    NCSeries out = nc_zero(h.gam, h.max_degree);
    for (const auto& [w, v] : h.c)
        for (size_t i = 0; i < w.size(); ++i) {
            if (w[i] != 0) continue;
            NCWord d = w;
            d.erase(d.begin() + i);
            nc_set(out, d, nc_get(out, d) + v);
        }
    return out;
}

bool is_dagger(const NCSeries& h) { return nc_d0(h).c.empty(); }

std::vector<NCWord> lyndon_words(int alphabet_size, int maxlen) {
    if (alphabet_size < 1 || maxlen < 1)
        throw std::invalid_argument("lyndon_words: bad parameters");
    std::vector<NCWord> out;
    NCWord w{0};
    while (!w.empty()) {
        out.push_back(w);
        NCWord t = w;
        while (static_cast<int>(t.size()) < maxlen) t.push_back(t[t.size() % w.size()]);
        w = t;
        while (!w.empty() && w.back() == alphabet_size - 1) w.pop_back();
        if (!w.empty()) w.back() += 1;
    }
    return out;
}

NCSeries lyndon_bracket(const Alphabet& gam, int max_degree, const NCWord& lw) {
    if (lw.empty()) throw std::invalid_argument("lyndon_bracket: empty word");
    if (lw.size() == 1) return nc_letter(gam, max_degree, lw[0]);
    // standard factorization: the right factor is the smallest proper suffix
    size_t cut = 1;
    for (size_t i = 2; i < lw.size(); ++i) {
        if (std::lexicographical_compare(lw.begin() + i, lw.end(), lw.begin() + cut, lw.end()))
            cut = i;
    }
    NCWord u(lw.begin(), lw.begin() + cut), v(lw.begin() + cut, lw.end());
    return nc_commutator(lyndon_bracket(gam, max_degree, u), lyndon_bracket(gam, max_degree, v));
}

NCSeries nc_random_lie_dagger(std::mt19937_64& rng, const Alphabet& gam, int max_degree) {
    std::uniform_int_distribution<int> coef(-3, 3);
    NCSeries out = nc_zero(gam, max_degree);
    for (const auto& lw : lyndon_words(gam.size() + 1, max_degree)) {
        if (lw.size() == 1 && lw[0] == 0) continue;
        int v = coef(rng);
        if (v == 0) continue;
        out = nc_add(out, nc_scale(lyndon_bracket(gam, max_degree, lw), v));
    }
    return out;
}

NCSeries nc_random_group_dagger(std::mt19937_64& rng, const Alphabet& gam, int max_degree) {
    return nc_exp(nc_random_lie_dagger(rng, gam, max_degree));
}

nlohmann::json nc_to_json(const NCSeries& h) {
    json terms = json::array();
    for (const auto& [w, v] : h.c) {
        json word = json::array();
        for (int code : w) word.push_back(std::to_string(code));
        terms.push_back({{"word", word}, {"coeff", rat_to_json(v)}});
    }
    return {{"gamma", h.gam.name}, {"max_degree", h.max_degree}, {"terms", terms}};
}

NCSeries nc_from_json(const nlohmann::json& j, bool strict) {
    NCSeries h = nc_zero(alphabet_by_name(j.at("gamma").get<std::string>()),
                         j.at("max_degree").get<int>());
    for (const auto& t : j.at("terms")) {
        NCWord w;
        for (const auto& s : t.at("word")) w.push_back(std::stoi(s.get<std::string>()));
        check_word(h, w, "nc_from_json");
        Rat v = rat_from_json(t.at("coeff"));
        if (strict) {
            if (v == 0) throw std::invalid_argument("nc_from_json: zero coefficient");
            if (h.c.count(w)) throw std::invalid_argument("nc_from_json: duplicate word");
        }
        nc_set(h, w, nc_get(h, w) + v);
    }
    return h;
}

}  // namespace moulds
