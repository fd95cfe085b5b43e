#include "moulds/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace moulds {

static void p_insert(Poly& p, const std::vector<int>& e, const Rat& c) {
    if (c == 0) return;
    auto it = p.t.find(e);
    if (it == p.t.end()) {
        p.t.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) p.t.erase(it);
    }
}

Poly p_zero(int nv) { return Poly{nv, {}}; }

Poly p_const(int nv, const Rat& c) {
    Poly p{nv, {}};
    p_insert(p, std::vector<int>(nv, 0), c);
    return p;
}

Poly p_var(int nv, int i) {
    if (i < 0 || i >= nv) throw std::out_of_range("p_var index");
    Poly p{nv, {}};
    std::vector<int> e(nv, 0);
    e[i] = 1;
    p_insert(p, e, 1);
    return p;
}

Poly p_from_form(int nv, long scale, const LinForm& f) {
    Poly p{nv, {}};
    if (scale == 0) return p;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        std::vector<int> e(nv, 0);
        e[i] = 1;
        p_insert(p, e, Rat(scale * f.c[i]));
    }
    return p;
}

Poly p_from_raw_form(int nv, const std::vector<long>& raw) {
    Poly p{nv, {}};
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == 0) continue;
        std::vector<int> e(nv, 0);
        e[i] = 1;
        p_insert(p, e, Rat(raw[i]));
    }
    return p;
}

Poly p_add(const Poly& a, const Poly& b) {
    if (a.nv != b.nv) throw std::invalid_argument("p_add: variable count mismatch");
    Poly out = a;
    for (const auto& [e, c] : b.t) p_insert(out, e, c);
    return out;
}

Poly p_sub(const Poly& a, const Poly& b) {
    if (a.nv != b.nv) throw std::invalid_argument("p_sub: variable count mismatch");
    Poly out = a;
    for (const auto& [e, c] : b.t) p_insert(out, e, -c);
    return out;
}

Poly p_neg(const Poly& a) {
    Poly out{a.nv, {}};
    for (const auto& [e, c] : a.t) out.t.emplace(e, -c);
    return out;
}

Poly p_mul(const Poly& a, const Poly& b) {
    if (a.nv != b.nv) throw std::invalid_argument("p_mul: variable count mismatch");
    Poly out{a.nv, {}};
    std::vector<int> e(a.nv);
    for (const auto& [ea, ca] : a.t)
        for (const auto& [eb, cb] : b.t) {
            for (int i = 0; i < a.nv; ++i) e[i] = ea[i] + eb[i];
            p_insert(out, e, ca * cb);
        }
    return out;
}

Poly p_scale(const Poly& a, const Rat& c) {
    Poly out{a.nv, {}};
    if (c == 0) return out;
    for (const auto& [e, v] : a.t) out.t.emplace(e, v * c);
    return out;
}

int p_total_degree(const Poly& a) {
    int d = -1;
    for (const auto& [e, c] : a.t) {
        int s = 0;
        for (int v : e) s += v;
        d = std::max(d, s);
    }
    return d;
}

Poly p_truncate(const Poly& a, int deg) {
    Poly out{a.nv, {}};
    for (const auto& [e, c] : a.t) {
        int s = 0;
        for (int v : e) s += v;
        if (s <= deg) out.t.emplace(e, c);
    }
    return out;
}

bool p_is_const(const Poly& a) {
    return a.t.empty() || (a.t.size() == 1 && p_total_degree(a) == 0);
}

Rat p_const_value(const Poly& a) {
    auto it = a.t.find(std::vector<int>(a.nv, 0));
    return it == a.t.end() ? Rat(0) : it->second;
}

Poly p_substitute(const Poly& a, const std::vector<std::vector<long>>& rows,
                  int target_nv) {
    if ((int)rows.size() != a.nv) throw std::invalid_argument("p_substitute: row count");
    std::vector<Poly> images;
    images.reserve(rows.size());
    for (const auto& r : rows) images.push_back(p_from_raw_form(target_nv, r));
    // Cache small powers of each image; exponents stay tiny in practice.
    std::vector<std::vector<Poly>> pw(a.nv);
    auto power = [&](int i, int k) -> const Poly& {
        auto& v = pw[i];
        if (v.empty()) v.push_back(p_const(target_nv, 1));
        while ((int)v.size() <= k) v.push_back(p_mul(v.back(), images[i]));
        return v[k];
    };
    Poly out = p_zero(target_nv);
    for (const auto& [e, c] : a.t) {
        Poly term = p_const(target_nv, c);
        for (int i = 0; i < a.nv; ++i)
            if (e[i] != 0) term = p_mul(term, power(i, e[i]));
        out = p_add(out, term);
    }
    return out;
}

std::optional<Poly> p_divide_exact(const Poly& a, const Poly& b) {
    if (a.nv != b.nv) throw std::invalid_argument("p_divide_exact: variable count mismatch");
    if (b.is_zero()) throw std::invalid_argument("p_divide_exact: division by zero");
    Poly rem = a;
    Poly q = p_zero(a.nv);
    const auto& ltb = *b.t.rbegin();
    while (!rem.is_zero()) {
        const auto& lta = *rem.t.rbegin();
        std::vector<int> e(a.nv);
        for (int i = 0; i < a.nv; ++i) {
            e[i] = lta.first[i] - ltb.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        Rat c = lta.second / ltb.second;
        Poly mono{a.nv, {}};
        mono.t.emplace(e, c);
        q = p_add(q, mono);
        rem = p_sub(rem, p_mul(mono, b));
    }
    return q;
}

std::string p_str(const Poly& a) {
    if (a.t.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = a.t.rbegin(); it != a.t.rend(); ++it) {
        const Rat& c = it->second;
        std::string cs = rat_str(c < 0 ? Rat(-c) : c);
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        std::string mono;
        for (size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
        }
        if (mono.empty()) s += cs;
        else s += (cs == "1" ? "" : cs + "*") + mono;
        first = false;
    }
    return s;
}

}  // namespace moulds
