#include "moulds/linform.hpp"

#include <gmpxx.h>

#include <numeric>

namespace moulds {

ScaledForm linform_normalize(const std::vector<long>& raw) {
    std::vector<long> c = raw;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) return {0, LinForm{}};
    long g = 0;
    for (long v : c) g = std::gcd(g, v < 0 ? -v : v);
    long sign = 1;
    for (long v : c) {
        if (v != 0) { sign = v > 0 ? 1 : -1; break; }
    }
    for (long& v : c) v /= sign * g;
    return {sign * g, LinForm{std::move(c)}};
}

std::vector<long> linform_apply_rows(const std::vector<long>& raw,
                                          const std::vector<std::vector<long>>& rows) {
    std::vector<long> out;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == 0) continue;
        const auto& r = rows[i];
        if (r.size() > out.size()) out.resize(r.size(), 0);
        for (size_t j = 0; j < r.size(); ++j) out[j] += raw[i] * r[j];
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<long> linform_add(const std::vector<long>& a,
                                   const std::vector<long>& b) {
    std::vector<long> out = a;
    if (b.size() > out.size()) out.resize(b.size(), 0);
    for (size_t j = 0; j < b.size(); ++j) out[j] += b[j];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<long> linform_neg(const std::vector<long>& a) {
    std::vector<long> out = a;
    for (long& v : out) v = -v;
    return out;
}

std::vector<long> linform_var(int i) {
    std::vector<long> out(i + 1, 0);
    out[i] = 1;
    return out;
}

int linform_rank(const std::vector<std::vector<long>>& rows) {
    size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.size());
    std::vector<std::vector<mpq_class>> m;
    for (const auto& r : rows) {
        std::vector<mpq_class> q(w, 0);
        for (size_t j = 0; j < r.size(); ++j) q[j] = r[j];
        m.push_back(std::move(q));
    }
    int rank = 0;
    for (size_t col = 0; col < w && rank < (int)m.size(); ++col) {
        size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = 0; r < m.size(); ++r) {
            if ((int)r == rank || m[r][col] == 0) continue;
            mpq_class f = m[r][col] / m[rank][col];
            for (size_t j = col; j < w; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::string linform_str(const LinForm& f) {
    if (f.c.empty()) return "0";
    std::string s;
    bool first = true;
    for (size_t i = 0; i < f.c.size(); ++i) {
        long v = f.c[i];
        if (v == 0) continue;
        if (!first) s += v > 0 ? "+" : "-";
        else if (v < 0) s += "-";
        long av = v < 0 ? -v : v;
        if (av != 1) s += std::to_string(av) + "*";
        s += "x" + std::to_string(i + 1);
        first = false;
    }
    return s;
}

}  // namespace moulds
