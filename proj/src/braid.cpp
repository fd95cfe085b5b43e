#include "moulds/braid.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace moulds {

namespace {

using BWord = std::vector<int>;
using BComb = std::map<BWord, Rat>;

void require_same(const BraidElement& a, const BraidElement& b, const char* who) {
    if (a.n != b.n)
        throw std::invalid_argument(std::string(who) + ": strand count mismatch");
}

// Normal form of one word, memoized.  The first ascent (a letter followed by
// one of strictly higher level) is swapped, paying the commutator, until the
// levels are weakly decreasing.  The commutator replaces the pair by two
// letters of the higher level, so the level-weighted potential drops and the
// rewriting terminates; the result is path-independent because the sorted
// words are a basis.
const BComb& normal_form(const BWord& w) {
    thread_local std::map<BWord, BComb> cache;
    auto hit = cache.find(w);
    if (hit != cache.end()) return hit->second;

    int bad = -1;
    for (size_t p = 0; p + 1 < w.size(); ++p)
        if (braid_gen_level(w[p]) < braid_gen_level(w[p + 1])) {
            bad = static_cast<int>(p);
            break;
        }
    BComb out;
    if (bad < 0) {
        out.emplace(w, 1);
    } else {
        auto [i, j] = braid_gen_pair(w[bad]);
        auto [k, q] = braid_gen_pair(w[bad + 1]);
        BWord sw = w;
        std::swap(sw[bad], sw[bad + 1]);
        for (const auto& [u, v] : normal_form(sw)) out[u] += v;
        int sign = k == i ? 1 : k == j ? -1 : 0;
        if (sign != 0) {
            int giq = braid_gen_index(i, q);
            int gjq = braid_gen_index(j, q);
            BWord rep = w;
            rep[bad] = giq;
            rep[bad + 1] = gjq;
            for (const auto& [u, v] : normal_form(rep)) out[u] += v * sign;
            rep[bad] = gjq;
            rep[bad + 1] = giq;
            for (const auto& [u, v] : normal_form(rep)) out[u] -= v * sign;
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    auto [it, fresh] = cache.emplace(w, std::move(out));
    (void)fresh;
    return it->second;
}

void check_word(const BraidElement& x, const BWord& w, const char* who) {
    int top = x.n * (x.n - 1) / 2;
    for (int g : w)
        if (g < 0 || g >= top)
            throw std::invalid_argument(std::string(who) + ": generator outside t_n");
}

// Shared homomorphism driver: every letter of every word goes to its image.
BraidElement braid_apply_images(const BraidElement& x,
                                const std::vector<BraidElement>& images, int n_target) {
    BraidElement out = braid_zero(n_target, x.max_degree);
    for (const auto& [w, v] : x.c) {
        BraidElement cur = braid_one(n_target, x.max_degree);
        for (int g : w) cur = braid_mul(cur, images[g]);
        out = braid_add(out, braid_scale(cur, v));
    }
    return out;
}

// Image in the braid algebra of the dagger extension of one block word:
// block b's letter codes 0..b+1 name the level-(b+2) generators.  The
// extension only adds words of the same length, so the image does not
// depend on any ambient degree bound.
const BComb& block_image(int b, const NCWord& w) {
    thread_local std::map<std::pair<int, NCWord>, BComb> cache;
    auto key = std::make_pair(b, w);
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    NCSeries s = nc_zero(alphabet_labels(b + 1), static_cast<int>(w.size()));
    nc_set(s, w, 1);
    BComb img;
    for (const auto& [u, v] : nc_dagger_extend(s).c) {
        BWord bw;
        for (int code : u) bw.push_back(braid_gen_index(code, b + 2));
        img[bw] = v;
    }
    auto [it, fresh] = cache.emplace(std::move(key), std::move(img));
    (void)fresh;
    return it->second;
}

std::vector<Rat> coords_of_degree(const BraidElement& x, int d,
                                  const std::map<BWord, int>& index) {
    std::vector<Rat> out(index.size(), Rat(0));
    for (const auto& [w, v] : x.c) {
        if (static_cast<int>(w.size()) != d) continue;
        auto it = index.find(w);
        if (it == index.end())
            throw std::logic_error("coords_of_degree: word outside the basis");
        out[it->second] = v;
    }
    return out;
}

// Reduced row echelon form of [A | I], pivots confined to the A columns.
// Gives particular solutions (free coordinates zero) and a kernel basis.
struct LinSolver {
    int rows = 0, cols = 0, rank = 0;
    std::vector<std::vector<Rat>> m;
    std::vector<int> piv;
    std::vector<bool> is_piv;

    explicit LinSolver(const std::vector<std::vector<Rat>>& a) {
        rows = static_cast<int>(a.size());
        cols = rows ? static_cast<int>(a[0].size()) : 0;
        m.resize(rows);
        for (int r = 0; r < rows; ++r) {
            m[r] = a[r];
            m[r].resize(cols + rows, Rat(0));
            m[r][cols + r] = 1;
        }
        is_piv.assign(cols, false);
        for (int col = 0; col < cols && rank < rows; ++col) {
            int use = -1;
            for (int r = rank; r < rows; ++r)
                if (m[r][col] != 0) {
                    use = r;
                    break;
                }
            if (use < 0) continue;
            std::swap(m[rank], m[use]);
            Rat inv = Rat(1) / m[rank][col];
            for (auto& q : m[rank]) q *= inv;
            for (int r = 0; r < rows; ++r) {
                if (r == rank || m[r][col] == 0) continue;
                Rat f = m[r][col];
                for (int c = 0; c < cols + rows; ++c) m[r][c] -= f * m[rank][c];
            }
            piv.push_back(col);
            is_piv[col] = true;
            ++rank;
        }
    }

    bool solve(const std::vector<Rat>& b, std::vector<Rat>& x) const {
        x.assign(cols, Rat(0));
        for (int r = 0; r < rows; ++r) {
            Rat y = 0;
            for (int k = 0; k < rows; ++k)
                if (b[k] != 0) y += m[r][cols + k] * b[k];
            if (r < rank)
                x[piv[r]] = y;
            else if (y != 0)
                return false;
        }
        return true;
    }

    std::vector<std::vector<Rat>> kernel() const {
        std::vector<std::vector<Rat>> out;
        for (int f = 0; f < cols; ++f) {
            if (is_piv[f]) continue;
            std::vector<Rat> v(cols, Rat(0));
            v[f] = 1;
            for (int r = 0; r < rank; ++r) v[piv[r]] = -m[r][f];
            out.push_back(std::move(v));
        }
        return out;
    }
};

// No-leading-zero words over the given letter count, one length.
std::vector<NCWord> nlz_words(int letters, int len) {
    std::vector<NCWord> out;
    if (len == 0) {
        out.push_back({});
        return out;
    }
    NCWord cur(len);
    auto rec = [&](auto&& self, int at) -> void {
        if (at == len) {
            out.push_back(cur);
            return;
        }
        for (int c = at == 0 ? 1 : 0; c < letters; ++c) {
            cur[at] = c;
            self(self, at + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Per-(n, degree) inversion data for dec: the basis tuples, the matrix of
// their images in the word basis, and its reduced form.
struct DecSlice {
    std::vector<std::vector<NCWord>> tuples;
    std::map<BWord, int> word_index;
    std::vector<std::vector<Rat>> a;
    LinSolver solver;
};

const DecSlice& dec_slice(int n, int d) {
    thread_local std::map<std::pair<int, int>, DecSlice> cache;
    auto key = std::make_pair(n, d);
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    DecSlice s{{}, {}, {}, LinSolver({})};
    std::vector<NCWord> tuple(n - 2);
    auto rec = [&](auto&& self, int b, int left) -> void {
        if (b == n - 2) {
            if (left == 0) s.tuples.push_back(tuple);
            return;
        }
        for (int e = 0; e <= left; ++e)
            for (const auto& w : nlz_words(b + 2, e)) {
                tuple[b] = w;
                self(self, b + 1, left - e);
            }
    };
    rec(rec, 0, d);
    std::sort(s.tuples.begin(), s.tuples.end());

    auto basis = braid_basis_words(n, d);
    for (size_t i = 0; i < basis.size(); ++i) s.word_index.emplace(basis[i], i);

    s.a.assign(basis.size(), std::vector<Rat>(s.tuples.size(), Rat(0)));
    for (size_t col = 0; col < s.tuples.size(); ++col) {
        DecTensor t = dec_zero(n, d);
        t.c.emplace(s.tuples[col], 1);
        for (const auto& [w, v] : dec_inv(t).c) s.a[s.word_index.at(w)][col] = v;
    }
    s.solver = LinSolver(s.a);
    auto [it, fresh] = cache.emplace(key, std::move(s));
    (void)fresh;
    return it->second;
}

void require_block_shape(const PolyMould& m, const char* who) {
    if (m.fam.kind != FamilyTag::TruncSer)
        throw std::invalid_argument(std::string(who) + ": needs a TruncSer polymould");
    for (int b = 0; b < m.blocks(); ++b)
        if (m.gams[b] != alphabet_labels(b + 1))
            throw std::invalid_argument(std::string(who) + ": block alphabets are not k1..");
}

std::vector<Rat> integral_primitive(const std::vector<Rat>& v) {
    mpz_class l = 1;
    for (const auto& q : v) {
        mpz_class d = q.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (const auto& q : v) {
        mpz_class num = q.get_num() * (l / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        ints.push_back(num);
    }
    if (g == 0) g = 1;
    int lead = 0;
    std::vector<Rat> out;
    for (const auto& num : ints) {
        mpz_class w = num / g;
        if (lead == 0 && w != 0) lead = w > 0 ? 1 : -1;
        out.push_back(Rat(w));
    }
    if (lead < 0)
        for (auto& q : out) q = -q;
    return out;
}

}  // namespace

int braid_gen_index(int i, int j) {
    if (i < 0 || i >= j) throw std::invalid_argument("braid_gen_index: need 0 <= i < j");
    return j * (j - 1) / 2 + i;
}

std::pair<int, int> braid_gen_pair(int idx) {
    if (idx < 0) throw std::invalid_argument("braid_gen_pair: negative index");
    int j = 1;
    while ((j + 1) * j / 2 <= idx) ++j;
    return {idx - j * (j - 1) / 2, j};
}

int braid_gen_level(int idx) { return braid_gen_pair(idx).second; }

std::string braid_gen_str(int idx) {
    auto [i, j] = braid_gen_pair(idx);
    return "t" + std::to_string(i) + std::to_string(j);
}

BraidElement braid_zero(int n, int max_degree) {
    if (n < 2) throw std::invalid_argument("braid_zero: need at least two strands");
    if (max_degree < 0) throw std::invalid_argument("braid_zero: negative degree bound");
    return BraidElement{n, max_degree, {}};
}

BraidElement braid_one(int n, int max_degree) {
    BraidElement x = braid_zero(n, max_degree);
    x.c.emplace(BWord{}, 1);
    return x;
}

BraidElement braid_gen(int n, int max_degree, int i, int j) {
    BraidElement x = braid_zero(n, max_degree);
    if (j >= n) throw std::invalid_argument("braid_gen: strand out of range");
    if (max_degree >= 1) x.c.emplace(BWord{braid_gen_index(i, j)}, 1);
    return x;
}

BraidElement braid_center(int n, int max_degree) {
    BraidElement x = braid_zero(n, max_degree);
    if (max_degree >= 1)
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) x.c.emplace(BWord{braid_gen_index(i, j)}, 1);
    return x;
}

void braid_add_term(BraidElement& x, const std::vector<int>& word, const Rat& v) {
    check_word(x, word, "braid_add_term");
    if (v == 0 || static_cast<int>(word.size()) > x.max_degree) return;
    for (const auto& [w, c] : normal_form(word)) {
        auto it = x.c.find(w);
        if (it == x.c.end()) {
            x.c.emplace(w, c * v);
        } else {
            it->second += c * v;
            if (it->second == 0) x.c.erase(it);
        }
    }
}

BraidElement braid_add(const BraidElement& a, const BraidElement& b) {
    require_same(a, b, "braid_add");
    BraidElement out = braid_zero(a.n, std::min(a.max_degree, b.max_degree));
    for (const auto& [w, v] : a.c)
        if (static_cast<int>(w.size()) <= out.max_degree) out.c.emplace(w, v);
    for (const auto& [w, v] : b.c) {
        if (static_cast<int>(w.size()) > out.max_degree) continue;
        auto it = out.c.find(w);
        if (it == out.c.end()) {
            out.c.emplace(w, v);
        } else {
            it->second += v;
            if (it->second == 0) out.c.erase(it);
        }
    }
    return out;
}

BraidElement braid_sub(const BraidElement& a, const BraidElement& b) {
    return braid_add(a, braid_neg(b));
}

BraidElement braid_neg(const BraidElement& a) { return braid_scale(a, -1); }

BraidElement braid_scale(const BraidElement& a, const Rat& v) {
    BraidElement out = braid_zero(a.n, a.max_degree);
    if (v == 0) return out;
    for (const auto& [w, q] : a.c) out.c.emplace(w, q * v);
    return out;
}

BraidElement braid_mul(const BraidElement& a, const BraidElement& b) {
    require_same(a, b, "braid_mul");
    BraidElement out = braid_zero(a.n, std::min(a.max_degree, b.max_degree));
    for (const auto& [wa, va] : a.c) {
        if (static_cast<int>(wa.size()) > out.max_degree) continue;
        for (const auto& [wb, vb] : b.c) {
            if (static_cast<int>(wa.size() + wb.size()) > out.max_degree) continue;
            BWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            braid_add_term(out, w, va * vb);
        }
    }
    return out;
}

BraidElement braid_commutator(const BraidElement& a, const BraidElement& b) {
    return braid_sub(braid_mul(a, b), braid_mul(b, a));
}

BraidElement braid_truncate(const BraidElement& a, int max_degree) {
    BraidElement out = braid_zero(a.n, max_degree);
    for (const auto& [w, v] : a.c)
        if (static_cast<int>(w.size()) <= max_degree) out.c.emplace(w, v);
    return out;
}

BraidElement braid_degree_part(const BraidElement& a, int d) {
    BraidElement out = braid_zero(a.n, a.max_degree);
    for (const auto& [w, v] : a.c)
        if (static_cast<int>(w.size()) == d) out.c.emplace(w, v);
    return out;
}

std::vector<std::vector<int>> braid_basis_words(int n, int d) {
    int top = n * (n - 1) / 2;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int max_level) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int g = 0; g < top; ++g) {
            int lev = braid_gen_level(g);
            if (lev > max_level) continue;
            cur.push_back(g);
            self(self, left - 1, lev);
            cur.pop_back();
        }
    };
    rec(rec, d, n - 1);
    std::sort(out.begin(), out.end());
    return out;
}

TensorBraid braid_coproduct(const BraidElement& x) {
    TensorBraid t{x.n, x.max_degree, {}};
    for (const auto& [w, v] : x.c) {
        int len = static_cast<int>(w.size());
        for (unsigned mask = 0; mask < (1u << len); ++mask) {
            BWord left, right;
            for (int p = 0; p < len; ++p)
                (mask >> p & 1 ? left : right).push_back(w[p]);
            auto key = std::make_pair(std::move(left), std::move(right));
            auto it = t.c.find(key);
            if (it == t.c.end()) {
                t.c.emplace(std::move(key), v);
            } else {
                it->second += v;
                if (it->second == 0) t.c.erase(it);
            }
        }
    }
    return t;
}

BraidElement braid_dagger_defect(const BraidElement& x, int j) {
    if (j < 1 || j >= x.n) throw std::invalid_argument("braid_dagger_defect: bad strand");
    int g0j = braid_gen_index(0, j);
    BraidElement out = braid_zero(x.n, x.max_degree);
    for (const auto& [w, v] : x.c)
        for (size_t p = 0; p < w.size(); ++p) {
            if (w[p] != g0j) continue;
            BWord u;
            u.reserve(w.size() - 1);
            for (size_t q = 0; q < w.size(); ++q)
                if (q != p) u.push_back(w[q]);
            auto it = out.c.find(u);
            if (it == out.c.end()) {
                out.c.emplace(std::move(u), v);
            } else {
                it->second += v;
                if (it->second == 0) out.c.erase(it);
            }
        }
    return out;
}

bool braid_is_dagger(const BraidElement& x) {
    for (int j = 1; j < x.n; ++j)
        if (!braid_dagger_defect(x, j).c.empty()) return false;
    return true;
}

BraidElement braid_fstar(const BraidElement& x, const std::vector<int>& f, int n_target) {
    if (n_target < 2) throw std::invalid_argument("braid_fstar: bad target strand count");
    if (static_cast<int>(f.size()) != n_target)
        throw std::invalid_argument("braid_fstar: one entry per target strand expected");
    std::vector<std::vector<int>> fibre(x.n);
    for (int l = 0; l < n_target; ++l) {
        if (f[l] < -1 || f[l] >= x.n)
            throw std::invalid_argument("braid_fstar: entry names no source strand");
        if (f[l] >= 0) fibre[f[l]].push_back(l);
    }
    std::vector<BraidElement> images;
    for (int idx = 0; idx < x.n * (x.n - 1) / 2; ++idx) {
        auto [i, j] = braid_gen_pair(idx);
        BraidElement img = braid_zero(n_target, x.max_degree);
        for (int k : fibre[i])
            for (int l : fibre[j])
                img = braid_add(img, braid_gen(n_target, x.max_degree, std::min(k, l),
                                               std::max(k, l)));
        images.push_back(std::move(img));
    }
    return braid_apply_images(x, images, n_target);
}

BraidElement braid_flip(const BraidElement& x) {
    int n = x.n;
    std::vector<BraidElement> images;
    for (int idx = 0; idx < n * (n - 1) / 2; ++idx) {
        auto [i, j] = braid_gen_pair(idx);
        if (i > 0) {
            images.push_back(braid_gen(n, x.max_degree, n - j, n - i));
        } else {
            BraidElement img = braid_zero(n, x.max_degree);
            for (int k = 0; k < n; ++k) {
                if (k == n - j) continue;
                img = braid_sub(img, braid_gen(n, x.max_degree, std::min(k, n - j),
                                               std::max(k, n - j)));
            }
            images.push_back(std::move(img));
        }
    }
    return braid_apply_images(x, images, n);
}

BraidElement braid_subst(const NCSeries& h, const std::vector<BraidElement>& images) {
    if (images.size() != static_cast<size_t>(h.gam.size()) + 1)
        throw std::invalid_argument("braid_subst: one image per letter code expected");
    for (const auto& im : images)
        if (im.n != images[0].n || im.max_degree != images[0].max_degree)
            throw std::invalid_argument("braid_subst: image spaces disagree");
    BraidElement out = braid_zero(images[0].n, images[0].max_degree);
    for (const auto& [w, v] : h.c) {
        BraidElement cur = braid_one(out.n, out.max_degree);
        for (int code : w) cur = braid_mul(cur, images[code]);
        out = braid_add(out, braid_scale(cur, v));
    }
    return out;
}

BraidElement ev_subsets(const NCSeries& phi, int n, int max_degree,
                        const std::vector<int>& s0, const std::vector<int>& s1,
                        const std::vector<int>& s2) {
    if (phi.gam.size() != 1)
        throw std::invalid_argument("ev_subsets: needs the two-letter series alphabet");
    std::vector<int> seen(n, 0);
    for (const auto* s : {&s0, &s1, &s2})
        for (int strand : *s) {
            if (strand < 0 || strand >= n)
                throw std::invalid_argument("ev_subsets: strand out of range");
            if (seen[strand]++)
                throw std::invalid_argument("ev_subsets: subsets overlap");
        }
    BraidElement a = braid_zero(n, max_degree);
    for (int i : s0)
        for (int j : s1)
            a = braid_add(a, braid_gen(n, max_degree, std::min(i, j), std::max(i, j)));
    BraidElement b = braid_zero(n, max_degree);
    for (int i : s1)
        for (int j : s2)
            b = braid_add(b, braid_gen(n, max_degree, std::min(i, j), std::max(i, j)));
    return braid_subst(phi, {a, b});
}

DecTensor dec_zero(int n, int max_degree) {
    if (n < 3) throw std::invalid_argument("dec_zero: need at least three strands");
    if (max_degree < 0) throw std::invalid_argument("dec_zero: negative degree bound");
    return DecTensor{n, max_degree, {}};
}

DecTensor dec_tensor_of(const std::vector<NCSeries>& factors, int n, int max_degree) {
    DecTensor t = dec_zero(n, max_degree);
    if (static_cast<int>(factors.size()) != n - 2)
        throw std::invalid_argument("dec_tensor_of: one factor per block expected");
    for (int b = 0; b < n - 2; ++b)
        if (factors[b].gam.size() != b + 1)
            throw std::invalid_argument("dec_tensor_of: block alphabet mismatch");
    std::vector<NCWord> key(n - 2);
    auto rec = [&](auto&& self, int b, int used, const Rat& coef) -> void {
        if (b == n - 2) {
            auto it = t.c.find(key);
            if (it == t.c.end()) {
                t.c.emplace(key, coef);
            } else {
                it->second += coef;
                if (it->second == 0) t.c.erase(it);
            }
            return;
        }
        for (const auto& [w, v] : factors[b].c) {
            if (!w.empty() && w[0] == 0) continue;
            if (used + static_cast<int>(w.size()) > max_degree) continue;
            key[b] = w;
            self(self, b + 1, used + static_cast<int>(w.size()), coef * v);
        }
    };
    rec(rec, 0, 0, Rat(1));
    return t;
}

BraidElement dec_inv(const DecTensor& t) {
    BraidElement out = braid_zero(t.n, t.max_degree);
    for (const auto& [key, v] : t.c) {
        BComb acc;
        acc.emplace(BWord{}, 1);
        for (int b = 0; b < t.n - 2; ++b) {
            if (key[b].empty()) continue;
            BComb next;
            for (const auto& [wa, va] : acc)
                for (const auto& [wb, vb] : block_image(b, key[b])) {
                    BWord w = wa;
                    w.insert(w.end(), wb.begin(), wb.end());
                    next[std::move(w)] += va * vb;
                }
            acc = std::move(next);
        }
        for (const auto& [w, c] : acc) braid_add_term(out, w, c * v);
    }
    return out;
}

DecTensor braid_dec(const BraidElement& x) {
    if (!braid_is_dagger(x))
        throw std::invalid_argument("braid_dec: input is not dagger");
    DecTensor t = dec_zero(x.n, x.max_degree);
    for (int d = 0; d <= x.max_degree; ++d) {
        BraidElement part = braid_degree_part(x, d);
        if (part.c.empty()) continue;
        const DecSlice& s = dec_slice(x.n, d);
        std::vector<Rat> rhs = coords_of_degree(part, d, s.word_index);
        std::vector<Rat> lam;
        if (!s.solver.solve(rhs, lam))
            throw std::invalid_argument("braid_dec: no preimage at degree " +
                                        std::to_string(d));
        for (size_t r = 0; r < s.a.size(); ++r) {
            Rat acc = 0;
            for (size_t cidx = 0; cidx < lam.size(); ++cidx)
                if (lam[cidx] != 0) acc += s.a[r][cidx] * lam[cidx];
            if (acc != rhs[r])
                throw std::invalid_argument("braid_dec: residual at degree " +
                                            std::to_string(d));
        }
        for (size_t cidx = 0; cidx < lam.size(); ++cidx)
            if (lam[cidx] != 0) t.c.emplace(s.tuples[cidx], lam[cidx]);
    }
    return t;
}

BraidElement braid_rev(const BraidElement& x) {
    if (x.n != 4) throw std::invalid_argument("braid_rev: four strands only");
    int d = x.max_degree;
    auto g = [&](int i, int j) { return braid_gen(4, d, i, j); };
    std::vector<std::vector<BraidElement>> images(2);
    images[0] = {braid_neg(braid_add(g(0, 2), g(1, 2))), g(1, 2)};
    images[1] = {braid_neg(braid_add(braid_add(g(0, 3), g(1, 3)), g(2, 3))), g(2, 3),
                 g(1, 3)};
    DecTensor t = braid_dec(x);
    BraidElement out = braid_zero(4, d);
    for (const auto& [key, v] : t.c) {
        BraidElement cur = braid_one(4, d);
        for (int b = 0; b < 2; ++b) {
            if (key[b].empty()) continue;
            NCSeries s = nc_zero(alphabet_labels(b + 1), d);
            nc_set(s, key[b], 1);
            cur = braid_mul(cur, braid_subst(nc_dagger_extend(s), images[b]));
        }
        out = braid_add(out, braid_scale(cur, v));
    }
    return out;
}

PolyMould braid_madec(const BraidElement& x) {
    int n = x.n, d = x.max_degree;
    if (n < 3) throw std::invalid_argument("braid_madec: need at least three strands");
    DecTensor t = braid_dec(x);
    std::vector<Alphabet> gams;
    std::vector<int> lens;
    for (int b = 0; b < n - 2; ++b) {
        gams.push_back(alphabet_labels(b + 1));
        lens.push_back(d);
    }
    PolyMould out = pm_zero(FamilyTag::trunc_ser(d), gams, lens);
    for (const auto& [key, v] : t.c) {
        std::vector<Mould> ms;
        for (int b = 0; b < n - 2; ++b) {
            NCSeries s = nc_zero(alphabet_labels(b + 1), d);
            nc_set(s, key[b], 1);
            ms.push_back(ma_map(nc_dagger_extend(s)));
        }
        out = pm_add(out, pm_scale(poly_tensor(ms), v));
    }
    return out;
}

BraidElement braid_madec_inv(const PolyMould& m) {
    require_block_shape(m, "braid_madec_inv");
    int n = m.blocks() + 2;
    int d = m.fam.trunc;
    BraidElement out = braid_zero(n, d);
    for (const auto& [key, v] : m.c) {
        if (!v.den.empty())
            throw std::invalid_argument("braid_madec_inv: component is not polynomial");
        std::vector<int> zoff(n - 2, 0);
        int z_total = 0;
        for (int b = 0; b < n - 2; ++b) {
            zoff[b] = z_total;
            if (!key[b].empty()) z_total += static_cast<int>(key[b].size()) + 1;
        }
        std::vector<std::vector<long>> rows;
        for (int b = 0; b < n - 2; ++b)
            for (int i = 1; i <= static_cast<int>(key[b].size()); ++i) {
                std::vector<long> row(z_total, 0);
                row[zoff[b] + i - 1] = -1;
                row[zoff[b] + i] = 1;
                rows.push_back(std::move(row));
            }
        Poly vimo = p_substitute(v.num, rows, z_total);
        for (const auto& [mono, coef] : vimo.t) {
            BWord w;
            for (int b = 0; b < n - 2; ++b) {
                int r = static_cast<int>(key[b].size());
                if (r == 0) continue;
                for (int z = 0; z <= r; ++z) {
                    if (z > 0) w.push_back(braid_gen_index(key[b][z - 1] + 1, b + 2));
                    for (int e = 0; e < mono[zoff[b] + z]; ++e)
                        w.push_back(braid_gen_index(0, b + 2));
                }
            }
            if (static_cast<int>(w.size()) > d)
                throw std::invalid_argument(
                    "braid_madec_inv: degree plus length exceeds bound");
            braid_add_term(out, w, coef);
        }
    }
    return out;
}

PolyMould pm_diamond(const PolyMould& a, const PolyMould& b) {
    return braid_madec(braid_mul(braid_madec_inv(a), braid_madec_inv(b)));
}

PolyMould pm_flip(const PolyMould& m) {
    return braid_madec(braid_flip(braid_madec_inv(m)));
}

PolyMould pm_rev(const PolyMould& m) {
    return braid_madec(braid_rev(braid_madec_inv(m)));
}

PolyMould mould_ev_subsets(const Mould& m, int n, int max_degree,
                           const std::vector<int>& s0, const std::vector<int>& s1,
                           const std::vector<int>& s2) {
    return series_ev_subsets(ma_inverse(m), n, max_degree, s0, s1, s2);
}

PolyMould series_ev_subsets(const NCSeries& psi, int n, int max_degree,
                            const std::vector<int>& s0, const std::vector<int>& s1,
                            const std::vector<int>& s2) {
    return braid_madec(ev_subsets(psi, n, max_degree, s0, s1, s2));
}

BraidElement pentagon_defect(const NCSeries& phi, const NCSeries& psi, int max_degree) {
    auto ev = [&](const NCSeries& h, std::vector<int> a, std::vector<int> b,
                  std::vector<int> c) {
        return ev_subsets(h, 4, max_degree, a, b, c);
    };
    BraidElement lhs = braid_mul(ev(phi, {0, 1}, {2}, {3}), ev(phi, {0}, {1}, {2, 3}));
    BraidElement rhs = braid_mul(
        braid_mul(ev(phi, {0}, {1}, {2}), ev(phi, {0}, {1, 2}, {3})),
        ev(psi, {1}, {2}, {3}));
    return braid_sub(lhs, rhs);
}

PolyMould pentagon_residual(const Mould& m, const NCSeries& psi) {
    RatFun unit = mould_get(m, {});
    if (!rf_is_const(unit) || rf_const_value(unit) != 1)
        throw std::invalid_argument("pentagon_residual: mould needs unit empty component");
    if (nc_get(psi, {}) != 1)
        throw std::invalid_argument("pentagon_residual: psi needs constant term 1");
    NCSeries phi = ma_inverse(m);
    return braid_madec(pentagon_defect(phi, psi, phi.max_degree));
}

Rat astr_coeff_f1f0(const Rat& mu) { return -mu * mu / 24; }

Rat astr_coeff_f1f0_alt(const Rat& mu) { return mu * mu / 24; }

bool is_astr(const NCSeries& phi, const Rat& mu) {
    if (!is_group_like(phi)) return false;
    if (nc_get(phi, {1, 0}) != astr_coeff_f1f0(mu)) return false;
    return pentagon_defect(phi, phi, phi.max_degree).c.empty();
}

GrtSolution grt_solve(int degree, const NCSeries& lower) {
    if (degree < 1) throw std::invalid_argument("grt_solve: degree must be positive");
    if (lower.gam.size() != 1)
        throw std::invalid_argument("grt_solve: needs the two-letter series alphabet");
    NCSeries low = nc_zero(lower.gam, degree);
    for (const auto& [w, v] : lower.c)
        if (static_cast<int>(w.size()) < degree) nc_set(low, w, v);
    if (nc_get(low, {}) != 1)
        throw std::invalid_argument("grt_solve: lower part needs constant term 1");

    auto basis = braid_basis_words(4, degree);
    std::map<BWord, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

    GrtSolution sol;
    sol.degree = degree;
    for (const auto& lw : lyndon_words(2, degree))
        if (static_cast<int>(lw.size()) == degree) sol.basis_words.push_back(lw);

    auto lin = [&](const NCSeries& sigma) {
        auto ev = [&](std::vector<int> a, std::vector<int> b, std::vector<int> c) {
            return ev_subsets(sigma, 4, degree, a, b, c);
        };
        BraidElement acc = braid_add(ev({0, 1}, {2}, {3}), ev({0}, {1}, {2, 3}));
        acc = braid_sub(acc, ev({0}, {1}, {2}));
        acc = braid_sub(acc, ev({0}, {1, 2}, {3}));
        acc = braid_sub(acc, ev({1}, {2}, {3}));
        return acc;
    };

    std::vector<std::vector<Rat>> a(basis.size(),
                                    std::vector<Rat>(sol.basis_words.size(), Rat(0)));
    for (size_t col = 0; col < sol.basis_words.size(); ++col) {
        NCSeries sigma = lyndon_bracket(lower.gam, degree, sol.basis_words[col]);
        auto coords = coords_of_degree(braid_degree_part(lin(sigma), degree), degree, index);
        for (size_t r = 0; r < basis.size(); ++r) a[r][col] = coords[r];
    }

    BraidElement defect =
        braid_degree_part(pentagon_defect(low, low, degree), degree);
    std::vector<Rat> rhs = coords_of_degree(defect, degree, index);
    for (auto& q : rhs) q = -q;

    LinSolver solver(a);
    std::vector<Rat> part;
    sol.consistent = solver.solve(rhs, part);
    if (sol.consistent) sol.particular = std::move(part);
    sol.kernel = solver.kernel();
    return sol;
}

NCSeries grt_element(const GrtSolution& s, const std::vector<Rat>& coords,
                     const Alphabet& gam, int max_degree) {
    if (coords.size() != s.basis_words.size())
        throw std::invalid_argument("grt_element: coordinate count mismatch");
    NCSeries out = nc_zero(gam, max_degree);
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        out = nc_add(out, nc_scale(lyndon_bracket(gam, max_degree, s.basis_words[i]),
                                   coords[i]));
    }
    return out;
}

NCSeries grt_representative(const GrtSolution& s, const Alphabet& gam, int max_degree) {
    if (s.kernel.empty())
        throw std::invalid_argument("grt_representative: the kernel is trivial");
    return grt_element(s, integral_primitive(s.kernel[0]), gam, max_degree);
}

nlohmann::json braid_to_json(const BraidElement& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (int d = 0; d <= x.max_degree; ++d) {
        nlohmann::json words = nlohmann::json::array();
        nlohmann::json coords = nlohmann::json::array();
        for (const auto& [w, v] : x.c) {
            if (static_cast<int>(w.size()) != d) continue;
            nlohmann::json jw = nlohmann::json::array();
            for (int g : w) {
                auto [i, j] = braid_gen_pair(g);
                jw.push_back({i, j});
            }
            words.push_back(std::move(jw));
            coords.push_back(rat_str(v));
        }
        if (!words.empty())
            terms.push_back({{"degree", d}, {"coords", std::move(coords)},
                             {"basis_words", std::move(words)}});
    }
    return {{"n", x.n}, {"terms", std::move(terms)}};
}

}  // namespace moulds
