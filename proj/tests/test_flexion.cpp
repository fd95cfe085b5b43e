#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "moulds/flexion.hpp"

using namespace moulds;

namespace {

Poly random_poly(std::mt19937_64& rng, int nv, int deg) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> e(0, deg);
    Poly p = p_zero(nv);
    for (int t = 0; t < 3; ++t) {
        std::vector<int> mono(nv, 0);
        int budget = deg;
        for (int i = 0; i < nv; ++i) {
            int k = e(rng) % (budget + 1);
            mono[i] = k;
            budget -= k;
        }
        p = p_add(p, Poly{nv, {{mono, Rat(coef(rng))}}});
    }
    return p;
}

Mould random_mould(std::mt19937_64& rng, FamilyTag fam, const Alphabet& gam, int maxlen,
                   const Rat& empty_value) {
    Mould m = mould_zero(fam, gam, maxlen);
    mould_set(m, {}, rf_const(0, empty_value));
    for (int len = 1; len <= maxlen; ++len)
        for (const auto& key : label_tuples(gam, len))
            mould_set(m, key, rf_from_poly(random_poly(rng, len, 2)));
    return m;
}

// Independent census of the garit cut patterns: compositions of m into 3s
// parts with every middle part positive and no empty junction between
// consecutive blocks.
long brute_pattern_count(int m) {
    long total = 0;
    for (int s = 1; 3 * s >= 0 && s <= m; ++s) {
        std::vector<int> parts(3 * s, 0);
        auto rec = [&](auto&& self, int idx, int rem) -> void {
            if (idx == 3 * s) {
                if (rem != 0) return;
                for (int i = 0; i < s; ++i)
                    if (parts[3 * i + 1] == 0) return;
                for (int i = 0; i + 1 < s; ++i)
                    if (parts[3 * i + 2] == 0 && parts[3 * i + 3] == 0) return;
                ++total;
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                parts[idx] = v;
                self(self, idx + 1, rem - v);
            }
        };
        rec(rec, 0, m);
    }
    return total;
}

RatFun sub2(const RatFun& v, std::vector<std::vector<long>> rows) {
    return rf_substitute(v, rows, 2);
}

}  // namespace

TEST_CASE("arit vanishes at short lengths and is linear in the actor") {
    std::mt19937_64 rng(31);
    Alphabet z2 = alphabet_zn(2);
    Mould a = random_mould(rng, FamilyTag::pol(), z2, 3, 0);
    Mould b = random_mould(rng, FamilyTag::pol(), z2, 3, 0);
    Mould c = random_mould(rng, FamilyTag::pol(), z2, 3, 0);
    Mould z = mould_zero(FamilyTag::pol(), z2, 3);

    Mould d = mould_arit(b, a);
    CHECK(mould_get(d, {}).is_zero());
    for (const auto& t : label_tuples(z2, 1)) CHECK(mould_get(d, t).is_zero());
    CHECK(mould_arit(z, a) == z);
    CHECK(mould_arit(b, z) == z);
    CHECK(mould_arit(mould_add(b, c), a) == mould_add(mould_arit(b, a), mould_arit(c, a)));
}

TEST_CASE("arit length 2 in closed form, plain alphabet") {
    std::mt19937_64 rng(32);
    Alphabet one = alphabet_zn(1);
    Mould a = random_mould(rng, FamilyTag::pol(), one, 2, 0);
    Mould b = random_mould(rng, FamilyTag::pol(), one, 2, 0);
    RatFun a1 = mould_get(a, {0});
    RatFun b1 = mould_get(b, {0});
    RatFun want = rf_mul(sub2(a1, {{1, 1}}),
                         rf_sub(sub2(b1, {{1, 0}}), sub2(b1, {{0, 1}})));
    CHECK(mould_get(mould_arit(b, a), {0, 0}) == want);
}

TEST_CASE("arit length 2 in closed form, labelled") {
    std::mt19937_64 rng(33);
    Alphabet z4 = alphabet_zn(4);
    Mould a = random_mould(rng, FamilyTag::pol(), z4, 2, 0);
    Mould b = random_mould(rng, FamilyTag::pol(), z4, 2, 0);
    Mould d = mould_arit(b, a);
    for (int s1 = 0; s1 < 4; ++s1)
        for (int s2 = 0; s2 < 4; ++s2) {
            RatFun want = rf_sub(
                rf_mul(sub2(mould_get(a, {s2}), {{1, 1}}),
                       sub2(mould_get(b, {z4.mul(s1, z4.invert(s2))}), {{1, 0}})),
                rf_mul(sub2(mould_get(a, {s1}), {{1, 1}}),
                       sub2(mould_get(b, {z4.mul(z4.invert(s1), s2)}), {{0, 1}})));
            CHECK(mould_get(d, {s1, s2}) == want);
        }
}

TEST_CASE("ari is an antisymmetric bracket satisfying Jacobi") {
    std::mt19937_64 rng(34);
    Alphabet z2 = alphabet_zn(2);
    Mould a = random_mould(rng, FamilyTag::pol(), z2, 4, 0);
    Mould b = random_mould(rng, FamilyTag::pol(), z2, 4, 0);
    Mould z4len = mould_zero(FamilyTag::pol(), z2, 4);
    CHECK(mould_ari(a, a) == z4len);
    CHECK(mould_ari(a, b) == mould_neg(mould_ari(b, a)));

    Mould aj = random_mould(rng, FamilyTag::pol(), z2, 3, 0);
    Mould bj = random_mould(rng, FamilyTag::pol(), z2, 3, 0);
    Mould cj = random_mould(rng, FamilyTag::pol(), z2, 3, 0);
    Mould jac = mould_ari(aj, mould_ari(bj, cj));
    jac = mould_add(jac, mould_ari(bj, mould_ari(cj, aj)));
    jac = mould_add(jac, mould_ari(cj, mould_ari(aj, bj)));
    CHECK(jac == mould_zero(FamilyTag::pol(), z2, 3));

    Mould bad = random_mould(rng, FamilyTag::pol(), z2, 2, 1);
    CHECK_THROWS_AS(mould_ari(bad, b), std::invalid_argument);
}

TEST_CASE("garit cut pattern census") {
    CHECK(garit_pattern_count(1) == 1);
    CHECK(garit_pattern_count(2) == 3);
    CHECK(garit_pattern_count(3) == 8);
    for (int m = 1; m <= 6; ++m) CHECK(garit_pattern_count(m) == brute_pattern_count(m));
}

TEST_CASE("garit unit action and short components") {
    std::mt19937_64 rng(35);
    Alphabet z2 = alphabet_zn(2);
    Mould a = random_mould(rng, FamilyTag::pol(), z2, 3, 2);
    Mould u = mould_unit(FamilyTag::pol(), z2, 3);
    CHECK(mould_garit(u, a) == a);

    Mould b = random_mould(rng, FamilyTag::pol(), z2, 3, 1);
    Mould g = mould_garit(b, a);
    CHECK(mould_get(g, {}) == mould_get(a, {}));
    for (const auto& t : label_tuples(z2, 1)) CHECK(mould_get(g, t) == mould_get(a, t));

    Mould bad = random_mould(rng, FamilyTag::pol(), z2, 2, 3);
    CHECK_THROWS_AS(mould_garit(bad, a), std::invalid_argument);
}

TEST_CASE("garit length 2 in closed form, plain alphabet") {
    std::mt19937_64 rng(36);
    Alphabet one = alphabet_zn(1);
    Mould a = random_mould(rng, FamilyTag::pol(), one, 2, 1);
    Mould b = random_mould(rng, FamilyTag::pol(), one, 2, 1);
    RatFun a1 = mould_get(a, {0});
    RatFun b1 = mould_get(b, {0});
    // identity cut, stretched cut with a b factor, stretched cut with a
    // product-inverse factor (the length-1 inverse is just the negation)
    RatFun want = rf_add(mould_get(a, {0, 0}),
                         rf_mul(sub2(a1, {{1, 1}}),
                                rf_sub(sub2(b1, {{1, 0}}), sub2(b1, {{0, 1}}))));
    CHECK(mould_get(mould_garit(b, a), {0, 0}) == want);
}

TEST_CASE("gari unit laws and associativity") {
    std::mt19937_64 rng(37);
    Alphabet z2 = alphabet_zn(2);
    Mould u = mould_unit(FamilyTag::pol(), z2, 4);
    Mould a = random_mould(rng, FamilyTag::pol(), z2, 4, 1);
    Mould b = random_mould(rng, FamilyTag::pol(), z2, 4, 1);
    Mould c = random_mould(rng, FamilyTag::pol(), z2, 4, 1);
    CHECK(mould_gari(a, u) == a);
    CHECK(mould_gari(u, a) == a);
    CHECK(mould_gari(mould_gari(a, b), c) == mould_gari(a, mould_gari(b, c)));
}

TEST_CASE("gari inverse is two-sided and involutive") {
    std::mt19937_64 rng(38);
    Alphabet z2 = alphabet_zn(2);
    Mould u = mould_unit(FamilyTag::pol(), z2, 4);
    Mould b = random_mould(rng, FamilyTag::pol(), z2, 4, 1);
    Mould i = mould_invgari(b);
    CHECK(mould_gari(i, b) == u);
    CHECK(mould_gari(b, i) == u);
    CHECK(mould_invgari(mould_unit(FamilyTag::pol(), z2, 3)) ==
          mould_unit(FamilyTag::pol(), z2, 3));

    Mould s = random_mould(rng, FamilyTag::pol(), z2, 3, 1);
    CHECK(mould_invgari(mould_invgari(s)) == s);
}

TEST_CASE("garit respects the mould product") {
    std::mt19937_64 rng(39);
    Alphabet z2 = alphabet_zn(2);
    Mould a1 = random_mould(rng, FamilyTag::pol(), z2, 3, 2);
    Mould a2 = random_mould(rng, FamilyTag::pol(), z2, 3, -1);
    Mould b = random_mould(rng, FamilyTag::pol(), z2, 3, 1);
    CHECK(mould_garit(b, mould_mul(a1, a2)) ==
          mould_mul(mould_garit(b, a1), mould_garit(b, a2)));
}

TEST_CASE("preari, its exponential, and the bracket decomposition") {
    std::mt19937_64 rng(40);
    Alphabet z2 = alphabet_zn(2);
    Mould a = random_mould(rng, FamilyTag::pol(), z2, 4, 0);
    Mould b = random_mould(rng, FamilyTag::pol(), z2, 4, 0);
    CHECK(mould_ari(a, b) == mould_sub(mould_preari(a, b), mould_preari(b, a)));

    // right pre-Lie: the associator is symmetric in the last two slots
    Mould x = random_mould(rng, FamilyTag::pol(), z2, 3, 0);
    Mould y = random_mould(rng, FamilyTag::pol(), z2, 3, 0);
    Mould w = random_mould(rng, FamilyTag::pol(), z2, 3, 0);
    Mould lhs = mould_sub(mould_preari(x, mould_preari(y, w)),
                          mould_preari(mould_preari(x, y), w));
    Mould rhs = mould_sub(mould_preari(x, mould_preari(w, y)),
                          mould_preari(mould_preari(x, w), y));
    CHECK(lhs == rhs);

    Mould z = mould_zero(FamilyTag::pol(), z2, 3);
    CHECK(mould_expari(z) == mould_unit(FamilyTag::pol(), z2, 3));
    Mould off = random_mould(rng, FamilyTag::pol(), z2, 2, 1);
    CHECK_THROWS_AS(mould_expari(off), std::invalid_argument);

    // a constant length-1 seed exponentiates like a primitive element
    Alphabet one = alphabet_zn(1);
    Mould seed = mould_zero(FamilyTag::pol(), one, 4);
    mould_set(seed, {0}, rf_const(1, 3));
    Mould e = mould_expari(seed);
    Rat fact = 1, pw = 1;
    CHECK(mould_get(e, {}) == rf_const(0, 1));
    for (int m = 1; m <= 4; ++m) {
        fact *= m;
        pw *= 3;
        CHECK(mould_get(e, std::vector<int>(m, 0)) == rf_const(m, pw / fact));
    }
}

TEST_CASE("flexion operations keep the truncated family") {
    std::mt19937_64 rng(41);
    Alphabet z2 = alphabet_zn(2);
    FamilyTag t5 = FamilyTag::trunc_ser(5);
    Mould a = random_mould(rng, t5, z2, 3, 0);
    Mould b = random_mould(rng, t5, z2, 3, 0);
    Mould br = mould_ari(a, b);
    CHECK(br.fam == t5);
    CHECK(mould_ari(a, b) == mould_sub(mould_preari(a, b), mould_preari(b, a)));

    Mould g1 = random_mould(rng, t5, z2, 3, 1);
    Mould g2 = random_mould(rng, t5, z2, 3, 1);
    Mould u = mould_unit(t5, z2, 3);
    CHECK(mould_gari(mould_invgari(g1), g1) == u);
    CHECK(mould_gari(g1, mould_gari(g2, mould_invgari(g2))) == g1);
}

TEST_CASE("flexion actions need a label group") {
    std::mt19937_64 rng(42);
    Alphabet k2 = alphabet_labels(2);
    Mould a = mould_zero(FamilyTag::pol(), k2, 2);
    CHECK_THROWS_AS(mould_arit(a, a), std::invalid_argument);
}
