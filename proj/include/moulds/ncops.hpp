#pragma once

#include "moulds/mould_ops.hpp"
#include "moulds/ncseries.hpp"

namespace moulds {

// Series-to-mould layer map.  The length-r component collects, for each word
// with no leading distinguished letter, the coefficient times the product of
// prefix-sum powers read off the gaps.  Input must lie in the kernel of the
// distinguished derivation; output family is TruncSer(max_degree).
Mould ma_map(const NCSeries& h);
// Inverse map: re-expands every polynomial component in difference
// variables and reads off word coefficients.  Requires a TruncSer mould with
// polynomial components.
NCSeries ma_inverse(const Mould& m);
// Tensor-square version, computed slotwise on word pairs.
DiMould dima_map(const TensorNC& t);
// The unique derivation-kernel series whose coefficients on words without a
// leading distinguished letter match h; the other words of h are ignored.
NCSeries nc_dagger_extend(const NCSeries& h);

// Letter-relabelling endomorphism: the distinguished letter is fixed, the
// letter tagged s is retagged by the product sig*s.  Needs an abelian group.
NCSeries t_sigma_act(const NCSeries& psi, int sig);
// Derivation killing the distinguished letter and sending the letter tagged
// s to the commutator of t_s(psi) with it.
NCSeries d_psi(const NCSeries& psi, const NCSeries& phi);
// s with subscript sub applied to arg: arg*sub + d_sub(arg).
NCSeries s_phi(const NCSeries& arg, const NCSeries& sub);
// Bracket s_psi(phi) - s_phi(psi).
NCSeries ihara_bracket(const NCSeries& psi, const NCSeries& phi);
// Sum over k of (1/k!) s_phi^k(1); needs zero constant term, dagger input.
NCSeries exp_circledast(const NCSeries& phi);

// Substitution endomorphism keeping the distinguished letter and conjugating
// the letter tagged s by t_s(psi); psi must have constant term 1.
NCSeries kappa(const NCSeries& psi, const NCSeries& phi);
// Twisted product kappa_psi(phi) * psi.
NCSeries circledast(const NCSeries& psi, const NCSeries& phi);

// Sign flip of the distinguished letter.
NCSeries nc_iota0(const NCSeries& phi);

// Weight-truncated series in letters Y_1, Y_2, ... with concatenation
// product; keys are the exponent tuples (k_1..k_r), each k_i >= 1.
struct YSeries {
    int max_weight = 0;
    std::map<std::vector<int>, Rat> c;

    bool operator==(const YSeries& o) const {
        return max_weight == o.max_weight && c == o.c;
    }
    bool operator!=(const YSeries& o) const { return !(*this == o); }
};

struct TensorY {
    int max_weight = 0;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> c;

    bool operator==(const TensorY& o) const {
        return max_weight == o.max_weight && c == o.c;
    }
    bool operator!=(const TensorY& o) const { return !(*this == o); }
};

int y_weight(const std::vector<int>& yw);
YSeries y_zero(int max_weight);
YSeries y_one(int max_weight);
void y_set(YSeries& s, const std::vector<int>& yw, const Rat& v);
Rat y_get(const YSeries& s, const std::vector<int>& yw);
YSeries y_add(const YSeries& a, const YSeries& b);
YSeries y_sub(const YSeries& a, const YSeries& b);
YSeries y_scale(const YSeries& a, const Rat& v);
YSeries y_mul(const YSeries& a, const YSeries& b);
YSeries y_exp(const YSeries& a);

TensorY ty_zero(int max_weight);
void ty_set(TensorY& t, const std::vector<int>& w1, const std::vector<int>& w2, const Rat& v);
Rat ty_get(const TensorY& t, const std::vector<int>& w1, const std::vector<int>& w2);
TensorY ty_add(const TensorY& a, const TensorY& b);
TensorY ty_scale(const TensorY& a, const Rat& v);
TensorY ty_mul(const TensorY& a, const TensorY& b);
TensorY ty_tensor(const YSeries& a, const YSeries& b);

// The rest of this header works over the two-letter series alphabet (the
// label alphabet must have exactly one symbol).

// Words with a leading distinguished letter go to zero; otherwise each
// tagged letter with its following run of a distinguished letters becomes
// Y_{a+1}.
YSeries pi_Y(const NCSeries& phi);
// exp of sum_{k>=2} <phi | (tagged)(distinguished)^{k-1}> / k times
// the k-th concatenation power of Y_1.  This is the correction that turns
// the block-coded image of phi into a stuffle character: the coefficients
// it supplies on powers of Y_1 are exactly the ones forced by the product
// rule with contractions once the single-letter coefficient is set to zero.
YSeries phi_corr(const NCSeries& phi);
// pi_Y(phi) * phi_corr(phi).
YSeries phi_star(const NCSeries& phi);
// Y_n -> Y_n(x)1 + 1(x)Y_n + sum Y_i(x)Y_{n-i}, extended multiplicatively.
TensorY delta_star(const YSeries& s);

// Lower-layer companion of ma_map: the length-r component reads the gap
// exponents onto reversed plain variable powers.  Dagger input required.
Mould mi_map(const NCSeries& phi);
// Lower-layer expansion of a Y-series: <s|k_1..k_r> times
// x_1^{k_r-1} ... x_r^{k_1-1}.
Mould mi_bar_map(const YSeries& s);
DiMould dimi_bar_map(const TensorY& t);

// Constant mould whose length-m value is the m-th coefficient of
// exp(-sum_{k>=2} zeta(k)/k t^k) with zeta(k) the negated coefficient
// on (tagged)(distinguished)^{k-1}.
Mould mini_mould(const NCSeries& phi, FamilyTag fam, int maxlen);

// Constant term 1, group-like, vanishing single-letter coefficients, and
// delta_star-group-likeness of phi_star; the 0-variant also needs a zero
// coefficient on (tagged)(distinguished).
bool is_dmr(const NCSeries& phi);
bool is_dmr0(const NCSeries& phi);

}  // namespace moulds
