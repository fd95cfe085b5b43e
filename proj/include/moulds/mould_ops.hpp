#pragma once

#include <string>
#include <vector>

#include "moulds/mould.hpp"
#include "moulds/words.hpp"

namespace moulds {

Mould mould_add(const Mould& a, const Mould& b);
Mould mould_sub(const Mould& a, const Mould& b);
Mould mould_neg(const Mould& a);
Mould mould_scale(const Mould& a, const Rat& c);

// (A x B)(x_1..x_m) = sum over cuts A(x_1..x_i) B(x_{i+1}..x_m), the second
// factor's component renamed from its own x_1..x_{m-i}.
Mould mould_mul(const Mould& a, const Mould& b);
// Two-sided product inverse; the empty component must be a nonzero constant.
Mould mould_inv_mul(const Mould& a);

// u_1 = x_m, u_i = x_{m+1-i} - x_{m+2-i}; the i-th source label is the
// product of the first m+1-i target labels.  Needs a group alphabet (or the
// one-symbol alphabet, where labels are untouched).  Re-expresses an
// upper-layer mould in the lower variable system; mould_swap_inv goes the
// other way, and the two form the classical layer involution.
Mould mould_swap(const Mould& a);
Mould mould_swap_inv(const Mould& a);
// Sign (-1)^length.
Mould mould_pari(const Mould& a);
// Reverses variables and labels together.
Mould mould_anti(const Mould& a);
// Negates every variable.
Mould mould_minus(const Mould& a);

PolyMould pm_add(const PolyMould& a, const PolyMould& b);
PolyMould pm_sub(const PolyMould& a, const PolyMould& b);
PolyMould pm_neg(const PolyMould& a);
PolyMould pm_scale(const PolyMould& a, const Rat& c);
// Blockwise product: every block is cut independently.
PolyMould pm_mul(const PolyMould& a, const PolyMould& b);
// Negates every variable in every block.
PolyMould pm_minus(const PolyMould& a);

// Renames v's variables to x_{offset+1}.. inside a width-nv ambient space.
RatFun rf_place(const RatFun& v, int offset, int nv);

PolyMould tensor(const Mould& a, const Mould& b);
PolyMould poly_tensor(const std::vector<Mould>& ms);

// The shuffle pairing as a two-block polymould:
// Sh(M)(w1; w2) = sum of M over interleavings of w1 and w2.  The starred
// version uses the quasi-shuffle with label products and divided differences.
// Entries with joint length beyond maxlen are not stored; compare with
// pm_equal under a total cap.
DiMould sh_map(const Mould& a);
DiMould sh_star_map(const Mould& a);

// Componentwise equality after truncating to the finer of the two families'
// levels (length m compares at degree N - m for TruncSer(N)).
bool mould_equal(const Mould& a, const Mould& b);
// Skips keys exceeding either side's block caps, or total length beyond
// total_cap when total_cap >= 0.
bool pm_equal(const PolyMould& a, const PolyMould& b, int total_cap = -1);

enum class SymKind { Alternal, Symmetral, Alternil, Symmetril };
std::string sym_kind_str(SymKind k);

struct SymWitness {
    bool ok = true;
    std::string detail;  // first failing pair, or the empty-component reason
};

// Pairwise symmetry test for every label pair with p, q >= 1 and
// p + q <= bound, plus the empty-component normalization (0 for the
// alternating kinds, 1 for the multiplicative ones).
SymWitness symmetry_check(SymKind k, const Mould& m, int bound);

}  // namespace moulds
