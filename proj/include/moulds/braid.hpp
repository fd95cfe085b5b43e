#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "moulds/ncops.hpp"

namespace moulds {

// Generators t_{ij} of the infinitesimal braid algebra, 0 <= i < j < n.
// The index j(j-1)/2 + i does not depend on n, and sorting by index groups
// the generators by their upper strand j ("level").
int braid_gen_index(int i, int j);
std::pair<int, int> braid_gen_pair(int idx);
int braid_gen_level(int idx);
std::string braid_gen_str(int idx);

// Element of the degree-truncated envelope of the braid Lie algebra on n
// strands.  Words are generator-index sequences kept in normal form: levels
// weakly decreasing left to right.  Distinct normal words are a basis
// (iterated semidirect splitting off the top level), so equality is
// structural.  The rewrite moving a letter right past a higher-level one
// adds the commutator, which lives entirely in the higher level:
// [t_ij, t_iq] = t_iq t_jq - t_jq t_iq, its negative for [t_ij, t_jq], and
// zero when the index pairs are disjoint.
struct BraidElement {
    int n = 0;
    int max_degree = 0;
    std::map<std::vector<int>, Rat> c;

    bool operator==(const BraidElement& o) const {
        return n == o.n && max_degree == o.max_degree && c == o.c;
    }
    bool operator!=(const BraidElement& o) const { return !(*this == o); }
};

BraidElement braid_zero(int n, int max_degree);
BraidElement braid_one(int n, int max_degree);
BraidElement braid_gen(int n, int max_degree, int i, int j);
// Sum of every generator; central, which the tests certify by reduction.
BraidElement braid_center(int n, int max_degree);

// Adds v times the normal form of an arbitrary word.
void braid_add_term(BraidElement& x, const std::vector<int>& word, const Rat& v);

BraidElement braid_add(const BraidElement& a, const BraidElement& b);
BraidElement braid_sub(const BraidElement& a, const BraidElement& b);
BraidElement braid_neg(const BraidElement& a);
BraidElement braid_scale(const BraidElement& a, const Rat& v);
BraidElement braid_mul(const BraidElement& a, const BraidElement& b);
BraidElement braid_commutator(const BraidElement& a, const BraidElement& b);
BraidElement braid_truncate(const BraidElement& a, int max_degree);
// Component of the given word length.
BraidElement braid_degree_part(const BraidElement& a, int d);

// Normal-form basis words of the degree-d slice, in map order.
std::vector<std::vector<int>> braid_basis_words(int n, int d);

struct TensorBraid {
    int n = 0;
    int max_degree = 0;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> c;

    bool operator==(const TensorBraid& o) const {
        return n == o.n && max_degree == o.max_degree && c == o.c;
    }
};

// Coproduct with primitive generators: a word splits over position subsets.
TensorBraid braid_coproduct(const BraidElement& x);

// Sum over occurrences of t_{0j} of the word with that letter removed;
// vanishing for every j = 1..n-1 is the dagger condition.
BraidElement braid_dagger_defect(const BraidElement& x, int j);
bool braid_is_dagger(const BraidElement& x);

// Substitution homomorphism attached to a fibration of strands: f has one
// entry per target strand, naming a source strand or -1 for a discarded
// one.  The source generator t_{ij} goes to the sum of t_{kl} over k in the
// fibre of i and l in the fibre of j.
BraidElement braid_fstar(const BraidElement& x, const std::vector<int>& f, int n_target);

// t_{ij} -> t_{n-j,n-i} for 0 < i < j, and t_{0j} -> -sum_k t_{k,n-j}.
BraidElement braid_flip(const BraidElement& x);

// Word code k goes to images[k]; all images share one algebra.
BraidElement braid_subst(const NCSeries& h, const std::vector<BraidElement>& images);

// phi(A, B) with A the sum of t_{ij} over s0 x s1 and B the sum over
// s1 x s2.  The subsets must be pairwise disjoint; the image is dagger
// whenever 0 is in s0 or in none of the subsets.
BraidElement ev_subsets(const NCSeries& phi, int n, int max_degree,
                        const std::vector<int>& s0, const std::vector<int>& s1,
                        const std::vector<int>& s2);

// Element of the tensor product of the per-block dagger spaces; block b
// (b = 0..n-3) is a word in the letters of the (b+2)-strand free factor,
// written with codes 0..b+1.  Keys are no-leading-zero words, which
// coordinatize daggers.
struct DecTensor {
    int n = 0;
    int max_degree = 0;
    std::map<std::vector<NCWord>, Rat> c;

    bool operator==(const DecTensor& o) const {
        return n == o.n && max_degree == o.max_degree && c == o.c;
    }
    bool operator!=(const DecTensor& o) const { return !(*this == o); }
};

DecTensor dec_zero(int n, int max_degree);
// Outer product of per-block dagger series, coordinatized by their
// no-leading-zero coefficients.
DecTensor dec_tensor_of(const std::vector<NCSeries>& factors, int n, int max_degree);

// Concatenated substitution: block b's code i becomes t_{i,b+2}, the blocks
// multiplied left to right after dagger extension of each key word.
BraidElement dec_inv(const DecTensor& t);
// Inverse on the dagger subspace by a cached per-degree linear solve.
DecTensor braid_dec(const BraidElement& x);

// Four-strand involution acting through the block decomposition: the
// two-letter block maps by (f0, f1) -> (-f0-f1, f1), the three-letter block
// by (f0, f1, f2) -> (-f0-f1-f2, f2, f1).
BraidElement braid_rev(const BraidElement& x);

// Layer map to the (n-2)-block polymould over the label alphabets
// 1..n-2, family TruncSer(max_degree); inverse reads per-block words off
// the components re-expanded in difference variables.
PolyMould braid_madec(const BraidElement& x);
BraidElement braid_madec_inv(const PolyMould& m);

// madec of the product of the preimages.
PolyMould pm_diamond(const PolyMould& a, const PolyMould& b);

PolyMould pm_flip(const PolyMould& m);
PolyMould pm_rev(const PolyMould& m);

// madec of the subset substitution of the series preimage of m (upper-layer
// polynomial mould over a one-symbol alphabet).
PolyMould mould_ev_subsets(const Mould& m, int n, int max_degree,
                           const std::vector<int>& s0, const std::vector<int>& s1,
                           const std::vector<int>& s2);
// Same with the series given directly.
PolyMould series_ev_subsets(const NCSeries& psi, int n, int max_degree,
                            const std::vector<int>& s0, const std::vector<int>& s1,
                            const std::vector<int>& s2);

// Left side minus right side of the four-strand pentagon
//   M^{01,2,3} . M^{0,1,23} = M^{0,1,2} . M^{0,12,3} . psi^{1,2,3}
// computed in the braid algebra and returned through the layer map.  m must
// have unit empty component and psi constant term 1.
PolyMould pentagon_residual(const Mould& m, const NCSeries& psi);
// The same defect before the layer map.
BraidElement pentagon_defect(const NCSeries& phi, const NCSeries& psi, int max_degree);

// Coefficient the two-letter pentagon theory pins at weight 2, and its
// sign-flipped companion (the source prints both conventions).
Rat astr_coeff_f1f0(const Rat& mu);
Rat astr_coeff_f1f0_alt(const Rat& mu);
// Group-like, pentagon defect zero, and the weight-2 coefficient matches mu.
bool is_astr(const NCSeries& phi, const Rat& mu);

// Degree-d slice of the five-term linearized pentagon: solutions sigma with
//   sigma^{01,2,3} + sigma^{0,1,23} - sigma^{0,1,2} - sigma^{0,12,3}
//     - sigma^{1,2,3} = -(degree-d defect of the lower part).
struct GrtSolution {
    int degree = 0;
    bool consistent = true;
    std::vector<NCWord> basis_words;          // Lyndon words over two letters
    std::vector<Rat> particular;              // coordinates; empty if inconsistent
    std::vector<std::vector<Rat>> kernel;     // homogeneous solution basis
};
GrtSolution grt_solve(int degree, const NCSeries& lower);

// Lie element with the given coordinates on the solution's bracket basis.
NCSeries grt_element(const GrtSolution& s, const std::vector<Rat>& coords,
                     const Alphabet& gam, int max_degree);
// First kernel vector, scaled integral with positive leading coordinate.
NCSeries grt_representative(const GrtSolution& s, const Alphabet& gam, int max_degree);

nlohmann::json braid_to_json(const BraidElement& x);

}  // namespace moulds
