#pragma once

#include <map>
#include <random>
#include <utility>
#include <vector>

#include <json.hpp>

#include "moulds/words.hpp"

namespace moulds {

// Letters of the series alphabet: code 0 is the distinguished letter, code
// c >= 1 is the letter tagged by symbol c-1 of the label alphabet.
using NCWord = std::vector<int>;

// Degree-truncated noncommutative series with rational coefficients.
struct NCSeries {
    Alphabet gam;
    int max_degree = 0;
    std::map<NCWord, Rat> c;

    bool operator==(const NCSeries& o) const {
        return gam == o.gam && max_degree == o.max_degree && c == o.c;
    }
    bool operator!=(const NCSeries& o) const { return !(*this == o); }
};

// Truncated element of the two-fold tensor square, keyed by word pairs.
struct TensorNC {
    Alphabet gam;
    int max_degree = 0;
    std::map<std::pair<NCWord, NCWord>, Rat> c;

    bool operator==(const TensorNC& o) const {
        return gam == o.gam && max_degree == o.max_degree && c == o.c;
    }
    bool operator!=(const TensorNC& o) const { return !(*this == o); }
};

NCSeries nc_zero(const Alphabet& gam, int max_degree);
NCSeries nc_one(const Alphabet& gam, int max_degree);
// The single-letter series for code 0..gam.size().
NCSeries nc_letter(const Alphabet& gam, int max_degree, int code);

void nc_set(NCSeries& h, const NCWord& w, const Rat& v);
Rat nc_get(const NCSeries& h, const NCWord& w);

NCSeries nc_add(const NCSeries& a, const NCSeries& b);
NCSeries nc_sub(const NCSeries& a, const NCSeries& b);
NCSeries nc_neg(const NCSeries& a);
NCSeries nc_scale(const NCSeries& a, const Rat& v);
// Concatenation product, truncated to the finer degree bound.
NCSeries nc_mul(const NCSeries& a, const NCSeries& b);
NCSeries nc_commutator(const NCSeries& a, const NCSeries& b);
// Multiplicative inverse; the constant term must be nonzero.
NCSeries nc_inverse(const NCSeries& a);
// Substitution homomorphism: the word code k goes to images[k]; the images
// must share alphabet and degree bound, which the result inherits.
NCSeries nc_subst(const NCSeries& a, const std::vector<NCSeries>& images);
// Exponential; the constant term must vanish.
NCSeries nc_exp(const NCSeries& a);

TensorNC tnc_zero(const Alphabet& gam, int max_degree);
void tnc_set(TensorNC& t, const NCWord& w1, const NCWord& w2, const Rat& v);
Rat tnc_get(const TensorNC& t, const NCWord& w1, const NCWord& w2);
TensorNC tnc_add(const TensorNC& a, const TensorNC& b);
TensorNC tnc_sub(const TensorNC& a, const TensorNC& b);
TensorNC tnc_scale(const TensorNC& a, const Rat& v);
TensorNC tnc_mul(const TensorNC& a, const TensorNC& b);
// Outer product a (x) b.
TensorNC tnc_tensor(const NCSeries& a, const NCSeries& b);

// Coproduct making every letter primitive.
TensorNC nc_coproduct(const NCSeries& h);
// Antipode: reverse the word, sign by length.
NCSeries nc_antipode(const NCSeries& h);
bool is_group_like(const NCSeries& h);
bool is_lie_like(const NCSeries& h);

// Derivation sending the distinguished letter to 1 and the others to 0.
NCSeries nc_d0(const NCSeries& h);
bool is_dagger(const NCSeries& h);

// Lyndon words over codes 0..alphabet_size-1, lengths 1..maxlen.
std::vector<NCWord> lyndon_words(int alphabet_size, int maxlen);
// Iterated commutator of a Lyndon word along its standard factorization.
NCSeries lyndon_bracket(const Alphabet& gam, int max_degree, const NCWord& lw);

// Random Lie element in the kernel of the distinguished derivation: a
// combination of bracketed Lyndon words, with the lone degree-1 obstruction
// (the distinguished letter itself) left out.
NCSeries nc_random_lie_dagger(std::mt19937_64& rng, const Alphabet& gam, int max_degree);
// Its exponential: a random group-like dagger series.
NCSeries nc_random_group_dagger(std::mt19937_64& rng, const Alphabet& gam, int max_degree);

nlohmann::json nc_to_json(const NCSeries& h);
NCSeries nc_from_json(const nlohmann::json& j, bool strict = false);

}  // namespace moulds
