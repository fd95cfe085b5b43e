#pragma once

#include <map>
#include <string>
#include <vector>

#include "moulds/ratfun.hpp"

namespace moulds {

// Ordered symbol set, optionally with a group law.  The law is validated at
// construction: every row a bijection, associative, with unit and inverses.
struct Alphabet {
    std::string name;
    std::vector<std::string> symbols;
    bool has_group = false;
    int unit = 0;
    std::vector<std::vector<int>> mult;  // mult[a][b], group alphabets only
    std::vector<int> inv;

    int size() const { return static_cast<int>(symbols.size()); }
    int mul(int a, int b) const;
    int invert(int a) const;
    bool operator==(const Alphabet& o) const { return name == o.name; }
    bool operator!=(const Alphabet& o) const { return name != o.name; }
};

// Z/N with symbols "0".."N-1"; N=1 is the trivial group.
Alphabet alphabet_zn(int n);
// Plain label set "1".."k" without a law; the block alphabets of polymoulds.
Alphabet alphabet_labels(int k);
// Arbitrary table, checked; throws std::invalid_argument when not a group.
Alphabet alphabet_with_table(std::string name, std::vector<std::string> symbols,
                             std::vector<std::vector<int>> mult);
Alphabet alphabet_by_name(const std::string& name);

// One mould letter.  u is a raw homogeneous linear form over the ambient
// variables ("x" orientation) or the undifferenced variable itself
// ("y" orientation); sig indexes the alphabet.
struct Letter {
    std::vector<long> u;
    int sig = 0;

    bool operator==(const Letter& o) const { return u == o.u && sig == o.sig; }
    auto operator<=>(const Letter& o) const {
        if (auto c = u <=> o.u; c != 0) return c;
        return sig <=> o.sig;
    }
};

enum class Orient { X, Y };

struct Word {
    Orient orient = Orient::X;
    std::vector<Letter> ls;

    size_t size() const { return ls.size(); }
    bool empty() const { return ls.empty(); }
    bool operator==(const Word& o) const { return orient == o.orient && ls == o.ls; }
    auto operator<=>(const Word& o) const {
        if (auto c = orient <=> o.orient; c != 0) return c;
        return ls <=> o.ls;
    }
};

Word word_cat(const Word& a, const Word& b);
// Word with letters (x_{start+1}; sigs[0]), (x_{start+2}; sigs[1]), ...
Word word_vars(Orient o, const std::vector<int>& sigs, int start = 0);
std::string word_str(const Word& w, const Alphabet& gam);

// Finite linear combination of words with coefficients in the rational
// function field of the ambient variables.
struct WordSum {
    int nv = 0;
    std::map<Word, RatFun> terms;
};

void ws_add_term(WordSum& s, const Word& w, const RatFun& c);
WordSum ws_add(const WordSum& a, const WordSum& b);
WordSum ws_scale(const WordSum& a, const RatFun& c);

// Interleavings with multiplicity; both words must share the orientation.
WordSum shuffle(const Word& a, const Word& b, int nv);

// Quasi-shuffle on "y"-oriented words over a group alphabet.  Merging two
// letters multiplies their labels and keeps either variable, weighted by the
// inverse variable difference; a leading pair with equal variables sends the
// whole product to zero.
WordSum stuffle(const Word& a, const Word& b, int nv, const Alphabet& gam);

enum class FlexKind { UpperRight, UpperLeft, LowerRight, LowerLeft };

// Flexion of the main word by the auxiliary one.  The upper kinds add the
// auxiliary u-total to the main word's first (UpperRight) or last
// (UpperLeft) letter; the lower kinds multiply every main label by the
// inverse of the auxiliary's last (LowerRight) or first (LowerLeft) label.
// Argument order matches the display order of the construct: the auxiliary
// word comes first for the right-side kinds and second for the left-side
// kinds.  An empty auxiliary leaves the main word unchanged; an empty main
// word stays empty.
Word flexion(FlexKind kind, const Word& first, const Word& second, const Alphabet& gam);

}  // namespace moulds
