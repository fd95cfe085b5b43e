#pragma once

#include <map>
#include <string>
#include <vector>

#include "moulds/family.hpp"
#include "moulds/json_io.hpp"
#include "moulds/words.hpp"

namespace moulds {

// Mould over one alphabet: for each length m a map from label tuples to
// values in the variables x1..xm.  Absent entries are zero.  Components are
// stored for lengths 0..maxlen; in the TruncSer(N) family the length-m
// component is kept truncated to total degree N-m, which is exactly the
// degree to which compositions of such moulds are determined.
struct Mould {
    FamilyTag fam;
    Alphabet gam;
    int maxlen = 0;
    std::map<std::vector<int>, RatFun> c;

    bool operator==(const Mould& o) const {
        return fam == o.fam && gam == o.gam && maxlen == o.maxlen && c == o.c;
    }
};

// Value family discipline applied to a freshly computed length-m component.
RatFun fam_post(const FamilyTag& fam, int m, RatFun v);

Mould mould_zero(FamilyTag fam, Alphabet gam, int maxlen);
Mould mould_unit(FamilyTag fam, Alphabet gam, int maxlen);

void mould_set(Mould& m, const std::vector<int>& labels, RatFun v);
// Zero when absent; the returned value has nv = labels.size().
RatFun mould_get(const Mould& m, const std::vector<int>& labels);

// Value at a symbolic word: substitutes the letters' u-forms into the
// component selected by the letters' labels.  nv is the ambient variable
// count of the result.
RatFun mould_eval(const Mould& m, const std::vector<Letter>& w, int nv);

// All label tuples of the given length over the alphabet, in order.
std::vector<std::vector<int>> label_tuples(const Alphabet& gam, int len);

// Copies a trivial-alphabet mould onto every label tuple of a larger one.
Mould extend_by_gamma(const Mould& m, const Alphabet& gam);

json mould_to_json(const Mould& m);
Mould mould_from_json(const json& j, bool strict = false);

// Mould over an ordered tuple of alphabets.  Keys are per-block label
// tuples; block b of a key with shape (m_1..m_n) owns the variables at
// offset sum of the earlier block lengths.
struct PolyMould {
    FamilyTag fam;
    std::vector<Alphabet> gams;
    std::vector<int> maxlens;
    std::map<std::vector<std::vector<int>>, RatFun> c;

    int blocks() const { return static_cast<int>(gams.size()); }
    bool operator==(const PolyMould& o) const {
        return fam == o.fam && gams == o.gams && maxlens == o.maxlens && c == o.c;
    }
};

using DiMould = PolyMould;

PolyMould pm_zero(FamilyTag fam, std::vector<Alphabet> gams, std::vector<int> maxlens);
PolyMould pm_unit(FamilyTag fam, std::vector<Alphabet> gams, std::vector<int> maxlens);

// P4-style space with blocks labelled by "k1" and "k2".
PolyMould p4_zero(FamilyTag fam, int maxlen1, int maxlen2);

void pm_set(PolyMould& m, const std::vector<std::vector<int>>& labels, RatFun v);
RatFun pm_get(const PolyMould& m, const std::vector<std::vector<int>>& labels);

int pm_shape_total(const std::vector<std::vector<int>>& labels);

std::string mould_describe(const Mould& m);

}  // namespace moulds
