#pragma once

#include <stdexcept>
#include <string>

namespace moulds {

// Value family of a mould: polynomials, rational functions with products of
// linear forms downstairs, or power series truncated at total degree N.
struct FamilyTag {
    enum Kind { Pol, Rat, TruncSer } kind = Rat;
    int trunc = 0;  // meaningful for TruncSer only

    static FamilyTag pol() { return {Pol, 0}; }
    static FamilyTag rat() { return {Rat, 0}; }
    static FamilyTag trunc_ser(int n) { return {TruncSer, n}; }

    bool operator==(const FamilyTag& o) const {
        return kind == o.kind && (kind != TruncSer || trunc == o.trunc);
    }
    bool operator!=(const FamilyTag& o) const { return !(*this == o); }
};

inline std::string family_str(const FamilyTag& f) {
    switch (f.kind) {
        case FamilyTag::Pol: return "Pol";
        case FamilyTag::Rat: return "Rat";
        default: return "TruncSer(" + std::to_string(f.trunc) + ")";
    }
}

inline FamilyTag family_parse(const std::string& s) {
    if (s == "Pol") return FamilyTag::pol();
    if (s == "Rat") return FamilyTag::rat();
    if (s.rfind("TruncSer(", 0) == 0 && s.back() == ')')
        return FamilyTag::trunc_ser(std::stoi(s.substr(9, s.size() - 10)));
    throw std::invalid_argument("bad family tag: " + s);
}

}  // namespace moulds
