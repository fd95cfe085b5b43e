#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "moulds/family.hpp"
#include "moulds/poly.hpp"

namespace moulds {

struct ZeroDenFactorError : std::runtime_error {
    ZeroDenFactorError() : std::runtime_error("denominator factor maps to zero") {}
};
struct DivisibilityError : std::runtime_error {
    DivisibilityError() : std::runtime_error("divisibility violated") {}
};

// Rational function num / prod(form^mult) with the numerator a sparse
// polynomial and every denominator factor a pinned primitive linear form.
// The pair is kept fully cancelled, so equality is structural.  All scalar
// freedom lives in num: the forms have a fixed normalization and carry no
// scale of their own.
struct RatFun {
    int nv = 0;
    Poly num;
    std::map<LinForm, int> den;

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RatFun& o) const {
        return nv == o.nv && num == o.num && den == o.den;
    }
    bool operator!=(const RatFun& o) const { return !(*this == o); }
};

RatFun rf_zero(int nv);
RatFun rf_const(int nv, const Rat& c);
RatFun rf_from_poly(const Poly& p);
// 1 / raw, raw a nonzero linear form.
RatFun rf_inv_raw_form(int nv, const std::vector<long>& raw);

RatFun rf_add(const RatFun& a, const RatFun& b);
RatFun rf_sub(const RatFun& a, const RatFun& b);
RatFun rf_neg(const RatFun& a);
RatFun rf_mul(const RatFun& a, const RatFun& b);
RatFun rf_scale(const RatFun& a, const Rat& c);
// Division by scale*form; throws ZeroDenFactorError on the zero vector.
RatFun rf_div_raw_form(const RatFun& a, const std::vector<long>& raw);
// Reciprocal; requires num to be a nonzero constant or a single linear form
// times a constant, which covers every divisor this library produces.
RatFun rf_inv(const RatFun& a);

bool rf_is_const(const RatFun& a);
Rat rf_const_value(const RatFun& a);

// Widens to more variables (the extra ones simply do not occur).
RatFun rf_extend(const RatFun& a, int nv);

// x_{i+1} -> rows[i] over target_nv variables.  Rows may be dependent; a
// denominator factor collapsing to zero raises ZeroDenFactorError.
RatFun rf_substitute(const RatFun& a, const std::vector<std::vector<long>>& rows,
                     int target_nv);

// (a - b) / raw.  For Pol and TruncSer the quotient must clear the
// denominator; DivisibilityError if it does not.
RatFun rf_divided_difference(const RatFun& a, const RatFun& b,
                             const std::vector<long>& raw, const FamilyTag& fam);

// Truncates to total degree <= deg; requires an empty denominator.
RatFun rf_truncate(const RatFun& a, int deg);

std::string rf_str(const RatFun& a);

}  // namespace moulds
