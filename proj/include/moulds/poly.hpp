#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moulds/linform.hpp"
#include "moulds/rational.hpp"

namespace moulds {

// Orders exponent vectors lexicographically from the highest variable index
// down, i.e. x_n beats x_{n-1}.  Any fixed multiplicative order works for the
// exact-division algorithm; this one keeps map iteration deterministic.
struct MonoCmp {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        for (size_t i = a.size(); i-- > 0;) {
            int av = a[i], bv = i < b.size() ? b[i] : 0;
            if (av != bv) return av < bv;
        }
        return false;
    }
};

// Sparse multivariate polynomial over Q.  All exponent vectors have length
// nv; zero coefficients are never stored.
struct Poly {
    int nv = 0;
    std::map<std::vector<int>, Rat, MonoCmp> t;

    bool is_zero() const { return t.empty(); }
    bool operator==(const Poly& o) const { return nv == o.nv && t == o.t; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

Poly p_zero(int nv);
Poly p_const(int nv, const Rat& c);
Poly p_var(int nv, int i);
// scale * form as a polynomial in nv variables.
Poly p_from_form(int nv, long scale, const LinForm& f);
Poly p_from_raw_form(int nv, const std::vector<long>& raw);

Poly p_add(const Poly& a, const Poly& b);
Poly p_sub(const Poly& a, const Poly& b);
Poly p_neg(const Poly& a);
Poly p_mul(const Poly& a, const Poly& b);
Poly p_scale(const Poly& a, const Rat& c);

int p_total_degree(const Poly& a);       // -1 for the zero polynomial
Poly p_truncate(const Poly& a, int deg); // drop total degree > deg
bool p_is_const(const Poly& a);
Rat p_const_value(const Poly& a);        // coefficient of the empty monomial

// Substitutes x_{i+1} -> rows[i] (a raw linear form over target_nv
// variables).  rows.size() must equal a.nv.
Poly p_substitute(const Poly& a, const std::vector<std::vector<long>>& rows,
                  int target_nv);

// Exact single-divisor division; nullopt when b does not divide a.
std::optional<Poly> p_divide_exact(const Poly& a, const Poly& b);

std::string p_str(const Poly& a);

}  // namespace moulds
