#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace moulds {

// Homogeneous integer linear form in the variables x1..xk.  c[i] is the
// coefficient of x_{i+1}.  A normalized form has no trailing zeros, content 1
// and a positive first nonzero coefficient; denominators of rational
// functions only ever store normalized forms, so factor multisets compare
// structurally.
struct LinForm {
    std::vector<long> c;

    bool operator==(const LinForm& o) const { return c == o.c; }
    bool operator<(const LinForm& o) const { return c < o.c; }
    bool is_zero() const { return c.empty(); }
    // Number of variables actually touched (index of last nonzero + 1).
    int width() const { return static_cast<int>(c.size()); }
};

// Splits an arbitrary integer vector into scale * normalized-form.
// Returns scale = 0 and an empty form for the zero vector.
struct ScaledForm {
    long scale;
    LinForm form;
};

ScaledForm linform_normalize(const std::vector<long>& raw);

// raw(x) for x substituted by rows: image[j] = sum_i raw[i]*rows[i][j].
std::vector<long> linform_apply_rows(const std::vector<long>& raw,
                                          const std::vector<std::vector<long>>& rows);

// Linear combination helpers used when building substitution targets.
std::vector<long> linform_add(const std::vector<long>& a,
                                   const std::vector<long>& b);
std::vector<long> linform_neg(const std::vector<long>& a);
// Single variable x_{i+1} as a raw vector of width nv.
std::vector<long> linform_var(int i);

// Rank over the rationals; used for the linear-independence precondition of
// substitutions.
int linform_rank(const std::vector<std::vector<long>>& rows);

std::string linform_str(const LinForm& f);

}  // namespace moulds
