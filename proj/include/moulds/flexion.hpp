#pragma once

#include "moulds/mould_ops.hpp"

namespace moulds {

// Derivation-style action of b on a: at length m the component is the
// alternating sum over cuts alpha beta gamma of the word, the upper flexion
// feeding a and the lower flexion feeding b.  Lengths 0 and 1 vanish.
Mould mould_arit(const Mould& b, const Mould& a);

// arit(b)(a) - arit(a)(b) + a x b - b x a on moulds with zero empty
// component.
Mould mould_ari(const Mould& a, const Mould& b);

// Group-style action of b on a; b must have unit empty component.  The
// empty and length-1 components of a pass through unchanged.
Mould mould_garit(const Mould& b, const Mould& a);

// gari(a, b) = garit(b)(a) x b on moulds with unit empty component.
Mould mould_gari(const Mould& a, const Mould& b);

// Two-sided gari inverse, built length by length.
Mould mould_invgari(const Mould& b);

// preari(a, b) = arit(b)(a) + a x b.
Mould mould_preari(const Mould& a, const Mould& b);

// Sum of (1/k!) times the k-th left-iterated preari power of a; requires a
// zero empty component, which makes the series finite per length.
Mould mould_expari(const Mould& a);

// Number of cut patterns the garit sum visits at length m (exposed so tests
// can cross-check the enumeration against brute force).
long garit_pattern_count(int m);

}  // namespace moulds
