// Shared helpers for the test binaries.
#pragma once

#include <random>

#include "skewcert/membership.hpp"
#include "skewcert/sampling.hpp"

namespace skewcert::testsupport {

// Tamper with one witness coefficient so that re-expansion must differ
// conclusively from its target.  The bump lands at slot (0,0) of one
// component; through the generators it surfaces at x^2*y^0 (components
// multiplying q) or x^0*y^1 (components multiplying y - c), at an exponent
// kept below the weakest trusted precision of the original expansion.
template <SigmaField K>
Witness<K> corrupt_witness(const Witness<K>& w, const ExpansionCheck& check,
                           std::mt19937_64& rng) {
    using S = SkewSeries<K>;
    using B = BiPoly<S>;
    int e = check.trusted_to ? *check.trusted_to - 1 : 0;
    B bump = B::constant(S::term(random_nonzero<K>(rng), e));
    if (const auto* m = std::get_if<MemberWitness<K>>(&w)) {
        MemberWitness<K> out = *m;
        if (rng() % 2) out.g1 = out.g1 + bump;
        else out.g2 = out.g2 + bump;
        return out;
    }
    UnitWitness<K> out = std::get<UnitWitness<K>>(w);
    if (rng() % 2) out.h0 = out.h0 + bump;
    else out.h1 = out.h1 + bump;
    return out;
}

}  // namespace skewcert::testsupport
