#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "skewcert/certificates.hpp"
#include "skewcert/instance.hpp"
#include "skewcert/membership.hpp"
#include "skewcert/sampling.hpp"

namespace skewcert {

struct VerificationOptions {
    std::size_t trials = 1000;
    int enum_depth = 4;
    std::uint64_t seed = 0;
    std::size_t contraction_samples = 64;
};

template <SigmaField K>
struct TrialRecord {
    std::uint64_t index = 0;
    std::string mode;  // planted-member | planted-linear | random
    BiPoly<SkewSeries<K>> input;
    Decision<K> decision;
    bool expectation_ok = true;  // planted modes predict the outcome
};

template <SigmaField K>
struct VerificationReport {
    std::string instance;
    PrecisionPolicy policy;
    VerificationOptions options;

    ConditionReport<K> conditions;
    bool structural_applicable = false;
    std::string structural_error;
    StructuralReport<K> structural;

    bool enumeration_applicable = false;
    std::vector<RootPrefix<K>> enumeration;
    std::size_t enumeration_expected = 0;  // 3 * 2^(depth-1)
    bool enumeration_ok = false;

    PropernessCertificate<K> proper;
    ContractionReport<K> contraction;

    std::vector<TrialRecord<K>> trials;
    std::size_t member_count = 0;
    std::array<std::size_t, 4> kind_counts{};  // indexed by WitnessKind
    std::size_t verified_count = 0;

    std::vector<std::string> annotations;
    std::vector<std::string> failures;
    bool overall = false;
};

// The two normalization conventions adopted in the decision procedure are
// recorded on every report, quoting the reading that was rejected.
inline std::vector<std::string> standard_annotations() {
    return {
        "normalization: for u != 0 the representative u*x - v is left-scaled by u^{-1} to the "
        "monic form x - u^{-1}*v; the alternative reading u*x - u^{-1}*v is rejected as it is "
        "not monic and does not divide out u",
        "root non-commutation is the two-sided test w*c != c*w; the degenerate reading "
        "w*c != w*c is rejected as vacuous",
    };
}

namespace detail {

// Deterministic trial inputs.  Planted members come with their construction
// as the oracle; planted linear offsets predict the exact normal form by
// additivity; unstructured inputs exercise the full case analysis.
template <SigmaField K>
TrialRecord<K> run_trial(const InstanceParams<K>& params, std::uint64_t seed, std::uint64_t index) {
    using S = SkewSeries<K>;
    using B = BiPoly<S>;
    using Poly = CentralPoly<S>;

    auto rng = trial_rng(seed, index);
    SeriesShape shape{-1, 2, 3};
    TrialRecord<K> rec;
    rec.index = index;

    const int mode = int(index % 3);
    if (mode == 0) {
        rec.mode = "planted-member";
        B g1 = random_bipoly<K>(rng, 1, 1, shape);
        B g2 = random_bipoly<K>(rng, 1, 1, shape);
        rec.input = g1 * params.q_bipoly() + g2 * params.y_minus_c();
        rec.decision = decide_membership(rec.input, params);
        rec.expectation_ok = rec.decision.member && rec.decision.nf.is_zero();
    } else if (mode == 1) {
        rec.mode = "planted-linear";
        B g1 = random_bipoly<K>(rng, 1, 1, shape);
        B g2 = random_bipoly<K>(rng, 1, 1, shape);
        S u, v;
        switch (rng() % 4) {
            case 0: v = random_nonzero_series<K>(rng, shape); break;
            case 1:
                u = random_single_term<K>(rng, shape);
                v = random_series<K>(rng, shape);
                break;
            case 2: u = random_nonzero_series<K>(rng, shape); break;
            default:
                u = random_nonzero_series<K>(rng, shape);
                v = random_nonzero_series<K>(rng, shape);
                break;
        }
        B linear = B::from_x_poly(Poly::monomial(u, 1) - Poly::constant(v));
        rec.input = g1 * params.q_bipoly() + g2 * params.y_minus_c() + linear;
        rec.decision = decide_membership(rec.input, params);
        NormalFormLinear<K> expected{u, v};
        rec.expectation_ok = !rec.decision.member && rec.decision.nf == expected;
    } else {
        rec.mode = "random";
        rec.input = random_bipoly<K>(rng, 2, 2, shape);
        rec.decision = decide_membership(rec.input, params);
        // Self-consistency: membership must coincide with a vanishing normal form.
        rec.expectation_ok = rec.decision.member == rec.decision.nf.is_zero();
    }
    return rec;
}

}  // namespace detail

template <SigmaField K>
VerificationReport<K> run_counterexample(const InstanceParams<K>& params,
                                         const VerificationOptions& options = {}) {
    VerificationReport<K> rep;
    rep.instance = params.name;
    rep.policy = params.policy;
    rep.options = options;
    rep.annotations = standard_annotations();
    auto fail = [&rep](const std::string& what) { rep.failures.push_back(what); };

    rep.conditions = check_conditions_ab(params);
    if (!rep.conditions.ok()) fail("conditions (a)/(b) do not hold");

    try {
        rep.structural = condition_c_structural(params);
        rep.structural_applicable = true;
        if (!rep.structural.pass) fail("condition (c) fails: sigma(c) = c");
    } catch (const ShapeMismatchError& e) {
        rep.structural_applicable = false;
        rep.structural_error = e.what();
        fail(std::string("condition (c) not certifiable: ") + e.what());
    }

    if (FieldTraits<K>::finite && rep.structural_applicable) {
        rep.enumeration_applicable = true;
        rep.enumeration = condition_c_enumerative(params, options.enum_depth);
        rep.enumeration_expected =
            std::size_t(3) << (options.enum_depth > 0 ? options.enum_depth - 1 : 0);
        rep.enumeration_ok = !rep.enumeration.empty();
        for (const auto& rp : rep.enumeration) {
            if (rp.commute.verdict != Cmp::different || rp.commute.exponent != 1)
                rep.enumeration_ok = false;
        }
        if (rep.enumeration.size() != rep.enumeration_expected) rep.enumeration_ok = false;
        if (!rep.enumeration_ok) fail("root enumeration did not confirm condition (c)");
    }

    rep.proper = properness_certificate(params);
    if (!rep.proper.ok()) fail("properness certificate: " + rep.proper.first_violation);

    rep.contraction = contraction_analysis(params, options.contraction_samples,
                                           mix_seed(options.seed, 0xC0A7));
    if (!rep.contraction.ok()) fail("contraction analysis failed");

    rep.trials.reserve(options.trials);
    for (std::size_t i = 0; i < options.trials; ++i) {
        TrialRecord<K> rec = detail::run_trial(params, options.seed, std::uint64_t(i));
        bool verified = rec.decision.verification.ok && rec.expectation_ok;
        if (rec.decision.member) {
            ++rep.member_count;
            // Members of exact inputs must expand back exactly.
            if (!rec.decision.verification.exact) verified = false;
        }
        ++rep.kind_counts[std::size_t(rec.decision.kind)];
        if (verified) ++rep.verified_count;
        else fail("trial " + std::to_string(i) + " failed verification");
        rep.trials.push_back(std::move(rec));
    }

    rep.overall = rep.failures.empty();
    return rep;
}

}  // namespace skewcert
