#pragma once

// The axiom suite: 'K and 'K° (kernel and cokernel ideals always exist),
// the mono/epi characterizations against brute-force cancellation, closedness
// of derived ideals, 'N and 'N° via the image/coimage reformulation, the
// exact-rows identities, and the invariant batteries, bundled as one
// deterministic, seedable runner.

#include <sstream>
#include <string>
#include <vector>

#include "catideal/complex.hpp"
#include "catideal/ideal.hpp"
#include "catideal/rng.hpp"

namespace catideal {

enum class AxiomStatus { Holds, Fails, Vacuous };

inline std::string status_name(AxiomStatus s) {
    switch (s) {
        case AxiomStatus::Holds: return "holds";
        case AxiomStatus::Fails: return "fails";
        default: return "vacuous";
    }
}

struct AxiomReport {
    std::string name;
    AxiomStatus status = AxiomStatus::Holds;
    std::vector<std::string> witnesses;  // a failure always carries one
    std::vector<std::pair<std::string, i64>> stats;
};

struct AxiomConfig {
    std::uint64_t seed = 20260101;
    i64 enum_cap = 4096;
    int sampled_ideals = 8;
};

namespace detail {

inline std::vector<Morphism> enumerate_all(const FiniteLinearCategory& cat, i64 cap) {
    std::vector<Morphism> out;
    for (i64 a = 0; a < static_cast<i64>(cat.object_count()); ++a)
        for (i64 b = 0; b < static_cast<i64>(cat.object_count()); ++b)
            for (const auto& f : cat.all_morphisms(a, b, cap)) out.push_back(f);
    return out;
}

inline i64 ideal_component_count(const Ideal& I) { return static_cast<i64>(I.comps.size()); }

}  // namespace detail

/// ('K) and ('K°): every morphism has a kernel ideal and a cokernel ideal.
/// Definitional; the report certifies computability and records sizes.
inline AxiomReport check_K(const FiniteLinearCategory& cat, i64 cap = 4096) {
    AxiomReport rep;
    rep.name = "K";
    std::vector<Morphism> domain;
    bool sampled = false;
    try {
        domain = detail::enumerate_all(cat, cap);
    } catch (const EnumerationCapExceeded&) {
        // beyond the cap, certify on the basis morphisms instead
        sampled = true;
        for (i64 a = 0; a < static_cast<i64>(cat.object_count()); ++a)
            for (i64 b = 0; b < static_cast<i64>(cat.object_count()); ++b)
                for (std::size_t i = 0; i < cat.hom(a, b).orders.size(); ++i)
                    domain.push_back(cat.basis_morphism(a, b, i));
    }
    i64 checked = 0, ker_components = 0, coker_components = 0;
    for (const auto& f : domain) {
        ker_components += detail::ideal_component_count(ker_of(cat, f));
        coker_components += detail::ideal_component_count(coker_of(cat, f));
        ++checked;
    }
    rep.status = checked == 0 ? AxiomStatus::Vacuous : AxiomStatus::Holds;
    rep.stats = {{"morphisms", checked},
                 {"kernel_components", ker_components},
                 {"cokernel_components", coker_components},
                 {"basis_sample_only", sampled ? 1 : 0}};
    return rep;
}

/// Mono iff Ker(f) = 0 and epi iff Coker(f) = 0, compared against the
/// brute-force cancellation definitions.
inline AxiomReport check_mono_epi(const FiniteLinearCategory& cat, i64 cap = 4096) {
    AxiomReport rep;
    rep.name = "mono-epi";
    auto all = detail::enumerate_all(cat, cap);
    i64 checked = 0, monos = 0, epis = 0;
    for (const auto& f : all) {
        bool cancel_mono = true, cancel_epi = true;
        for (i64 x = 0; x < static_cast<i64>(cat.object_count()); ++x) {
            for (const auto& w : cat.all_morphisms(x, f.src, cap))
                if (cat.compose(f, w).is_zero() && !w.is_zero()) cancel_mono = false;
        }
        for (i64 y = 0; y < static_cast<i64>(cat.object_count()); ++y) {
            for (const auto& w : cat.all_morphisms(f.tgt, y, cap))
                if (cat.compose(w, f).is_zero() && !w.is_zero()) cancel_epi = false;
        }
        bool ideal_mono = is_mono(cat, f);
        bool ideal_epi = is_epi(cat, f);
        if (ideal_mono != cancel_mono)
            rep.witnesses.push_back("mono mismatch at " + cat.describe(f));
        if (ideal_epi != cancel_epi)
            rep.witnesses.push_back("epi mismatch at " + cat.describe(f));
        monos += ideal_mono;
        epis += ideal_epi;
        ++checked;
    }
    rep.status = rep.witnesses.empty() ? AxiomStatus::Holds : AxiomStatus::Fails;
    rep.stats = {{"morphisms", checked}, {"monos", monos}, {"epis", epis}};
    return rep;
}

/// Kernels, cokernels, images and coimages of the sampled ideals are closed.
inline AxiomReport check_closedness(const FiniteLinearCategory&, const std::vector<Ideal>& sample) {
    AxiomReport rep;
    rep.name = "closedness";
    i64 checked = 0;
    for (const auto& I : sample) {
        std::vector<Ideal> derived;
        if (I.side == Side::Left) {
            derived.push_back(ker_ideal(I));
            derived.push_back(coim_ideal(I));
        } else if (I.side == Side::Right) {
            derived.push_back(coker_ideal(I));
            derived.push_back(im_ideal(I));
        } else {
            continue;
        }
        for (const auto& D : derived) {
            if (!is_closed(D)) rep.witnesses.push_back("non-closed derived ideal from a sampled ideal");
            ++checked;
        }
    }
    rep.status = checked == 0 ? AxiomStatus::Vacuous
                              : (rep.witnesses.empty() ? AxiomStatus::Holds : AxiomStatus::Fails);
    rep.stats = {{"derived_ideals", checked}};
    return rep;
}

/// ('N): every monomorphism generates its image ideal, |f> = Im(f).
/// Identities are checked but only non-identity monos count against
/// vacuousness.
inline AxiomReport check_N(const FiniteLinearCategory& cat, i64 cap = 4096) {
    AxiomReport rep;
    rep.name = "N";
    i64 monos = 0, nontrivial = 0;
    for (const auto& f : detail::enumerate_all(cat, cap)) {
        if (!is_mono(cat, f)) continue;
        ++monos;
        if (!(f == cat.identity(f.src) && f.src == f.tgt)) ++nontrivial;
        if (principal_right(cat, f) != im_of(cat, f))
            rep.witnesses.push_back("|f> != Im(f) at mono " + cat.describe(f));
    }
    if (!rep.witnesses.empty())
        rep.status = AxiomStatus::Fails;
    else
        rep.status = nontrivial == 0 ? AxiomStatus::Vacuous : AxiomStatus::Holds;
    rep.stats = {{"monos", monos}, {"non_identity_monos", nontrivial}};
    return rep;
}

/// ('N°): every epimorphism generates its coimage ideal, <g| = Coim(g).
inline AxiomReport check_N_op(const FiniteLinearCategory& cat, i64 cap = 4096) {
    AxiomReport rep;
    rep.name = "N-op";
    i64 epis = 0, nontrivial = 0;
    for (const auto& g : detail::enumerate_all(cat, cap)) {
        if (!is_epi(cat, g)) continue;
        ++epis;
        if (!(g == cat.identity(g.src) && g.src == g.tgt)) ++nontrivial;
        if (principal_left(cat, g) != coim_of(cat, g))
            rep.witnesses.push_back("<g| != Coim(g) at epi " + cat.describe(g));
    }
    if (!rep.witnesses.empty())
        rep.status = AxiomStatus::Fails;
    else
        rep.status = nontrivial == 0 ? AxiomStatus::Vacuous : AxiomStatus::Holds;
    rep.stats = {{"epis", epis}, {"non_identity_epis", nontrivial}};
    return rep;
}

/// The exact-rows identities Ker(Coim(f)) = Im(Ker(f)) and
/// Ker(Coker(f)) = Im(Im(f)), as literal ideal equalities per morphism.
inline AxiomReport check_exact_rows(const FiniteLinearCategory& cat, i64 cap = 4096) {
    AxiomReport rep;
    rep.name = "exact-rows";
    i64 checked = 0;
    for (const auto& f : detail::enumerate_all(cat, cap)) {
        if (ker_ideal(coim_of(cat, f)) != im_ideal(ker_of(cat, f)))
            rep.witnesses.push_back("Ker(Coim(f)) != Im(Ker(f)) at " + cat.describe(f));
        if (ker_ideal(coker_of(cat, f)) != im_ideal(im_of(cat, f)))
            rep.witnesses.push_back("Ker(Coker(f)) != Im(Im(f)) at " + cat.describe(f));
        ++checked;
    }
    rep.status = checked == 0 ? AxiomStatus::Vacuous
                              : (rep.witnesses.empty() ? AxiomStatus::Holds : AxiomStatus::Fails);
    rep.stats = {{"morphisms", checked}};
    return rep;
}

/// Seeded ideal fuzz corpus: principal ideals of random morphisms plus
/// saturations of random two-generator sets.
inline std::vector<Ideal> sample_ideals(const FiniteLinearCategory& cat, Rng& rng, int count) {
    std::vector<Ideal> out;
    std::vector<std::pair<i64, i64>> pairs;
    for (i64 a = 0; a < static_cast<i64>(cat.object_count()); ++a)
        for (i64 b = 0; b < static_cast<i64>(cat.object_count()); ++b)
            if (cat.hom(a, b).orders.size() > 0) pairs.push_back({a, b});
    if (pairs.empty()) return out;
    auto random_morphism = [&]() {
        auto [a, b] = rng.pick(pairs);
        const auto& h = cat.hom(a, b).orders;
        ElementVector v(h.size());
        for (std::size_t i = 0; i < h.size(); ++i) v[i] = rng.below(h.orders[i]);
        return Morphism{a, b, v};
    };
    for (int i = 0; i < count; ++i) {
        Side side = (i % 2 == 0) ? Side::Left : Side::Right;
        if (i % 3 == 2) {
            out.push_back(saturate(cat, side, {random_morphism(), random_morphism()}));
        } else {
            Morphism f = random_morphism();
            out.push_back(side == Side::Left ? principal_left(cat, f) : principal_right(cat, f));
        }
    }
    return out;
}

/// Triple-annihilator identities on the sampled ideals.
inline AxiomReport check_triple_annihilators(const FiniteLinearCategory&,
                                             const std::vector<Ideal>& sample) {
    AxiomReport rep;
    rep.name = "triple-annihilator";
    i64 checked = 0;
    for (const auto& I : sample) {
        if (I.side == Side::Left) {
            if (right_annihilator(left_annihilator(right_annihilator(I))) != right_annihilator(I))
                rep.witnesses.push_back("R(L(R(I))) != R(I) for a sampled left ideal");
        } else if (I.side == Side::Right) {
            if (left_annihilator(right_annihilator(left_annihilator(I))) != left_annihilator(I))
                rep.witnesses.push_back("L(R(L(I))) != L(I) for a sampled right ideal");
        } else {
            continue;
        }
        ++checked;
    }
    rep.status = checked == 0 ? AxiomStatus::Vacuous
                              : (rep.witnesses.empty() ? AxiomStatus::Holds : AxiomStatus::Fails);
    rep.stats = {{"sampled_ideals", checked}};
    return rep;
}

/// Agreement of the three complex conditions over all composable pairs.
inline AxiomReport check_complex_conditions(const FiniteLinearCategory& cat, i64 cap = 4096) {
    AxiomReport rep;
    rep.name = "complex-conditions";
    i64 checked = 0;
    auto all = detail::enumerate_all(cat, cap);
    for (const auto& f : all)
        for (const auto& g : all) {
            if (f.tgt != g.src) continue;
            if (!complex_conditions(cat, g, f).all_agree())
                rep.witnesses.push_back("conditions disagree at pair (" + cat.describe(f) + ", " +
                                        cat.describe(g) + ")");
            ++checked;
        }
    rep.status = checked == 0 ? AxiomStatus::Vacuous
                              : (rep.witnesses.empty() ? AxiomStatus::Holds : AxiomStatus::Fails);
    rep.stats = {{"composable_pairs", checked}};
    return rep;
}

/// Sieve concentration: for every basis morphism f, Ker(<f|) and Im(|f>)
/// are sieves on dom f and cod f, and the cokernel/coimage ideals are the
/// dual cosieves.
inline AxiomReport check_sieves(const FiniteLinearCategory& cat) {
    AxiomReport rep;
    rep.name = "sieves";
    i64 checked = 0;
    for (i64 a = 0; a < static_cast<i64>(cat.object_count()); ++a)
        for (i64 b = 0; b < static_cast<i64>(cat.object_count()); ++b)
            for (std::size_t i = 0; i < cat.hom(a, b).orders.size(); ++i) {
                Morphism f = cat.basis_morphism(a, b, i);
                for (const auto& [key, s] : ker_of(cat, f).comps)
                    if (key.second != f.src)
                        rep.witnesses.push_back("Ker(<f|) not a sieve on dom f at " + cat.describe(f));
                for (const auto& [key, s] : im_of(cat, f).comps)
                    if (key.second != f.tgt)
                        rep.witnesses.push_back("Im(|f>) not a sieve on cod f at " + cat.describe(f));
                for (const auto& [key, s] : coker_of(cat, f).comps)
                    if (key.first != f.tgt)
                        rep.witnesses.push_back("Coker(|f>) not a cosieve on cod f at " + cat.describe(f));
                for (const auto& [key, s] : coim_of(cat, f).comps)
                    if (key.first != f.src)
                        rep.witnesses.push_back("Coim(<f|) not a cosieve on dom f at " + cat.describe(f));
                ++checked;
            }
    rep.status = checked == 0 ? AxiomStatus::Vacuous
                              : (rep.witnesses.empty() ? AxiomStatus::Holds : AxiomStatus::Fails);
    rep.stats = {{"basis_morphisms", checked}};
    return rep;
}

struct SuiteReport {
    std::vector<AxiomReport> reports;
    bool fatal_failure() const {
        // failures of the definitional identities indicate implementation
        // bugs, unlike an honest 'N failure
        for (const auto& r : reports)
            if (r.status == AxiomStatus::Fails &&
                (r.name == "K" || r.name == "closedness" || r.name == "exact-rows" ||
                 r.name == "triple-annihilator" || r.name == "mono-epi" ||
                 r.name == "complex-conditions" || r.name == "sieves"))
                return true;
        return false;
    }
};

inline SuiteReport run_suite(const FiniteLinearCategory& cat, const AxiomConfig& cfg = {}) {
    SuiteReport suite;
    Rng rng(cfg.seed);
    std::vector<Ideal> sample = sample_ideals(cat, rng, cfg.sampled_ideals);
    suite.reports.push_back(check_K(cat, cfg.enum_cap));
    suite.reports.push_back(check_mono_epi(cat, cfg.enum_cap));
    suite.reports.push_back(check_closedness(cat, sample));
    suite.reports.push_back(check_N(cat, cfg.enum_cap));
    suite.reports.push_back(check_N_op(cat, cfg.enum_cap));
    suite.reports.push_back(check_exact_rows(cat, cfg.enum_cap));
    suite.reports.push_back(check_triple_annihilators(cat, sample));
    suite.reports.push_back(check_complex_conditions(cat, cfg.enum_cap));
    suite.reports.push_back(check_sieves(cat));
    return suite;
}

}  // namespace catideal
