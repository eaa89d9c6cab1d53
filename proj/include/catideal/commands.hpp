#pragma once

// The batch commands behind the CLI: parse documents, dispatch computations,
// and assemble deterministic reports. Mathematical findings (a failing axiom,
// a missing classical cokernel) report with exit 0; parse errors exit 2,
// enumeration caps exit 3, invariant violations exit 4.

#include <functional>

#include "catideal/abelian.hpp"
#include "catideal/axioms.hpp"
#include "catideal/documents.hpp"
#include "catideal/ktheory.hpp"
#include "catideal/report.hpp"

namespace catideal {

struct CommandOptions {
    std::uint64_t seed = 20260101;
    i64 enum_cap = 4096;
};

namespace detail {

inline Morphism parse_morphism_spec(const FiniteLinearCategory& cat, const std::string& spec) {
    auto gt = spec.find('>');
    auto colon = spec.find(':');
    if (gt == std::string::npos || colon == std::string::npos || colon < gt)
        throw ParseError("morphism spec must look like src>tgt:c1,c2: got '" + spec + "'");
    i64 src = cat.object_by_label(spec.substr(0, gt));
    i64 tgt = cat.object_by_label(spec.substr(gt + 1, colon - gt - 1));
    ElementVector coords;
    std::string rest = spec.substr(colon + 1);
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) {
            try {
                std::size_t pos = 0;
                coords.push_back(std::stoll(tok, &pos));
                if (pos != tok.size()) throw std::invalid_argument("trailing");
            } catch (...) {
                throw ParseError("morphism spec '" + spec + "': bad coordinate '" + tok + "'");
            }
        }
    if (coords.size() != cat.hom(src, tgt).orders.size())
        throw ParseError("morphism spec '" + spec + "': expected " +
                         std::to_string(cat.hom(src, tgt).orders.size()) + " coordinates");
    return cat.make_morphism(src, tgt, coords);
}

inline void describe_category(Report& rep, const FiniteLinearCategory& cat) {
    auto& s = rep.section("category");
    std::ostringstream os;
    os << "modulus " << cat.ring.modulus << ", objects:";
    for (const auto& l : cat.labels) os << " " << l;
    s.lines.push_back(os.str());
    for (i64 a = 0; a < static_cast<i64>(cat.object_count()); ++a)
        for (i64 b = 0; b < static_cast<i64>(cat.object_count()); ++b) {
            const auto& h = cat.hom(a, b);
            if (h.orders.size() == 0) continue;
            std::ostringstream line;
            line << "Hom(" << cat.label(a) << "," << cat.label(b) << ") = "
                 << format_factors(InvariantFactors(h.orders.orders)) << " basis";
            for (const auto& n : h.basis_labels) line << " " << n;
            s.lines.push_back(line.str());
        }
}

inline void describe_ideal(Report::Section& s, const FiniteLinearCategory& cat, const Ideal& I,
                           const std::string& name) {
    std::ostringstream head;
    head << name << ": " << side_name(I.side) << " ideal, base {";
    bool first = true;
    for (i64 b : I.base) {
        head << (first ? "" : ",") << cat.label(b);
        first = false;
    }
    head << "}";
    s.lines.push_back(head.str());
    if (I.comps.empty()) {
        s.lines.push_back("  (zero ideal)");
        return;
    }
    for (const auto& [key, sub] : I.comps) {
        std::ostringstream line;
        line << "  " << name << "(" << cat.label(key.first) << "," << cat.label(key.second) << ") = span{";
        for (std::size_t i = 0; i < sub.rows.size(); ++i)
            line << (i ? "," : "") << format_coords(sub.rows[i]);
        line << "}";
        s.lines.push_back(line.str());
    }
}

}  // namespace detail

/// Parse and validate a category document; violations make exit code 4.
inline Report cmd_validate(const std::string& catref) {
    Report rep;
    rep.command = "validate " + catref;
    std::string text = load_document(catref);
    rep.inputs.push_back({catref, fnv1a_digest(text)});
    FiniteLinearCategory cat = build_category(parse_category_document(text));
    detail::describe_category(rep, cat);
    CategoryReport vr = validate(cat);
    auto& s = rep.section("validation");
    s.lines.push_back(vr.ok ? "valid: yes" : "valid: no");
    for (const auto& v : vr.violations) s.lines.push_back("violation: " + v);
    if (!vr.ok) {
        rep.status = "violation";
        rep.exit_code = 4;
    }
    return rep;
}

/// Saturate generators into an ideal and apply one of the ideal actions.
inline Report cmd_ideal(const std::string& catref, const std::string& side_str,
                        const std::vector<std::string>& gen_specs, const std::string& action,
                        const CommandOptions& opt = {}) {
    Report rep;
    std::ostringstream cmd;
    cmd << "ideal " << catref << " --side " << side_str << " --action " << action;
    for (const auto& g : gen_specs) cmd << " --gen " << g;
    rep.command = cmd.str();
    std::string text = load_document(catref);
    rep.inputs.push_back({catref, fnv1a_digest(text)});
    FiniteLinearCategory cat = build_category(parse_category_document(text));
    Side side = side_str == "left"        ? Side::Left
                : side_str == "right"     ? Side::Right
                : side_str == "two-sided" ? Side::TwoSided
                                          : throw ParseError("unknown side '" + side_str + "'");
    std::vector<Morphism> gens;
    for (const auto& g : gen_specs) gens.push_back(detail::parse_morphism_spec(cat, g));
    Ideal I = saturate(cat, side, gens);
    auto& s = rep.section("saturated ideal");
    detail::describe_ideal(s, cat, I, "I");
    auto& res = rep.section("action " + action);
    if (action == "saturate") {
        res.lines.push_back("see the saturated ideal above");
    } else if (action == "ker") {
        detail::describe_ideal(res, cat, ker_ideal(I), "Ker(I)");
    } else if (action == "coker") {
        detail::describe_ideal(res, cat, coker_ideal(I), "Coker(I)");
    } else if (action == "im") {
        detail::describe_ideal(res, cat, im_ideal(I), "Im(I)");
    } else if (action == "coim") {
        detail::describe_ideal(res, cat, coim_ideal(I), "Coim(I)");
    } else if (action == "closed") {
        res.lines.push_back(std::string("closed: ") + (is_closed(I) ? "yes" : "no"));
    } else if (action == "principal") {
        auto g = is_principal(I, opt.enum_cap);
        res.lines.push_back(g ? "principal with generator " + cat.describe(*g) : "not principal");
        if (!g) rep.status = "finding";
    } else if (action == "kernel-exists") {
        if (gens.size() != 1) throw ParseError("kernel-exists expects exactly one generator morphism");
        auto g = kernel_exists(cat, gens[0], opt.enum_cap);
        res.lines.push_back(g ? "categorical kernel: " + cat.describe(*g)
                              : "no categorical kernel (the annihilator ideal is not free and principal)");
        if (!g) rep.status = "finding";
    } else {
        throw ParseError("unknown ideal action '" + action + "'");
    }
    return rep;
}

/// Homology of a complex document: right/left ideal-theoretic, classical, or
/// the representability comparison on every projective.
inline Report cmd_homology(const std::string& catref, const std::string& cplxref,
                           const std::string& variant) {
    Report rep;
    rep.command = "homology " + catref + " " + cplxref + " --variant " + variant;
    std::string cattext = load_document(catref);
    std::string cplxtext = load_document(cplxref);
    rep.inputs.push_back({catref, fnv1a_digest(cattext)});
    rep.inputs.push_back({cplxref, fnv1a_digest(cplxtext)});
    FiniteLinearCategory cat = build_category(parse_category_document(cattext));
    ChainComplex c = build_complex(parse_complex_document(cplxtext), cat);
    auto& shape = rep.section("complex");
    for (i64 n = c.hi; n >= c.lo; --n) {
        std::ostringstream os;
        os << "degree " << n << ": " << cat.label(c.object_at(n));
        if (auto d = c.diff(n)) os << "  d_" << n << " = " << format_coords(d->coords);
        shape.lines.push_back(os.str());
    }
    if (variant == "right" || variant == "left") {
        auto& s = rep.section(variant == "right" ? "right homology" : "left homology");
        for (i64 n = c.lo; n <= c.hi; ++n) {
            HomologyFamily h = variant == "right" ? right_homology(c, n) : left_homology(c, n);
            for (i64 x = 0; x < static_cast<i64>(cat.object_count()); ++x) {
                std::ostringstream os;
                os << "H^" << (variant == "right" ? "R" : "L") << "_" << n << "(" << cat.label(x)
                   << ") = " << format_factors(invariant_factors_of(h.family.fiber(x).orders.orders));
                s.lines.push_back(os.str());
            }
        }
        auto& e = rep.section("exactness");
        e.lines.push_back(std::string("ideal-exact: ") + (is_exact(c) ? "yes" : "no"));
    } else if (variant == "classical") {
        auto& s = rep.section("classical homology");
        for (i64 n = c.lo; n <= c.hi; ++n) {
            std::ostringstream os;
            os << "H_" << n << " = " << format_factors(classical_homology(c, n));
            s.lines.push_back(os.str());
        }
    } else if (variant == "compare") {
        bool all = true;
        for (i64 p = 0; p < static_cast<i64>(cat.object_count()); ++p) {
            if (!is_projective(cat, p)) continue;
            auto r = representability_check(c, p);
            auto& s = rep.section("representability at " + cat.label(p));
            for (const auto& row : r.rows) {
                std::ostringstream os;
                os << "degree " << row.degree << ": ideal " << format_factors(row.ideal_label)
                   << " classical " << format_factors(row.classical_label) << " "
                   << (row.match ? "match" : "MISMATCH");
                s.lines.push_back(os.str());
            }
            all = all && r.all_match();
        }
        auto& g = rep.section("projective generator corollary");
        try {
            auto r = generator_corollary_check(c);
            for (const auto& row : r.rows) {
                std::ostringstream os;
                os << "degree " << row.degree << ": H^R(" << cat.label(r.object) << ") "
                   << format_factors(row.ideal_label) << " classical " << format_factors(row.classical_label)
                   << " " << (row.match ? "match" : "MISMATCH");
                g.lines.push_back(os.str());
            }
            all = all && r.all_match();
        } catch (const std::invalid_argument& e) {
            g.lines.push_back(std::string("skipped: ") + e.what());
        }
        if (!all) rep.status = "finding";
    } else {
        throw ParseError("unknown homology variant '" + variant + "'");
    }
    return rep;
}

/// The axiom suite over a category document.
inline Report cmd_axioms(const std::string& catref, const CommandOptions& opt = {}) {
    Report rep;
    std::ostringstream cmd;
    cmd << "axioms " << catref << " --seed " << opt.seed << " --enum-cap " << opt.enum_cap;
    rep.command = cmd.str();
    std::string text = load_document(catref);
    rep.inputs.push_back({catref, fnv1a_digest(text)});
    FiniteLinearCategory cat = build_category(parse_category_document(text));
    AxiomConfig cfg;
    cfg.seed = opt.seed;
    cfg.enum_cap = opt.enum_cap;
    SuiteReport suite = run_suite(cat, cfg);
    bool any_failure = false;
    for (const auto& r : suite.reports) {
        auto& s = rep.section("axiom " + r.name);
        std::ostringstream os;
        os << "status: " << status_name(r.status);
        s.lines.push_back(os.str());
        for (const auto& [k, v] : r.stats) s.lines.push_back("  " + k + " = " + std::to_string(v));
        for (const auto& w : r.witnesses) s.lines.push_back("  witness: " + w);
        any_failure = any_failure || r.status == AxiomStatus::Fails;
    }
    if (suite.fatal_failure()) {
        rep.status = "violation";
        rep.exit_code = 4;
    } else if (any_failure) {
        rep.status = "finding";
    }
    return rep;
}

/// Homotopy-category Hom tables for a declared complex list; with a declared
/// map u between concentrated complexes, the full cokernel counterexample.
inline Report cmd_khomotopy(const std::string& catref, const std::string& listref,
                            const CommandOptions& opt = {}) {
    Report rep;
    rep.command = "khomotopy " + catref + " " + listref;
    std::string cattext = load_document(catref);
    std::string listtext = load_document(listref);
    rep.inputs.push_back({catref, fnv1a_digest(cattext)});
    rep.inputs.push_back({listref, fnv1a_digest(listtext)});
    FiniteLinearCategory cat = build_category(parse_category_document(cattext));
    ComplexListDocument doc = parse_complexlist_document(listtext);
    std::vector<ChainComplex> complexes;
    std::vector<std::string> names = doc.names;
    for (auto cd : doc.complexes) {
        cd.category_ref = doc.category_ref;
        complexes.push_back(build_complex(cd, cat));
    }
    auto find_complex = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        throw ParseError("khomotopy: unknown complex '" + name + "'");
    };
    std::optional<Morphism> u_model;
    if (!doc.maps.empty()) {
        const auto& m = doc.maps.front();
        const ChainComplex& x = complexes[find_complex(m.src)];
        const ChainComplex& y = complexes[find_complex(m.tgt)];
        if (x.lo != x.hi || y.lo != y.hi || x.lo != y.lo || m.parts.size() != 1 ||
            m.parts.begin()->first != x.lo)
            throw ParseError("khomotopy: the map must join complexes concentrated in one common degree");
        u_model = cat.make_morphism(x.object_at(x.lo), y.object_at(y.lo), m.parts.begin()->second);
        ChainMap uc = make_chain_map(x, y, {{x.lo, *u_model}});
        complexes.push_back(cone(uc));
        names.push_back("Cone(" + m.name + ")");
    }
    ComplexesCategory cc = complexes_category(cat, complexes, names);
    QuotientCategory k = homotopy_category(cc);
    auto& homs = rep.section("homotopy category Hom-groups");
    for (i64 i = 0; i < static_cast<i64>(names.size()); ++i)
        for (i64 j = 0; j < static_cast<i64>(names.size()); ++j) {
            std::ostringstream os;
            os << "Hom_K(" << names[static_cast<std::size_t>(i)] << "," << names[static_cast<std::size_t>(j)]
               << ") = " << format_factors(invariant_factors_of(k.cat.hom(i, j).orders.orders))
               << "   (in Comp: " << format_factors(invariant_factors_of(cc.cat.hom(i, j).orders.orders))
               << ")";
            homs.lines.push_back(os.str());
        }
    if (u_model) {
        BoReport bo = bo_counterexample(cat, *u_model, opt.enum_cap);
        auto& s = rep.section("cokernel counterexample");
        s.lines.push_back("u = " + cat.describe(*u_model));
        s.lines.push_back(std::string("(i) q∘u null-homotopic: ") +
                          (bo.q_after_u_null_homotopic ? "yes" : "NO"));
        for (const auto& [n, m] : bo.homotopy_witness)
            if (!m.is_zero()) s.lines.push_back("    witness s_" + std::to_string(n) + " = " + cat.describe(m));
        s.lines.push_back(std::string("(ii) ideal Coker([u]) nonzero: ") +
                          (bo.coker_ideal_nonzero ? "yes" : "NO"));
        for (const auto& note : bo.notes) s.lines.push_back("    " + note);
        if (bo.classical_cokernel_in_k) {
            s.lines.push_back("(iii) classical cokernel found in K: generator " +
                              k.cat.describe(bo.classical_cokernel_in_k->second));
        } else {
            s.lines.push_back(
                "(iii) no classical cokernel among the declared complexes (exhaustive search)");
            rep.status = "finding";
        }
        s.lines.push_back(std::string("(iv) base-model cokernel: ") +
                          (bo.base_model_cokernel ? cat.describe(*bo.base_model_cokernel) : "none"));
    }
    return rep;
}

/// Maps exceptions to the documented exit codes, producing an error report.
inline Report run_guarded(const std::function<Report()>& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        Report rep;
        rep.status = std::string("parse error: ") + e.what();
        rep.exit_code = 2;
        return rep;
    } catch (const EnumerationCapExceeded& e) {
        Report rep;
        rep.status = std::string("enumeration cap exceeded: ") + e.what();
        rep.exit_code = 3;
        return rep;
    } catch (const std::invalid_argument& e) {
        Report rep;
        rep.status = std::string("bad input: ") + e.what();
        rep.exit_code = 2;
        return rep;
    } catch (const std::exception& e) {
        Report rep;
        rep.status = std::string("invariant violation: ") + e.what();
        rep.exit_code = 4;
        return rep;
    }
}

}  // namespace catideal
