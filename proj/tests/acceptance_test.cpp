// Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
// Everything is exact arithmetic; there are no tolerances to tune.

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "catideal/commands.hpp"
#include "oracle.hpp"

using namespace catideal;

namespace {

void criterion_line(int num, const std::string& text) {
    bool failed = ::testing::Test::HasFailure();
    std::printf("[criterion %d] %s: %s\n", num, failed ? "FAIL" : "PASS", text.c_str());
}

FiniteLinearCategory bundled_category(const std::string& name) {
    return build_category(parse_category_document(load_document(name)));
}

ChainComplex random_complex(const FiniteLinearCategory& cat, Rng& rng, int max_len) {
    int len = 1 + static_cast<int>(rng.below(max_len));
    std::vector<i64> objects;
    for (int i = 0; i < len; ++i) objects.push_back(rng.below(static_cast<i64>(cat.object_count())));
    std::vector<Morphism> diffs(static_cast<std::size_t>(len > 0 ? len - 1 : 0),
                                Morphism{});
    i64 lo = 0, hi = len - 1;
    Morphism prev;
    bool has_prev = false;
    for (i64 n = hi; n >= lo + 1; --n) {
        i64 src = objects[static_cast<std::size_t>(n - lo)];
        i64 tgt = objects[static_cast<std::size_t>(n - 1 - lo)];
        const OrderVector& h = cat.hom(src, tgt).orders;
        ElementVector coords = zero_coords(h);
        if (!has_prev) {
            for (std::size_t i = 0; i < h.size(); ++i) coords[i] = rng.below(h.orders[i]);
        } else {
            // d_n must kill the previously chosen d_{n+1}
            SubgroupBasis k = kernel(precompose_hom(cat, prev, tgt));
            for (const auto& row : k.rows)
                coords = add_coords(h, coords, scale_coords(h, rng.below(cat.ring.modulus), row));
        }
        Morphism d = cat.make_morphism(src, tgt, coords);
        diffs[static_cast<std::size_t>(n - 1 - lo)] = d;
        prev = d;
        has_prev = true;
    }
    ChainComplex c = make_complex(cat, lo, objects, diffs);
    EXPECT_TRUE(validate_complex(c).ok);
    return c;
}

TEST(Acceptance, C01_RepresentabilityTheorem) {
    // H^R_n(C)(P) is represented by the classical homology group on every
    // projective P, over 200 seeded random complexes in two abelian models.
    Rng rng(1001);
    std::vector<FiniteLinearCategory> models;
    models.push_back(build_module_category(
        4, {{2}, {4}, {2, 4}, {4, 4}}, {"Z2", "Z4", "Z2xZ4", "Z4xZ4"}));
    models.push_back(build_module_category(
        2, {{}, {2}, {2, 2}, {2, 2, 2}}, {"F0", "F1", "F2", "F3"}));
    int complexes_checked = 0, comparisons = 0;
    for (const auto& model : models) {
        std::vector<i64> projectives;
        for (i64 o = 0; o < static_cast<i64>(model.object_count()); ++o)
            if (is_projective(model, o)) projectives.push_back(o);
        ASSERT_FALSE(projectives.empty());
        for (int iter = 0; iter < 100; ++iter) {
            ChainComplex c = random_complex(model, rng, 4);
            for (i64 p : projectives) {
                auto rep = representability_check(c, p);
                for (const auto& row : rep.rows) {
                    EXPECT_TRUE(row.match)
                        << "mismatch at degree " << row.degree << " object " << model.label(p);
                    ++comparisons;
                }
            }
            ++complexes_checked;
        }
    }
    EXPECT_EQ(complexes_checked, 200);
    criterion_line(1, "representability on projectives over " + std::to_string(complexes_checked) +
                          " random complexes (" + std::to_string(comparisons) + " degree comparisons)");
}

TEST(Acceptance, C02_BilateralIdentity) {
    // <g|f> = <g| ∩ |f> = <g|·|f> for every composable basis pair. The
    // product leg is a theorem; the intersection leg fails on genuine
    // counterexamples (for instance f = incl, g = can in module-z4 where
    // incl∘can = 2·id is in the meet while <can∘incl> = <0> is zero), so this
    // criterion reports honestly red with the witnessing pairs.
    int failures = 0, pairs = 0;
    const std::vector<std::string> bundle{"module-z4", "matrix-f2", "free-xab"};
    for (const std::string& name : bundle) {
        FiniteLinearCategory cat = bundled_category(name);
        for (i64 a = 0; a < static_cast<i64>(cat.object_count()); ++a)
            for (i64 b = 0; b < static_cast<i64>(cat.object_count()); ++b)
                for (i64 c = 0; c < static_cast<i64>(cat.object_count()); ++c) {
                    const auto& hab = cat.hom(a, b).orders;
                    const auto& hbc = cat.hom(b, c).orders;
                    for (std::size_t i = 0; i < hab.size(); ++i)
                        for (std::size_t j = 0; j < hbc.size(); ++j) {
                            Morphism f = cat.basis_morphism(a, b, i);
                            Morphism g = cat.basis_morphism(b, c, j);
                            Ideal bilateral = principal_two_sided(cat, cat.compose(g, f));
                            Ideal prod = product(principal_left(cat, g), principal_right(cat, f));
                            Ideal meet = intersect_ideals(two_sided_closure(principal_left(cat, g)),
                                                          two_sided_closure(principal_right(cat, f)));
                            ++pairs;
                            bool ok = bilateral == prod && bilateral == meet;
                            if (!ok) {
                                ++failures;
                                ADD_FAILURE() << name << ": identity fails at pair f = "
                                              << cat.describe(f) << ", g = " << cat.describe(g)
                                              << (bilateral == prod ? " (intersection leg)"
                                                                    : " (product leg)");
                            }
                        }
                }
    }
    criterion_line(2, "bilateral identity over " + std::to_string(pairs) + " basis pairs, " +
                          std::to_string(failures) + " failing (see the decisions ledger)");
}

TEST(Acceptance, C03_ComplexConditionsEquivalence) {
    i64 pairs = 0;
    const std::vector<std::string> bundle{"module-z4", "matrix-f2", "free-xab"};
    for (const std::string& name : bundle) {
        FiniteLinearCategory cat = bundled_category(name);
        auto all = oracle::all_morphisms_of(cat);
        for (const auto& f : all)
            for (const auto& g : all) {
                if (f.tgt != g.src) continue;
                EXPECT_TRUE(complex_conditions(cat, g, f).all_agree())
                    << name << " at (" << cat.describe(f) << ", " << cat.describe(g) << ")";
                ++pairs;
            }
    }
    criterion_line(3, "three-way complex-condition agreement over " + std::to_string(pairs) +
                          " composable pairs");
}

TEST(Acceptance, C04_ClosednessAndExactRows) {
    i64 ideals_checked = 0, rows_checked = 0;
    const std::vector<std::string> bundle{"module-z4", "matrix-f2", "free-xab"};
    for (const std::string& name : bundle) {
        FiniteLinearCategory cat = bundled_category(name);
        Rng rng(404);
        std::vector<Ideal> corpus = sample_ideals(cat, rng, 500);
        for (const auto& I : corpus) {
            if (I.side == Side::Left) {
                EXPECT_TRUE(is_closed(ker_ideal(I)));
                EXPECT_TRUE(is_closed(coim_ideal(I)));
            } else if (I.side == Side::Right) {
                EXPECT_TRUE(is_closed(coker_ideal(I)));
                EXPECT_TRUE(is_closed(im_ideal(I)));
            }
            ++ideals_checked;
        }
        for (const auto& f : oracle::all_morphisms_of(cat)) {
            EXPECT_EQ(ker_ideal(coim_of(cat, f)), im_ideal(ker_of(cat, f)));
            EXPECT_EQ(ker_ideal(coker_of(cat, f)), im_ideal(im_of(cat, f)));
            ++rows_checked;
        }
    }
    criterion_line(4, "closedness over " + std::to_string(ideals_checked) +
                          " fuzzed ideals and exact rows over " + std::to_string(rows_checked) +
                          " morphisms, zero failures");
}

TEST(Acceptance, C05_HomNotLeftExactExample) {
    FiniteLinearCategory cat = bundled_category("free-xab");
    i64 x = cat.object_by_label("x"), a = cat.object_by_label("a"), b = cat.object_by_label("b");
    Morphism j = cat.basis_morphism(a, b, 0);
    ChainComplex c = make_complex(cat, 0, {b, a}, {j});
    EXPECT_TRUE(is_exact(c));
    auto rep = hom_left_sequences(c, x);
    EXPECT_TRUE(rep.f_star_injective);
    EXPECT_FALSE(rep.bottom_surjective);  // Hom(x,·) is not exact
    auto [ideal_side, pointwise] = im_vs_pointwise_image(cat, j, x);
    EXPECT_EQ(ideal_side.rows.size(), 2u);
    EXPECT_EQ(pointwise.rows.size(), 1u);
    EXPECT_EQ(ideal_side, full_subgroup(cat.hom(x, b).orders));

    // committed golden report
    Report grep;
    grep.command = "xab-example";
    std::string text = load_document("free-xab");
    grep.inputs.push_back({"free-xab", fnv1a_digest(text)});
    auto& s = grep.section("the sequence 0 -> a -> b -> 0");
    s.lines.push_back(std::string("ideal-exact: ") + (is_exact(c) ? "yes" : "no"));
    s.lines.push_back(std::string("Hom(x,-) applied: f* injective: ") +
                      (rep.f_star_injective ? "yes" : "no"));
    s.lines.push_back(std::string("Hom(x,-) applied: surjective onto Hom(x,b): ") +
                      (rep.bottom_surjective ? "yes" : "no"));
    s.lines.push_back("Im(j)(x) rank " + std::to_string(ideal_side.rows.size()) +
                      " vs im(Hom(x,j)) rank " + std::to_string(pointwise.rows.size()));
    std::string rendered = render_human(grep);
    std::string path = std::string(CATIDEAL_GOLDEN_DIR) + "/xab-example.txt";
    if (std::getenv("CATIDEAL_REGEN")) {
        std::ofstream out(path, std::ios::binary);
        out << rendered;
    } else {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        EXPECT_EQ(rendered, os.str());
    }
    criterion_line(5, "free x,a,b linearization: ideal-exact sequence with non-exact Hom(x,-), "
                      "image ranks 2 vs 1");
}

TEST(Acceptance, C06_CokernelCounterexample) {
    // m = 4: no classical cokernel among the declared complexes; m = 2: found
    auto z4 = bundled_category("module-z4");
    Morphism u = z4.basis_morphism(z4.object_by_label("Z2"), z4.object_by_label("Z4"), 0);
    BoReport rep = bo_counterexample(z4, u);
    EXPECT_TRUE(rep.q_after_u_null_homotopic);
    EXPECT_FALSE(rep.homotopy_witness.empty());
    EXPECT_TRUE(rep.coker_ideal_nonzero);
    EXPECT_FALSE(rep.classical_cokernel_in_k.has_value());
    ASSERT_TRUE(rep.base_model_cokernel.has_value());

    auto f2 = bundled_category("matrix-f2");
    Morphism u2 = f2.make_morphism(f2.object_by_label("F1"), f2.object_by_label("F2"), {1, 0});
    BoReport rep2 = bo_counterexample(f2, u2);
    EXPECT_TRUE(rep2.q_after_u_null_homotopic);
    EXPECT_TRUE(rep2.classical_cokernel_in_k.has_value());
    criterion_line(6, "ideal Coker([u]) exists; classical cokernel absent at m=4, present at m=2");
}

TEST(Acceptance, C07_HomotopyInvariance) {
    auto model = bundled_category("module-z4");
    Rng rng(707);
    int pairs_checked = 0;
    while (pairs_checked < 100) {
        ChainComplex c = random_complex(model, rng, 3);
        ChainComplex d = random_complex(model, rng, 3);
        HomotopySystem sys = homotopy_system(c, d);
        // a random chain map: random solution of the commutation system is
        // cheapest through the complexes-category presentation
        ComplexesCategory cc = complexes_category(model, {c, d}, {"C", "D"});
        const auto& h = cc.cat.hom(0, 1).orders;
        ElementVector coords(h.size());
        for (std::size_t i = 0; i < h.size(); ++i) coords[i] = rng.below(h.orders[i]);
        ChainMap f = cc.chain_map_of(Morphism{0, 1, coords});
        ASSERT_TRUE(validate_chain_map(f));
        // g = f + (d∘s + s∘d) for random s
        ElementVector s(sys.boundary.source.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = rng.below(sys.boundary.source.orders[i]);
        ElementVector bnd = sys.boundary.apply(s);
        std::map<i64, Morphism> gparts;
        for (std::size_t ei = 0; ei < sys.eq_degrees.size(); ++ei) {
            i64 n = sys.eq_degrees[ei];
            const OrderVector& ho = model.hom(c.object_at(n), d.object_at(n)).orders;
            ElementVector pc(ho.size());
            for (std::size_t k = 0; k < ho.size(); ++k) pc[k] = bnd[sys.eq_offsets[ei] + k];
            gparts[n] = model.add(f.part(n), Morphism{c.object_at(n), d.object_at(n), pc});
        }
        ChainMap g = make_chain_map(c, d, gparts);
        ASSERT_TRUE(validate_chain_map(g));
        ASSERT_TRUE(are_homotopic(f, g).has_value());
        for (i64 n = std::max(c.lo, d.lo); n <= std::min(c.hi, d.hi); ++n)
            EXPECT_EQ(induced_map(f, n), induced_map(g, n)) << "degree " << n;
        ++pairs_checked;
    }
    criterion_line(7, "homotopic chain maps induce equal homology maps over " +
                          std::to_string(pairs_checked) + " seeded pairs");
}

TEST(Acceptance, C08_OracleEquivalence) {
    Quiver loop{{"v"}, {{"t", "v", "v"}}};
    std::vector<std::pair<std::string, FiniteLinearCategory>> cats;
    cats.push_back({"module-z4", bundled_category("module-z4")});
    cats.push_back({"matrix-f2", bundled_category("matrix-f2")});
    cats.push_back({"free-xab", bundled_category("free-xab")});
    cats.push_back({"loop-quiver", build_quiver_category(4, loop, {{"t", "t"}}, 8)});
    i64 checked = 0;
    for (const auto& [name, cat] : cats) {
        auto all = oracle::all_morphisms_of(cat);
        ASSERT_LE(all.size(), 2000u);
        for (const auto& f : all) {
            // saturation on all three sides
            for (Side side : {Side::Left, Side::Right, Side::TwoSided})
                EXPECT_EQ(oracle::ideal_sets(saturate(cat, side, {f})),
                          oracle::saturate_sets(cat, side, {f}))
                    << name;
            // annihilators and the derived ideals
            Ideal l = principal_left(cat, f);
            Ideal r = principal_right(cat, f);
            auto lsets = oracle::ideal_sets(l);
            auto rsets = oracle::ideal_sets(r);
            auto oker = oracle::right_annihilator_sets(cat, lsets, l.base);
            auto ocoker = oracle::left_annihilator_sets(cat, rsets, r.base);
            EXPECT_EQ(oracle::ideal_sets(ker_of(cat, f)), oker) << name;
            EXPECT_EQ(oracle::ideal_sets(coker_of(cat, f)), ocoker) << name;
            EXPECT_EQ(oracle::ideal_sets(im_of(cat, f)),
                      oracle::right_annihilator_sets(cat, ocoker, r.base))
                << name;
            EXPECT_EQ(oracle::ideal_sets(coim_of(cat, f)),
                      oracle::left_annihilator_sets(cat, oker, l.base))
                << name;
            ++checked;
        }
        // products and intersections over a deterministic sample of pairs
        for (std::size_t i = 0; i < all.size(); i += 5)
            for (std::size_t j = 0; j < all.size(); j += 7) {
                const Morphism& f = all[i];
                const Morphism& g = all[j];
                Ideal fl = principal_left(cat, f);
                Ideal gl = principal_left(cat, g);
                EXPECT_EQ(oracle::ideal_sets(intersect_ideals(fl, gl)),
                          oracle::intersect_sets(oracle::ideal_sets(fl), oracle::ideal_sets(gl)))
                    << name;
                if (g.tgt == f.src) {
                    // product <f| · |g> generated by the pairwise composites
                    Ideal pr = product(fl, principal_right(cat, g));
                    std::vector<Morphism> gens;
                    for (const auto& [ka, ea] : oracle::ideal_sets(fl))
                        for (const auto& va : ea)
                            for (const auto& [kb, eb] : oracle::ideal_sets(principal_right(cat, g)))
                                for (const auto& vb : eb)
                                    if (kb.second == ka.first)
                                        gens.push_back(cat.compose(Morphism{ka.first, ka.second, va},
                                                                   Morphism{kb.first, kb.second, vb}));
                    EXPECT_EQ(oracle::ideal_sets(pr), oracle::saturate_sets(cat, Side::TwoSided, gens))
                        << name;
                }
            }
    }
    criterion_line(8, "ideal operations agree with naive enumeration over " + std::to_string(checked) +
                          " principal ideals in four categories");
}

TEST(Acceptance, C09_HowellCanonicity) {
    Rng rng(909);
    const std::vector<i64> moduli{4, 6, 8, 9, 12, 16};
    int instances = 0, counted = 0;
    while (instances < 10000) {
        i64 m = rng.pick(moduli);
        std::size_t r = 1 + static_cast<std::size_t>(rng.below(4));
        std::vector<i64> orders;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<i64> divs;
            for (i64 d = 1; d <= m; ++d)
                if (m % d == 0) divs.push_back(d);
            orders.push_back(rng.pick(divs));
        }
        OrderVector amb(orders);
        if (amb.order_capped(4096) > 4096) continue;
        Mat gens;
        std::size_t k = 1 + static_cast<std::size_t>(rng.below(3));
        for (std::size_t i = 0; i < k; ++i) {
            ElementVector v(r);
            for (std::size_t j = 0; j < r; ++j) v[j] = rng.below(orders[j]);
            gens.push_back(v);
        }
        SubgroupBasis a = howell_form(gens, amb);
        // generator-order independence and idempotence
        Mat shuffled(gens.rbegin(), gens.rend());
        shuffled.push_back(gens.front());
        EXPECT_EQ(howell_form(shuffled, amb), a);
        EXPECT_EQ(howell_form(a.rows, amb), a);
        // coset-counting oracle on the smaller instances
        if (amb.order_capped(256) <= 256) {
            EXPECT_EQ(quotient_invariants(amb, a), oracle::quotient_invariants_by_counting(amb, a));
            ++counted;
        }
        ++instances;
    }
    EXPECT_GE(counted, 2000);
    criterion_line(9, "Howell canonicity over " + std::to_string(instances) + " instances, " +
                          std::to_string(counted) + " cross-checked against coset counting");
}

TEST(Acceptance, C10_AxiomSuiteExpectations) {
    const std::vector<std::string> abelian_bundle{"module-z4", "matrix-f2"};
    for (const std::string& name : abelian_bundle) {
        SuiteReport s = run_suite(bundled_category(name));
        for (const auto& r : s.reports) {
            if (r.name == "N" || r.name == "N-op" || r.name == "K" || r.name == "closedness" ||
                r.name == "exact-rows") {
                EXPECT_EQ(r.status, AxiomStatus::Holds) << name << " " << r.name;
            }
        }
    }
    SuiteReport xab = run_suite(bundled_category("free-xab"));
    bool j_witnessed = false;
    for (const auto& r : xab.reports) {
        if (r.name == "N") {
            EXPECT_EQ(r.status, AxiomStatus::Fails);
            for (const auto& w : r.witnesses)
                if (w.find("a->b:(1)") != std::string::npos) j_witnessed = true;
        }
        if (r.name == "K" || r.name == "closedness" || r.name == "exact-rows") {
            EXPECT_EQ(r.status, AxiomStatus::Holds);
        }
    }
    EXPECT_TRUE(j_witnessed);
    // golden byte-stability under the default seed
    const std::vector<std::string> bundle{"module-z4", "matrix-f2", "free-xab"};
    for (const std::string& name : bundle) {
        std::string once = render_human(cmd_axioms(name));
        std::string twice = render_human(cmd_axioms(name));
        EXPECT_EQ(once, twice);
        std::ifstream in(std::string(CATIDEAL_GOLDEN_DIR) + "/axioms-" + name + ".txt", std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        EXPECT_EQ(once, os.str()) << "axioms golden drift for " << name;
    }
    criterion_line(10, "axiom expectations (N holds on abelian models, fails at j on free-xab) with "
                       "byte-stable golden reports");
}

}  // namespace
