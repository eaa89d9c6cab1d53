#include "catideal/complex.hpp"

#include <gtest/gtest.h>

#include "catideal/builders.hpp"
#include "oracle.hpp"

using namespace catideal;

namespace {

FiniteLinearCategory module_z4() { return build_module_category(4, {{2}, {4}}, {"Z2", "Z4"}); }
FiniteLinearCategory free_xab() { return build_free_linearization(4, xab_ordinary_category()); }

// 0 -> Z2 -> Z4 -> Z2 -> 0 in degrees 2,1,0
ChainComplex ses_z4(const FiniteLinearCategory& cat) {
    i64 z2 = cat.object_by_label("Z2"), z4 = cat.object_by_label("Z4");
    Morphism incl = cat.basis_morphism(z2, z4, 0);
    Morphism can = cat.basis_morphism(z4, z2, 0);
    return make_complex(cat, 0, {z2, z4, z2}, {can, incl});
}

// Z4 -> Z4 by multiplication by two, degrees 1,0
ChainComplex mul2_complex(const FiniteLinearCategory& cat) {
    i64 z4 = cat.object_by_label("Z4");
    return make_complex(cat, 0, {z4, z4}, {cat.make_morphism(z4, z4, {2})});
}

TEST(ValidateComplex, SpecExamples) {
    auto cat = module_z4();
    i64 z2 = cat.object_by_label("Z2"), z4 = cat.object_by_label("Z4");
    // zero differentials
    ChainComplex zc = make_complex(cat, 0, {z4, z2}, {cat.zero_morphism(z2, z4)});
    EXPECT_TRUE(validate_complex(zc).ok);
    // Z4 ->2 Z4 ->2 Z4 (4 = 0 mod 4)
    Morphism two = cat.make_morphism(z4, z4, {2});
    EXPECT_TRUE(validate_complex(make_complex(cat, 0, {z4, z4, z4}, {two, two})).ok);
    // Z2 ->1 Z2 ->1 Z2 is not a complex
    Morphism one = cat.basis_morphism(z2, z2, 0);
    EXPECT_FALSE(validate_complex(make_complex(cat, 0, {z2, z2, z2}, {one, one})).ok);
}

TEST(ComplexConditions, SpecExamplesAndAgreement) {
    auto cat = module_z4();
    i64 z2 = cat.object_by_label("Z2"), z4 = cat.object_by_label("Z4");
    Morphism incl = cat.basis_morphism(z2, z4, 0);
    Morphism can = cat.basis_morphism(z4, z2, 0);
    auto cc = complex_conditions(cat, can, incl);  // can ∘ incl = 0
    EXPECT_TRUE(cc.composite_zero && cc.image_in_kernel && cc.coimage_in_cokernel);
    auto ci = complex_conditions(cat, cat.identity(z4), cat.identity(z4));
    EXPECT_FALSE(ci.composite_zero || ci.image_in_kernel || ci.coimage_in_cokernel);
    auto cz = complex_conditions(cat, can, cat.zero_morphism(z2, z4));
    EXPECT_TRUE(cz.composite_zero && cz.image_in_kernel && cz.coimage_in_cokernel);
    // the three conditions agree on every composable pair
    for (const auto& c : {module_z4(), free_xab()})
        for (const auto& f : oracle::all_morphisms_of(c))
            for (const auto& g : oracle::all_morphisms_of(c)) {
                if (f.tgt != g.src) continue;
                EXPECT_TRUE(complex_conditions(c, g, f).all_agree());
            }
}

TEST(RightHomology, SingleObjectConvention) {
    // concentrated complex: H^R_0(X) ≅ Hom(X, M) for every X
    auto cat = module_z4();
    i64 z2 = cat.object_by_label("Z2"), z4 = cat.object_by_label("Z4");
    HomologyFamily h = right_homology(concentrated(cat, z2, 0), 0);
    EXPECT_EQ(invariant_factors_of(h.family.fiber(z4).orders.orders),
              invariant_factors_of(cat.hom(z4, z2).orders.orders));
    EXPECT_EQ(invariant_factors_of(h.family.fiber(z2).orders.orders),
              invariant_factors_of(cat.hom(z2, z2).orders.orders));
}

TEST(RightHomology, MultiplicationByTwo) {
    auto cat = module_z4();
    i64 z2 = cat.object_by_label("Z2"), z4 = cat.object_by_label("Z4");
    ChainComplex c = mul2_complex(cat);
    // H^R_0(Z4): Hom(Z4, C_0) ≅ Z/4 over the ideal image {0, 2·id} -> Z/2
    HomologyFamily h0 = right_homology(c, 0);
    EXPECT_EQ(h0.family.fiber(z4).orders.orders, (std::vector<i64>{2}));
    // the ideal image at Z2 is the full Hom (bigger than the pointwise
    // image), so the fiber there is trivial
    EXPECT_TRUE(h0.family.fiber(z2).trivial());
    HomologyFamily h1 = right_homology(c, 1);
    EXPECT_EQ(h1.family.fiber(z4).orders.orders, (std::vector<i64>{2}));
    EXPECT_THROW(right_homology(c, 5), std::invalid_argument);
}

TEST(IsExact, SpecExamples) {
    auto cat = module_z4();
    EXPECT_TRUE(is_exact(ses_z4(cat)));
    EXPECT_FALSE(is_exact(mul2_complex(cat)));
    // zero complex (concentrated zero object in the matrix model)
    auto mat = build_module_category(2, {{}, {2}}, {"F0", "F1"});
    EXPECT_TRUE(is_exact(concentrated(mat, 0, 0)));
    // 0 -> a -> b -> 0 in the free linearization is ideal-exact
    auto xab = free_xab();
    i64 a = xab.object_by_label("a"), b = xab.object_by_label("b");
    Morphism j = xab.basis_morphism(a, b, 0);
    EXPECT_TRUE(is_exact(make_complex(xab, 0, {b, a}, {j})));
}

TEST(InducedMap, IdentityZeroFunctoriality) {
    auto cat = module_z4();
    ChainComplex c = mul2_complex(cat);
    ChainMap id = identity_chain_map(c);
    ASSERT_TRUE(validate_chain_map(id));
    for (i64 n = 0; n <= 1; ++n) {
        HomologyMap im = induced_map(id, n);
        for (const auto& [x, h] : im.per_object) EXPECT_EQ(h.matrix, GroupHom::identity(h.source).matrix);
    }
    ChainMap zero = zero_chain_map(c, c);
    for (i64 n = 0; n <= 1; ++n) {
        HomologyMap zm = induced_map(zero, n);
        for (const auto& [x, h] : zm.per_object)
            EXPECT_EQ(h.matrix, GroupHom::zero(h.source, h.target).matrix);
    }
    // functoriality: every pair of chain self-maps of C
    i64 z4 = cat.object_by_label("Z4");
    std::vector<ChainMap> maps;
    for (i64 a1 = 0; a1 < 4; ++a1)
        for (i64 b1 = 0; b1 < 4; ++b1) {
            std::map<i64, Morphism> parts{{1, cat.make_morphism(z4, z4, {a1})},
                                          {0, cat.make_morphism(z4, z4, {b1})}};
            ChainMap f = make_chain_map(c, c, parts);
            if (validate_chain_map(f)) maps.push_back(f);
        }
    ASSERT_GE(maps.size(), 4u);
    for (const auto& f : maps)
        for (const auto& g : maps)
            for (i64 n = 0; n <= 1; ++n) {
                HomologyMap lhs = induced_map(compose_chain_maps(g, f), n);
                HomologyMap fm = induced_map(f, n);
                HomologyMap gm = induced_map(g, n);
                for (auto& [x, h] : lhs.per_object)
                    EXPECT_EQ(h.matrix, compose_homs(gm.per_object.at(x), fm.per_object.at(x)).matrix);
            }
}

TEST(HomSequences, ModuleCase) {
    auto cat = module_z4();
    i64 z4 = cat.object_by_label("Z4");
    auto rep = hom_left_sequences(ses_z4(cat), z4);
    EXPECT_TRUE(rep.f_star_injective);
    EXPECT_TRUE(rep.g_star_injective);
    for (const auto& [n, ok] : rep.middle_exact) EXPECT_TRUE(ok);
    EXPECT_TRUE(rep.bottom_surjective);  // Z4 is projective
}

TEST(HomSequences, FreeLinearizationFailure) {
    auto xab = free_xab();
    i64 x = xab.object_by_label("x"), a = xab.object_by_label("a"), b = xab.object_by_label("b");
    Morphism j = xab.basis_morphism(a, b, 0);
    ChainComplex c = make_complex(xab, 0, {b, a}, {j});
    auto rep = hom_left_sequences(c, x);
    EXPECT_TRUE(rep.f_star_injective);       // the proposition's statement holds
    EXPECT_FALSE(rep.bottom_surjective);     // but Hom(x, a) -> Hom(x, b) misses q
    // vacuous injectivity when Hom(X, A) = 0
    auto repb = hom_left_sequences(c, b);
    EXPECT_TRUE(repb.f_star_injective);
    // non-exact input is rejected
    EXPECT_THROW(hom_left_sequences(mul2_complex(module_z4()), 0), std::invalid_argument);
    // a single-term complex has no Hom sequences to speak of
    EXPECT_THROW(hom_left_sequences(concentrated(xab, a, 0), x), std::invalid_argument);
}

TEST(ImVsPointwise, SpecExamples) {
    auto cat = module_z4();
    // abelian model: ideal image equals pointwise image at the projective
    // object (the Theorem setting); at the non-projective Z2 they already
    // differ, e.g. for f = 2·id
    i64 z2m = cat.object_by_label("Z2"), z4m = cat.object_by_label("Z4");
    for (const auto& f : oracle::all_morphisms_of(cat)) {
        auto [ideal_side, pointwise] = im_vs_pointwise_image(cat, f, z4m);
        EXPECT_EQ(ideal_side, pointwise);
    }
    {
        Morphism two = cat.make_morphism(z4m, z4m, {2});
        auto [ideal_side, pointwise] = im_vs_pointwise_image(cat, two, z2m);
        EXPECT_EQ(ideal_side.rows.size(), 1u);  // Hom(Z2, im 2·id) = {0, incl}
        EXPECT_TRUE(pointwise.is_zero());       // but 2·id ∘ incl = 0
    }
    // free linearization: Im(j)(x) has rank 2, im(Hom(x,j)) rank 1
    auto xab = free_xab();
    i64 x = xab.object_by_label("x"), a = xab.object_by_label("a"), b = xab.object_by_label("b");
    Morphism j = xab.basis_morphism(a, b, 0);
    auto [ideal_side, pointwise] = im_vs_pointwise_image(xab, j, x);
    EXPECT_EQ(ideal_side.rows.size(), 2u);
    EXPECT_EQ(pointwise.rows.size(), 1u);
    EXPECT_NE(ideal_side, pointwise);
    // f = id: both full
    auto [i2, p2] = im_vs_pointwise_image(xab, xab.identity(b), x);
    EXPECT_EQ(i2, p2);
    EXPECT_EQ(i2, full_subgroup(xab.hom(x, b).orders));
}

TEST(Homotopy, SpecExamples) {
    auto cat = module_z4();
    i64 z2 = cat.object_by_label("Z2");
    // f = g: homotopic via s = 0
    ChainComplex c = ses_z4(cat);
    ChainMap id = identity_chain_map(c);
    auto s0 = are_homotopic(id, id);
    ASSERT_TRUE(s0.has_value());
    for (const auto& [n, m] : *s0) EXPECT_TRUE(m.is_zero());
    // contractible two-term complex: id ~ 0
    ChainComplex contract = make_complex(cat, 0, {z2, z2}, {cat.identity(z2)});
    auto s1 = are_homotopic(identity_chain_map(contract), zero_chain_map(contract, contract));
    ASSERT_TRUE(s1.has_value());
    // witness check: d s + s d = id - 0
    {
        const Morphism& s_0 = s1->at(0);
        Morphism lhs = cat.compose(*contract.diff(1), s_0);
        EXPECT_EQ(lhs, cat.identity(z2));
    }
    // zero differentials, nonzero objects: id and 0 are not homotopic
    ChainComplex inert = make_complex(cat, 0, {z2, z2}, {cat.zero_morphism(z2, z2)});
    EXPECT_FALSE(are_homotopic(identity_chain_map(inert), zero_chain_map(inert, inert)).has_value());
}

TEST(GlobalIdeals, CrossCheckAgainstPerDegree) {
    auto cat = module_z4();
    i64 z2 = cat.object_by_label("Z2"), z4 = cat.object_by_label("Z4");
    // complex with distinct objects per degree: Z2 -> Z4 in degrees 1,0
    Morphism incl = cat.basis_morphism(z2, z4, 0);
    ChainComplex c = make_complex(cat, 0, {z4, z2}, {incl});
    auto [iglob, jglob] = global_ideals(c);
    EXPECT_EQ(iglob.base, (std::set<i64>{z2, z4}));
    Ideal gker = right_annihilator(jglob);
    Ideal gim = im_ideal(iglob);
    for (i64 n = 0; n <= 1; ++n) {
        i64 obj = c.object_at(n);
        Ideal pk = kernel_ideal_at(c, n);
        Ideal pi = image_ideal_at(c, n);
        for (i64 x = 0; x < 2; ++x) {
            EXPECT_EQ(gker.component(x, obj), pk.component(x, obj));
            EXPECT_EQ(gim.component(x, obj), pi.component(x, obj));
        }
    }
    // zero complex: the kernel of the global left ideal is the total sieve
    ChainComplex single = concentrated(cat, z2, 0);
    auto [i0, j0] = global_ideals(single);
    EXPECT_TRUE(i0.comps.empty());
    EXPECT_EQ(right_annihilator(j0), total_sieve(cat, z2));
}

TEST(LeftHomology, MatchesOppositeRight) {
    auto cat = module_z4();
    ChainComplex c = ses_z4(cat);
    auto op = opposite(cat);
    // reversed complex in the opposite category
    // D_k = C_{lo+hi-k} with d^D_k = (d^C_{lo+hi-k+1})^op
    std::vector<i64> objs(c.objects.rbegin(), c.objects.rend());
    std::vector<Morphism> diffs;
    for (i64 n = c.hi; n > c.lo; --n) diffs.push_back(transport_to_opposite(*c.diff(n)));
    ChainComplex rev = make_complex(op, 0, objs, diffs);
    ASSERT_TRUE(validate_complex(rev).ok);
    for (i64 n = c.lo; n <= c.hi; ++n) {
        i64 k = c.lo + c.hi - n;
        HomologyFamily left = left_homology(c, n);
        HomologyFamily right = right_homology(rev, k);
        for (i64 x = 0; x < static_cast<i64>(cat.object_count()); ++x)
            EXPECT_EQ(invariant_factors_of(left.family.fiber(x).orders.orders),
                      invariant_factors_of(right.family.fiber(x).orders.orders));
    }
}

TEST(InducedMap, HomotopyInvarianceSmokeTest) {
    auto cat = module_z4();
    i64 z4 = cat.object_by_label("Z4");
    ChainComplex c = mul2_complex(cat);
    // f and f + boundary induce the same maps in homology
    ChainMap f = identity_chain_map(c);
    // boundary of s_0 = id: parts (d∘s)_0 and (s∘d)_1
    std::map<i64, Morphism> bparts{{0, *c.diff(1)}, {1, *c.diff(1)}};
    ChainMap g = add_chain_maps(f, make_chain_map(c, c, bparts));
    ASSERT_TRUE(validate_chain_map(g));
    ASSERT_TRUE(are_homotopic(f, g).has_value());
    for (i64 n = 0; n <= 1; ++n) EXPECT_EQ(induced_map(f, n), induced_map(g, n));
    (void)z4;
}

}  // namespace

namespace {

TEST(LeftHomology, NontrivialFibers) {
    // H^L of the multiplication-by-two complex, computed natively
    auto cat = module_z4();
    i64 z2 = cat.object_by_label("Z2"), z4 = cat.object_by_label("Z4");
    ChainComplex c = mul2_complex(cat);
    HomologyFamily h0 = left_homology(c, 0);  // Coker(d_1)/0
    EXPECT_EQ(invariant_factors_of(h0.family.fiber(z4).orders.orders), (InvariantFactors{2}));
    EXPECT_EQ(invariant_factors_of(h0.family.fiber(z2).orders.orders), (InvariantFactors{2}));
    HomologyFamily h1 = left_homology(c, 1);  // total cosieve / Coim(d_1)
    EXPECT_EQ(invariant_factors_of(h1.family.fiber(z4).orders.orders), (InvariantFactors{2}));
    EXPECT_TRUE(h1.family.fiber(z2).trivial());
}

}  // namespace
