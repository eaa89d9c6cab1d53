#include "catideal/exact_linalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "catideal/rng.hpp"
#include "oracle.hpp"

using namespace catideal;

namespace {

SubgroupBasis make_sub(std::vector<i64> orders, Mat rows) {
    return howell_form(rows, OrderVector(std::move(orders)));
}

GroupHom make_hom(std::vector<i64> src, std::vector<i64> tgt, Mat m) {
    GroupHom h{OrderVector(std::move(src)), OrderVector(std::move(tgt)), std::move(m)};
    EXPECT_TRUE(h.well_formed());
    return h;
}

TEST(HowellForm, SpecExamples) {
    // rows = {(2,2)} in (Z/4)^2 spans exactly {(0,0),(2,2)}
    auto b = make_sub({4, 4}, {{2, 2}});
    EXPECT_EQ(b.rows, (Mat{{2, 2}}));
    EXPECT_EQ(oracle::enumerate_subgroup(b).size(), 2u);

    // empty generating set
    auto z = make_sub({4, 4}, {});
    EXPECT_TRUE(z.is_zero());

    // generators spanning the full group
    auto f = make_sub({2, 2}, {{1, 0}, {0, 1}});
    EXPECT_EQ(f, full_subgroup(OrderVector({2, 2})));
    EXPECT_EQ(oracle::enumerate_subgroup(f).size(), 4u);
}

TEST(HowellForm, CoordinateLengthMismatch) {
    EXPECT_THROW(make_sub({4, 4}, {{1}}), std::invalid_argument);
}

TEST(Kernel, SpecExamples) {
    // multiplication by 2 on Z/4
    auto k1 = kernel(make_hom({4}, {4}, {{2}}));
    EXPECT_EQ(k1.rows, (Mat{{2}}));
    // identity on Z/6
    EXPECT_TRUE(kernel(make_hom({6}, {6}, {{1}})).is_zero());
    // Z/4 -> Z/2, 1 |-> 1
    auto k3 = kernel(make_hom({4}, {2}, {{1}}));
    EXPECT_EQ(k3.rows, (Mat{{2}}));
}

TEST(Image, SpecExamples) {
    EXPECT_TRUE(image(make_hom({4}, {4}, {{0}})).is_zero());
    EXPECT_EQ(image(make_hom({4}, {4}, {{2}})).rows, (Mat{{2}}));
    // Z/2 -> Z/4, 1 |-> 2
    EXPECT_EQ(image(make_hom({2}, {4}, {{2}})).rows, (Mat{{2}}));
}

TEST(SumIntersect, SpecExamples) {
    auto a = make_sub({2, 2}, {{1, 0}});
    auto b = make_sub({2, 2}, {{0, 1}});
    EXPECT_TRUE(intersect(a, b).is_zero());
    EXPECT_EQ(intersect(a, a), a);

    auto s = sum(make_sub({4, 4}, {{2, 0}}), make_sub({4, 4}, {{0, 2}}));
    std::set<ElementVector> expect;
    for (i64 x : {0, 2})
        for (i64 y : {0, 2}) expect.insert({x, y});
    EXPECT_EQ(oracle::enumerate_subgroup(s), expect);
}

TEST(Contains, SpecExamples) {
    auto b = make_sub({4, 4}, {{2, 2}});
    EXPECT_FALSE(contains(b, {0, 2}));
    EXPECT_TRUE(contains(b, {0, 0}));
    auto f = full_subgroup(OrderVector({4, 4}));
    EXPECT_TRUE(contains(f, {3, 1}));
}

TEST(QuotientInvariants, SpecExamples) {
    EXPECT_EQ(quotient_invariants(OrderVector({4}), make_sub({4}, {{2}})), (InvariantFactors{2}));
    EXPECT_EQ(quotient_invariants(OrderVector({4}), full_subgroup(OrderVector({4}))), InvariantFactors{});
    EXPECT_EQ(quotient_invariants(OrderVector({2, 4}), make_sub({2, 4}, {{1, 2}})), (InvariantFactors{4}));
}

TEST(InducedOnQuotient, SpecExamples) {
    // identity on Z/4 with subS = subT = {0,2} induces the identity on Z/2
    auto sub = make_sub({4}, {{2}});
    auto ind = induced_on_quotient(make_hom({4}, {4}, {{1}}), sub, sub);
    EXPECT_EQ(ind.source.orders, (std::vector<i64>{2}));
    EXPECT_EQ(ind.matrix, (Mat{{1}}));

    // canonical Z/4 -> Z/2 with full target subgroup: the zero map to the
    // trivial group
    auto ind2 = induced_on_quotient(make_hom({4}, {2}, {{1}}), sub, full_subgroup(OrderVector({2})));
    EXPECT_EQ(ind2.target.size(), 0u);

    // containment violation when h(subS) escapes subT
    EXPECT_THROW(induced_on_quotient(make_hom({4}, {4}, {{1}}), full_subgroup(OrderVector({4})), sub),
                 WellDefinednessViolation);
}

TEST(Presentation, RoundTrip) {
    // K/B inside Z/8 ⊕ Z/4: K = <(2,0),(0,1)>, B = <(4,0),(0,2)>
    OrderVector amb({8, 4});
    auto K = make_sub({8, 4}, {{2, 0}, {0, 1}});
    auto B = make_sub({8, 4}, {{4, 0}, {0, 2}});
    auto pres = subquotient_presentation(amb, K, B);
    i64 qord = 1;
    for (i64 f : pres.quotient().orders) qord *= f;
    EXPECT_EQ(qord, 4);  // (Z/2)^2 here
    for (std::size_t i = 0; i < pres.quotient().size(); ++i) {
        ElementVector e(pres.quotient().size(), 0);
        e[i] = 1;
        EXPECT_EQ(pres.project(pres.lift(i)), e);
    }
    // projecting a denominator element gives zero
    EXPECT_TRUE(is_zero_vec(pres.project({4, 0})));
    EXPECT_THROW(subquotient_presentation(amb, B, K), ContainmentViolation);
}

TEST(InvariantFactorsOf, Chains) {
    EXPECT_EQ(invariant_factors_of({2, 4}), (InvariantFactors{2, 4}));
    EXPECT_EQ(invariant_factors_of({2, 3}), (InvariantFactors{6}));
    EXPECT_EQ(invariant_factors_of({6, 4}), (InvariantFactors{2, 12}));
    EXPECT_EQ(invariant_factors_of({1, 1}), InvariantFactors{});
}

// randomized cross-checks against honest enumeration
TEST(Fuzz, SubgroupOpsAgainstOracle) {
    Rng rng(20260809);
    const std::vector<i64> moduli{2, 4, 6, 8, 9, 12};
    for (int iter = 0; iter < 300; ++iter) {
        i64 m = rng.pick(moduli);
        std::size_t r = 1 + static_cast<std::size_t>(rng.below(3));
        std::vector<i64> orders;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<i64> divs;
            for (i64 d = 1; d <= m; ++d)
                if (m % d == 0) divs.push_back(d);
            orders.push_back(rng.pick(divs));
        }
        OrderVector amb(orders);
        if (amb.order_capped(256) > 256) continue;
        auto random_rows = [&](std::size_t k) {
            Mat rows;
            for (std::size_t i = 0; i < k; ++i) {
                ElementVector v(r);
                for (std::size_t j = 0; j < r; ++j) v[j] = rng.below(orders[j]);
                rows.push_back(v);
            }
            return rows;
        };
        Mat gens = random_rows(1 + static_cast<std::size_t>(rng.below(3)));
        auto a = howell_form(gens, amb);

        // canonicity: shuffled generators and doubled generators agree
        Mat shuffled = gens;
        std::reverse(shuffled.begin(), shuffled.end());
        shuffled.insert(shuffled.end(), gens.begin(), gens.end());
        EXPECT_EQ(howell_form(shuffled, amb), a);
        EXPECT_EQ(howell_form(a.rows, amb), a);  // idempotent

        auto b = howell_form(random_rows(2), amb);
        auto elems_a = oracle::enumerate_subgroup(a);
        auto elems_b = oracle::enumerate_subgroup(b);

        // canonicity across generating sets: every element list of the
        // subgroup regenerates the identical basis
        Mat all_elems(elems_a.begin(), elems_a.end());
        EXPECT_EQ(howell_form(all_elems, amb), a);

        // membership
        for_each_element(amb, [&](const ElementVector& v) {
            EXPECT_EQ(contains(a, v), elems_a.count(v) > 0);
        });

        // sum and intersection
        std::set<ElementVector> expect_sum;
        for (const auto& x : elems_a)
            for (const auto& y : elems_b) expect_sum.insert(add_coords(amb, x, y));
        EXPECT_EQ(oracle::enumerate_subgroup(sum(a, b)), expect_sum);
        std::set<ElementVector> expect_cap;
        for (const auto& x : elems_a)
            if (elems_b.count(x)) expect_cap.insert(x);
        EXPECT_EQ(oracle::enumerate_subgroup(intersect(a, b)), expect_cap);

        // quotient invariants against coset counting
        EXPECT_EQ(quotient_invariants(amb, a), oracle::quotient_invariants_by_counting(amb, a));
        // modding out the zero subgroup recovers the ambient group itself
        EXPECT_EQ(quotient_invariants(amb, zero_subgroup(amb)), invariant_factors_of(amb.orders));
        // lattice algebra: commutativity, associativity, idempotence, absorption
        auto c = howell_form(random_rows(1), amb);
        EXPECT_EQ(sum(a, b), sum(b, a));
        EXPECT_EQ(intersect(a, b), intersect(b, a));
        EXPECT_EQ(sum(sum(a, b), c), sum(a, sum(b, c)));
        EXPECT_EQ(intersect(intersect(a, b), c), intersect(a, intersect(b, c)));
        EXPECT_EQ(sum(a, a), a);
        EXPECT_EQ(intersect(a, a), a);
        EXPECT_TRUE(subgroup_leq(a, sum(a, b)));
        EXPECT_TRUE(subgroup_leq(intersect(a, b), a));
    }
}

TEST(Fuzz, HomKernelImageAgainstOracle) {
    Rng rng(7);
    const std::vector<i64> moduli{2, 4, 6, 8};
    for (int iter = 0; iter < 200; ++iter) {
        i64 m = rng.pick(moduli);
        auto random_orders = [&](std::size_t rmax) {
            std::vector<i64> orders;
            std::size_t r = 1 + static_cast<std::size_t>(rng.below(static_cast<i64>(rmax)));
            for (std::size_t i = 0; i < r; ++i) {
                std::vector<i64> divs;
                for (i64 d = 1; d <= m; ++d)
                    if (m % d == 0) divs.push_back(d);
                orders.push_back(rng.pick(divs));
            }
            return OrderVector(orders);
        };
        OrderVector src = random_orders(2), tgt = random_orders(2);
        if (src.order_capped(64) > 64 || tgt.order_capped(64) > 64) continue;
        // random well-defined hom: entry (i,j) must be a multiple of
        // e_j / gcd(d_i, e_j)
        Mat mat(src.size(), ElementVector(tgt.size(), 0));
        for (std::size_t i = 0; i < src.size(); ++i)
            for (std::size_t j = 0; j < tgt.size(); ++j) {
                i64 step = tgt.orders[j] / gcd_i64(src.orders[i], tgt.orders[j]);
                mat[i][j] = mod_pos(step * rng.below(tgt.orders[j]), tgt.orders[j]);
            }
        GroupHom h{src, tgt, mat};
        ASSERT_TRUE(h.well_formed());
        EXPECT_EQ(oracle::enumerate_subgroup(kernel(h)), oracle::kernel_elements(h));
        EXPECT_EQ(oracle::enumerate_subgroup(image(h)), oracle::image_elements(h));

        // solve: every image element must be hit exactly
        for_each_element(tgt, [&](const ElementVector& y) {
            auto x = solve(h, y);
            bool in_image = oracle::image_elements(h).count(y) > 0;
            EXPECT_EQ(x.has_value(), in_image);
            if (x) {
                EXPECT_EQ(h.apply(*x), reduce_coords(tgt, y));
            }
        });
    }
}

TEST(Fuzz, SubgroupDecomposition) {
    Rng rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<i64> orders{4, rng.below(2) ? i64(8) : i64(2), 3};
        OrderVector amb(orders);
        Mat gens;
        for (int i = 0; i < 2; ++i) {
            ElementVector v(orders.size());
            for (std::size_t j = 0; j < orders.size(); ++j) v[j] = rng.below(orders[j]);
            gens.push_back(v);
        }
        auto k = howell_form(gens, amb);
        auto dec = subgroup_decomposition(k);
        i64 order = 1;
        for (i64 f : dec.quotient().orders) order *= f;
        EXPECT_EQ(order, static_cast<i64>(oracle::enumerate_subgroup(k).size()));
        // lifts generate the subgroup with the stated orders
        Mat lifts;
        for (std::size_t i = 0; i < dec.quotient().size(); ++i) lifts.push_back(dec.lift(i));
        EXPECT_EQ(howell_form(lifts, amb), k);
    }
}

TEST(ResidueRingGuards, ModulusRange) {
    EXPECT_THROW(ResidueRing(1), std::invalid_argument);
    EXPECT_THROW(ResidueRing((i64(1) << 31) + 1), std::invalid_argument);
    EXPECT_EQ(ResidueRing(6).modulus, 6);
}

}  // namespace
