#pragma once

// The ideal calculus: saturation, principal ideals, products, intersections,
// annihilators, kernel/cokernel/image/coimage ideals, closedness, quotient
// categories, module families, and the free-and-principal kernel test.
//
// Ideals carry a side, canonical Howell components per object pair, and a
// base: the set of objects the family is declared at (sources for left
// ideals, targets for right ideals). A zero component inside the base is
// very different from an undeclared one: annihilators are vacuous (full)
// at declared-zero slots and zero outside the base. This is what makes
// Ker(0_B) the total sieve on B while keeping Ker(<f|) a sieve on dom f.

#include <map>
#include <mutex>
#include <set>
#include <vector>

#include "catideal/category.hpp"

namespace catideal {

enum class Side { Left, Right, TwoSided };

inline std::string side_name(Side s) {
    switch (s) {
        case Side::Left: return "left";
        case Side::Right: return "right";
        default: return "two-sided";
    }
}

struct Ideal {
    Side side = Side::Right;
    const FiniteLinearCategory* cat = nullptr;
    std::set<i64> base;
    std::map<std::pair<i64, i64>, SubgroupBasis> comps;  // nonzero components only

    SubgroupBasis component(i64 a, i64 b) const {
        auto it = comps.find({a, b});
        if (it != comps.end()) return it->second;
        return zero_subgroup(cat->hom(a, b).orders);
    }

    void set_component(i64 a, i64 b, SubgroupBasis s) {
        if (s.is_zero())
            comps.erase({a, b});
        else
            comps[{a, b}] = std::move(s);
    }

    bool contains_morphism(const Morphism& f) const {
        if (f.is_zero()) return true;  // null morphisms are always adjoined
        auto it = comps.find({f.src, f.tgt});
        return it != comps.end() && contains(it->second, f.coords);
    }

    bool operator==(const Ideal& o) const {
        return side == o.side && cat == o.cat && base == o.base && comps == o.comps;
    }
    bool operator!=(const Ideal& o) const { return !(*this == o); }
};

inline Ideal zero_ideal(const FiniteLinearCategory& cat, Side side, std::set<i64> base = {}) {
    if (side == Side::TwoSided) {
        base.clear();
        for (i64 a = 0; a < static_cast<i64>(cat.object_count()); ++a) base.insert(a);
    }
    return Ideal{side, &cat, std::move(base), {}};
}

/// All morphisms into `obj` (a right ideal; the maximal sieve on obj).
inline Ideal total_sieve(const FiniteLinearCategory& cat, i64 obj) {
    Ideal out = zero_ideal(cat, Side::Right, {obj});
    for (i64 x = 0; x < static_cast<i64>(cat.object_count()); ++x)
        out.set_component(x, obj, full_subgroup(cat.hom(x, obj).orders));
    return out;
}

/// All morphisms out of `obj` (a left ideal).
inline Ideal total_cosieve(const FiniteLinearCategory& cat, i64 obj) {
    Ideal out = zero_ideal(cat, Side::Left, {obj});
    for (i64 y = 0; y < static_cast<i64>(cat.object_count()); ++y)
        out.set_component(obj, y, full_subgroup(cat.hom(obj, y).orders));
    return out;
}

/// The total ideal on every object pair.
inline Ideal total_ideal(const FiniteLinearCategory& cat, Side side) {
    std::set<i64> base;
    for (i64 a = 0; a < static_cast<i64>(cat.object_count()); ++a) base.insert(a);
    Ideal out{side, &cat, base, {}};
    for (i64 a = 0; a < static_cast<i64>(cat.object_count()); ++a)
        for (i64 b = 0; b < static_cast<i64>(cat.object_count()); ++b)
            out.set_component(a, b, full_subgroup(cat.hom(a, b).orders));
    return out;
}

/// Smallest ideal of the given side containing the generators, computed as a
/// fixpoint of subgroup growth under basis compositions. The base records the
/// declaring objects (including those of zero generators).
inline Ideal saturate(const FiniteLinearCategory& cat, Side side, const std::vector<Morphism>& generators,
                      std::set<i64> extra_base = {}) {
    Ideal out{side, &cat, std::move(extra_base), {}};
    if (side == Side::TwoSided)
        for (i64 a = 0; a < static_cast<i64>(cat.object_count()); ++a) out.base.insert(a);
    std::map<std::pair<i64, i64>, Mat> rows;
    for (const auto& g : generators) {
        if (side == Side::Left) out.base.insert(g.src);
        if (side == Side::Right) out.base.insert(g.tgt);
        if (!g.is_zero()) rows[{g.src, g.tgt}].push_back(g.coords);
    }
    for (auto& [key, r] : rows) out.set_component(key.first, key.second, howell_form(r, cat.hom(key.first, key.second).orders));

    const i64 n = static_cast<i64>(cat.object_count());
    std::set<std::pair<i64, i64>> dirty;
    for (auto& [key, s] : out.comps) dirty.insert(key);
    while (!dirty.empty()) {
        auto [a, b] = *dirty.begin();
        dirty.erase(dirty.begin());
        SubgroupBasis comp = out.component(a, b);
        for (const auto& row : comp.rows) {
            Morphism v{a, b, row};
            if (side == Side::Right || side == Side::TwoSided) {
                // pre-composition: v ∘ e for e: X -> a
                for (i64 x = 0; x < n; ++x) {
                    const auto& h = cat.hom(x, a);
                    for (std::size_t i = 0; i < h.orders.size(); ++i) {
                        Morphism w = cat.compose(v, cat.basis_morphism(x, a, i));
                        if (w.is_zero()) continue;
                        SubgroupBasis cur = out.component(x, b);
                        if (!contains(cur, w.coords)) {
                            Mat newrows = cur.rows;
                            newrows.push_back(w.coords);
                            out.set_component(x, b, howell_form(newrows, cur.ambient));
                            dirty.insert({x, b});
                        }
                    }
                }
            }
            if (side == Side::Left || side == Side::TwoSided) {
                // post-composition: e ∘ v for e: b -> Y
                for (i64 y = 0; y < n; ++y) {
                    const auto& h = cat.hom(b, y);
                    for (std::size_t i = 0; i < h.orders.size(); ++i) {
                        Morphism w = cat.compose(cat.basis_morphism(b, y, i), v);
                        if (w.is_zero()) continue;
                        SubgroupBasis cur = out.component(a, y);
                        if (!contains(cur, w.coords)) {
                            Mat newrows = cur.rows;
                            newrows.push_back(w.coords);
                            out.set_component(a, y, howell_form(newrows, cur.ambient));
                            dirty.insert({a, y});
                        }
                    }
                }
            }
        }
    }
    return out;
}

/// One more saturation round changes nothing.
inline bool is_saturated(const Ideal& I) {
    std::vector<Morphism> gens;
    for (const auto& [key, s] : I.comps)
        for (const auto& r : s.rows) gens.push_back(Morphism{key.first, key.second, r});
    Ideal again = saturate(*I.cat, I.side, gens, I.base);
    return again == I;
}

/// <f|: the principal left ideal {g ∘ f}.
inline Ideal principal_left(const FiniteLinearCategory& cat, const Morphism& f) {
    return saturate(cat, Side::Left, {f});
}

/// |f>: the principal right ideal {f ∘ g}.
inline Ideal principal_right(const FiniteLinearCategory& cat, const Morphism& f) {
    return saturate(cat, Side::Right, {f});
}

inline Ideal principal_two_sided(const FiniteLinearCategory& cat, const Morphism& f) {
    return saturate(cat, Side::TwoSided, {f});
}

/// Objects carrying a nonzero component (source index for left ideals,
/// target index for right ideals, both for two-sided).
inline std::set<i64> support(const Ideal& I) {
    std::set<i64> out;
    for (const auto& [key, s] : I.comps) {
        if (I.side == Side::Left || I.side == Side::TwoSided) out.insert(key.first);
        if (I.side == Side::Right || I.side == Side::TwoSided) out.insert(key.second);
    }
    return out;
}

/// Proper: nonzero, and not the full Hom restricted to its support.
inline bool is_proper(const Ideal& I) {
    std::set<i64> supp = support(I);
    if (supp.empty()) return false;
    const i64 n = static_cast<i64>(I.cat->object_count());
    auto pair_relevant = [&](i64 a, i64 b) {
        if (I.side == Side::Left) return supp.count(a) > 0;
        if (I.side == Side::Right) return supp.count(b) > 0;
        return supp.count(a) > 0 || supp.count(b) > 0;
    };
    for (i64 a = 0; a < n; ++a)
        for (i64 b = 0; b < n; ++b)
            if (pair_relevant(a, b) && I.component(a, b) != full_subgroup(I.cat->hom(a, b).orders)) return true;
    return false;
}

/// Product of ideals: the ideal generated by the composable pairwise
/// composites x ∘ y with x in I and y in J. Same-side products stay on that
/// side; a mixed product is two-sided (the <g|·|f> case).
inline Ideal product(const Ideal& I, const Ideal& J) {
    if (I.cat != J.cat) throw std::invalid_argument("product: category mismatch");
    Side side;
    std::set<i64> extra;
    if (I.side == Side::Right && J.side == Side::Right) {
        side = Side::Right;
        extra = I.base;
    } else if (I.side == Side::Left && J.side == Side::Left) {
        side = Side::Left;
        extra = J.base;
    } else {
        side = Side::TwoSided;
    }
    std::vector<Morphism> gens;
    for (const auto& [ki, si] : I.comps)
        for (const auto& [kj, sj] : J.comps) {
            if (kj.second != ki.first) continue;  // need tgt(y) == src(x)
            for (const auto& rx : si.rows)
                for (const auto& ry : sj.rows)
                    gens.push_back(I.cat->compose(Morphism{ki.first, ki.second, rx},
                                                  Morphism{kj.first, kj.second, ry}));
        }
    return saturate(*I.cat, side, gens, extra);
}

/// Componentwise intersection of two same-side ideals. The intersection of
/// same-side ideals is automatically an ideal; this is checked.
inline Ideal intersect_ideals(const Ideal& I, const Ideal& J) {
    if (I.cat != J.cat) throw std::invalid_argument("intersect_ideals: category mismatch");
    if (I.side != J.side) throw std::invalid_argument("intersect_ideals: sides incompatible");
    Ideal out{I.side, I.cat, {}, {}};
    std::set_intersection(I.base.begin(), I.base.end(), J.base.begin(), J.base.end(),
                          std::inserter(out.base, out.base.begin()));
    for (const auto& [key, s] : I.comps) {
        auto it = J.comps.find(key);
        if (it == J.comps.end()) continue;
        out.set_component(key.first, key.second, intersect(s, it->second));
    }
    if (!is_saturated(out))
        throw WellDefinednessViolation("intersect_ideals: intersection failed to be an ideal");
    return out;
}

inline bool ideal_subset(const Ideal& I, const Ideal& J) {
    if (I.cat != J.cat || I.side != J.side) throw std::invalid_argument("ideal_subset: incompatible ideals");
    for (const auto& [key, s] : I.comps)
        if (!subgroup_leq(s, J.component(key.first, key.second))) return false;
    return true;
}

/// Closure of a one-sided ideal under both compositions.
inline Ideal two_sided_closure(const Ideal& I) {
    std::vector<Morphism> gens;
    for (const auto& [key, s] : I.comps)
        for (const auto& r : s.rows) gens.push_back(Morphism{key.first, key.second, r});
    return saturate(*I.cat, Side::TwoSided, gens);
}

// ---------------------------------------------------------------------------
// Annihilators and the derived kernel/cokernel/image/coimage ideals
// ---------------------------------------------------------------------------

/// Right annihilator of a left (or two-sided) ideal: all x with s ∘ x = 0
/// for every s in I. Declared-zero slots of I contribute no constraint, so
/// the component there is the full Hom; outside I's base everything is zero.
inline Ideal right_annihilator(const Ideal& I) {
    if (I.side == Side::Right) throw std::invalid_argument("right_annihilator: expected a left ideal");
    const FiniteLinearCategory& cat = *I.cat;
    const i64 n = static_cast<i64>(cat.object_count());
    Ideal out{Side::Right, &cat, I.base, {}};
    for (i64 b : I.base) {
        std::vector<Morphism> constraints;
        for (const auto& [key, s] : I.comps) {
            if (key.first != b) continue;
            for (const auto& r : s.rows) constraints.push_back(Morphism{key.first, key.second, r});
        }
        for (i64 x = 0; x < n; ++x) {
            SubgroupBasis comp = full_subgroup(cat.hom(x, b).orders);
            for (const auto& s : constraints) {
                if (comp.is_zero()) break;
                comp = intersect(comp, kernel(postcompose_hom(cat, s, x)));
            }
            out.set_component(x, b, std::move(comp));
        }
    }
    return out;
}

/// Left annihilator of a right (or two-sided) ideal: all g with g ∘ s = 0.
inline Ideal left_annihilator(const Ideal& I) {
    if (I.side == Side::Left) throw std::invalid_argument("left_annihilator: expected a right ideal");
    const FiniteLinearCategory& cat = *I.cat;
    const i64 n = static_cast<i64>(cat.object_count());
    Ideal out{Side::Left, &cat, I.base, {}};
    for (i64 b : I.base) {
        std::vector<Morphism> constraints;
        for (const auto& [key, s] : I.comps) {
            if (key.second != b) continue;
            for (const auto& r : s.rows) constraints.push_back(Morphism{key.first, key.second, r});
        }
        for (i64 y = 0; y < n; ++y) {
            SubgroupBasis comp = full_subgroup(cat.hom(b, y).orders);
            for (const auto& s : constraints) {
                if (comp.is_zero()) break;
                comp = intersect(comp, kernel(precompose_hom(cat, s, y)));
            }
            out.set_component(b, y, std::move(comp));
        }
    }
    return out;
}

/// Annihilator of a nonempty morphism class, on the stated side.
inline Ideal right_annihilator(const FiniteLinearCategory& cat, const std::vector<Morphism>& S) {
    if (S.empty()) throw std::invalid_argument("right_annihilator: empty class");
    return right_annihilator(saturate(cat, Side::Left, S));
}
inline Ideal left_annihilator(const FiniteLinearCategory& cat, const std::vector<Morphism>& S) {
    if (S.empty()) throw std::invalid_argument("left_annihilator: empty class");
    return left_annihilator(saturate(cat, Side::Right, S));
}

inline Ideal ker_ideal(const Ideal& I) {
    if (I.side == Side::Right) throw std::invalid_argument("ker_ideal: expected a left ideal");
    return right_annihilator(I);
}
inline Ideal coker_ideal(const Ideal& I) {
    if (I.side == Side::Left) throw std::invalid_argument("coker_ideal: expected a right ideal");
    return left_annihilator(I);
}
inline Ideal im_ideal(const Ideal& I) { return ker_ideal(coker_ideal(I)); }
inline Ideal coim_ideal(const Ideal& I) { return coker_ideal(ker_ideal(I)); }

/// Ker(f) = R(<f|), Coker(f) = L(|f>), Im(f) = Ker(Coker(f)),
/// Coim(f) = Coker(Ker(f)).
inline Ideal ker_of(const FiniteLinearCategory& cat, const Morphism& f) {
    return ker_ideal(principal_left(cat, f));
}
inline Ideal coker_of(const FiniteLinearCategory& cat, const Morphism& f) {
    return coker_ideal(principal_right(cat, f));
}
inline Ideal im_of(const FiniteLinearCategory& cat, const Morphism& f) {
    return im_ideal(principal_right(cat, f));
}
inline Ideal coim_of(const FiniteLinearCategory& cat, const Morphism& f) {
    return coim_ideal(principal_left(cat, f));
}

/// Closed: a right ideal equal to its image ideal (left: its coimage ideal).
inline bool is_closed(const Ideal& I) {
    if (I.side == Side::Right) return I == im_ideal(I);
    if (I.side == Side::Left) return I == coim_ideal(I);
    throw std::invalid_argument("is_closed: one-sided ideal expected");
}

inline bool is_mono(const FiniteLinearCategory& cat, const Morphism& f) {
    return support(ker_of(cat, f)).empty();
}
inline bool is_epi(const FiniteLinearCategory& cat, const Morphism& f) {
    return support(coker_of(cat, f)).empty();
}

// ---------------------------------------------------------------------------
// Principality and categorical kernels
// ---------------------------------------------------------------------------

/// All elements of a subgroup, throwing when its order exceeds the cap.
inline std::vector<ElementVector> subgroup_elements(const SubgroupBasis& s, i64 cap) {
    if (s.order_capped(cap) > cap)
        throw EnumerationCapExceeded("subgroup_elements: component order beyond the enumeration cap");
    std::vector<ElementVector> out{zero_coords(s.ambient)};
    std::set<ElementVector> seen{out.front()};
    std::size_t head = 0;
    while (head < out.size()) {
        ElementVector v = out[head++];
        for (const auto& r : s.rows) {
            ElementVector w = add_coords(s.ambient, v, r);
            if (seen.insert(w).second) out.push_back(std::move(w));
        }
    }
    return out;
}

/// Exhaustive search for a single generator of a one-sided ideal.
inline std::optional<Morphism> is_principal(const Ideal& I, i64 cap = 4096) {
    if (I.side == Side::TwoSided) throw std::invalid_argument("is_principal: one-sided ideal expected");
    const FiniteLinearCategory& cat = *I.cat;
    std::vector<Morphism> candidates;
    // zero generators (relevant when I is a zero ideal declared at one object)
    for (i64 b : I.base)
        for (i64 x = 0; x < static_cast<i64>(cat.object_count()); ++x)
            candidates.push_back(I.side == Side::Right ? cat.zero_morphism(x, b) : cat.zero_morphism(b, x));
    for (const auto& [key, s] : I.comps)
        for (const auto& v : subgroup_elements(s, cap))
            if (!is_zero_vec(v)) candidates.push_back(Morphism{key.first, key.second, v});
    for (const auto& g : candidates)
        if (saturate(cat, I.side, {g}) == I) return g;
    return std::nullopt;
}

/// Categorical kernel of f: a generator g of Ker(f) that is free: the right
/// action φ |-> g ∘ φ is injective on every Hom(X, dom g). Returns the
/// kernel morphism when the annihilator ideal is free and principal.
inline std::optional<Morphism> kernel_exists(const FiniteLinearCategory& cat, const Morphism& f,
                                             i64 cap = 4096) {
    Ideal K = ker_of(cat, f);
    std::vector<Morphism> candidates;
    for (i64 b : K.base)
        for (i64 x = 0; x < static_cast<i64>(cat.object_count()); ++x) candidates.push_back(cat.zero_morphism(x, b));
    for (const auto& [key, s] : K.comps)
        for (const auto& v : subgroup_elements(s, cap))
            if (!is_zero_vec(v)) candidates.push_back(Morphism{key.first, key.second, v});
    for (const auto& g : candidates) {
        if (saturate(cat, Side::Right, {g}) != K) continue;
        bool free = true;
        for (i64 x = 0; x < static_cast<i64>(cat.object_count()) && free; ++x)
            if (!kernel(postcompose_hom(cat, g, x)).is_zero()) free = false;
        if (free) return g;
    }
    return std::nullopt;
}

/// Dual search: a generator c of Coker(f) whose left action ψ |-> ψ ∘ c is
/// injective on every Hom(cod c, W).
inline std::optional<Morphism> cokernel_exists(const FiniteLinearCategory& cat, const Morphism& f,
                                               i64 cap = 4096) {
    Ideal C = coker_of(cat, f);
    std::vector<Morphism> candidates;
    for (i64 b : C.base)
        for (i64 y = 0; y < static_cast<i64>(cat.object_count()); ++y) candidates.push_back(cat.zero_morphism(b, y));
    for (const auto& [key, s] : C.comps)
        for (const auto& v : subgroup_elements(s, cap))
            if (!is_zero_vec(v)) candidates.push_back(Morphism{key.first, key.second, v});
    for (const auto& c : candidates) {
        if (saturate(cat, Side::Left, {c}) != C) continue;
        bool free = true;
        for (i64 w = 0; w < static_cast<i64>(cat.object_count()) && free; ++w)
            if (!kernel(precompose_hom(cat, c, w)).is_zero()) free = false;
        if (free) return c;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Quotient categories
// ---------------------------------------------------------------------------

/// A/I for a two-sided ideal I, with the projection and a representative
/// lift retained for downstream computations in the quotient.
struct QuotientCategory {
    FiniteLinearCategory cat;
    const FiniteLinearCategory* parent = nullptr;
    std::vector<QuotientPresentation> pres;  // per parent pair index

    Morphism project(const Morphism& f) const {
        const auto& p = pres[parent->pair_index(f.src, f.tgt)];
        return Morphism{f.src, f.tgt, p.project(f.coords)};
    }
    Morphism lift(const Morphism& fbar) const {
        const auto& p = pres[parent->pair_index(fbar.src, fbar.tgt)];
        ElementVector out = zero_coords(p.ambient());
        for (std::size_t i = 0; i < fbar.coords.size(); ++i) {
            ElementVector t = scale_coords(p.ambient(), fbar.coords[i], p.lift(i));
            out = add_coords(p.ambient(), out, t);
        }
        return Morphism{fbar.src, fbar.tgt, std::move(out)};
    }
};

inline QuotientCategory quotient_category(const FiniteLinearCategory& cat, const Ideal& I) {
    if (I.side != Side::TwoSided) throw std::invalid_argument("quotient_category: two-sided ideal required");
    if (I.cat != &cat) throw std::invalid_argument("quotient_category: ideal from another category");
    QuotientCategory q;
    q.parent = &cat;
    q.cat.ring = cat.ring;
    q.cat.labels = cat.labels;
    const std::size_t n = cat.object_count();
    q.cat.homs.resize(n * n);
    q.cat.comp.resize(n * n * n);
    q.cat.identities.resize(n);
    q.pres.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto& h = cat.hom(static_cast<i64>(a), static_cast<i64>(b));
            q.pres[a * n + b] =
                quotient_presentation(h.orders, I.component(static_cast<i64>(a), static_cast<i64>(b)));
            const auto& quot = q.pres[a * n + b].quotient();
            std::vector<std::string> names;
            for (std::size_t i = 0; i < quot.size(); ++i) names.push_back("q" + std::to_string(i));
            q.cat.homs[a * n + b] = HomGroup{static_cast<i64>(a), static_cast<i64>(b), quot, names};
        }
    for (std::size_t a = 0; a < n; ++a)
        q.cat.identities[a] = q.pres[a * n + a].project(cat.identities[a]);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const auto& qab = q.cat.homs[a * n + b].orders;
                const auto& qbc = q.cat.homs[b * n + c].orders;
                auto& table = q.cat.comp[(a * n + b) * n + c];
                table.assign(qab.size(), std::vector<ElementVector>(qbc.size()));
                for (std::size_t i = 0; i < qab.size(); ++i)
                    for (std::size_t j = 0; j < qbc.size(); ++j) {
                        Morphism u{static_cast<i64>(a), static_cast<i64>(b), q.pres[a * n + b].lift(i)};
                        Morphism v{static_cast<i64>(b), static_cast<i64>(c), q.pres[b * n + c].lift(j)};
                        table[i][j] = q.pres[a * n + c].project(cat.compose(v, u).coords);
                    }
            }
    auto rep = validate(q.cat);
    if (!rep.ok)
        throw WellDefinednessViolation("quotient_category: induced composition failed validation: " +
                                       rep.violations.front());
    return q;
}

// ---------------------------------------------------------------------------
// Module families (quotients of one-sided ideals)
// ---------------------------------------------------------------------------

/// The family of modules (I/J)_A realized concretely: for a right pair the
/// value at X is ⊕_{A in base} I(X,A)/J(X,A) with pre-composition action;
/// left families dually with post-composition. Fibers are materialized on
/// demand and cached.
class ModuleFamily {
  public:
    struct Fiber {
        OrderVector orders;  // concatenation over the base objects
        std::vector<i64> block_object;
        std::vector<QuotientPresentation> blocks;
        std::vector<std::size_t> offsets;  // start of each block in `orders`
        bool trivial() const { return orders.size() == 0; }
    };

    ModuleFamily() = default;
    ModuleFamily(Side side, Ideal numerator, Ideal denominator)
        : side_(side), num_(std::move(numerator)), den_(std::move(denominator)) {
        cat_ = num_.cat;
        base_ = num_.base;
    }
    ModuleFamily(const ModuleFamily& o)
        : side_(o.side_), num_(o.num_), den_(o.den_), cat_(o.cat_), base_(o.base_) {
        std::lock_guard<std::mutex> guard(o.fiber_lock_);
        fibers_ = o.fibers_;
    }
    ModuleFamily& operator=(const ModuleFamily& o) {
        if (this == &o) return *this;
        std::scoped_lock guard(fiber_lock_, o.fiber_lock_);
        side_ = o.side_;
        num_ = o.num_;
        den_ = o.den_;
        cat_ = o.cat_;
        base_ = o.base_;
        fibers_ = o.fibers_;
        return *this;
    }

    Side side() const { return side_; }
    const std::set<i64>& base() const { return base_; }
    const Ideal& numerator() const { return num_; }
    const Ideal& denominator() const { return den_; }
    const FiniteLinearCategory& category() const { return *cat_; }

    /// Fibers are materialized on demand; insertion is lock-protected so
    /// concurrent readers are safe (std::map references stay stable).
    const Fiber& fiber(i64 x) const {
        std::lock_guard<std::mutex> guard(fiber_lock_);
        auto it = fibers_.find(x);
        if (it != fibers_.end()) return it->second;
        Fiber f;
        for (i64 a : base_) {
            const OrderVector& amb = side_ == Side::Right ? cat_->hom(x, a).orders : cat_->hom(a, x).orders;
            SubgroupBasis K = side_ == Side::Right ? num_.component(x, a) : num_.component(a, x);
            SubgroupBasis B = side_ == Side::Right ? den_.component(x, a) : den_.component(a, x);
            QuotientPresentation p = subquotient_presentation(amb, K, B);
            f.block_object.push_back(a);
            f.offsets.push_back(f.orders.orders.size());
            for (i64 d : p.quotient().orders) f.orders.orders.push_back(d);
            f.blocks.push_back(std::move(p));
        }
        return fibers_.emplace(x, std::move(f)).first->second;
    }

    bool trivial_at(i64 x) const { return fiber(x).trivial(); }

    bool trivial() const {
        for (i64 x = 0; x < static_cast<i64>(cat_->object_count()); ++x)
            if (!trivial_at(x)) return false;
        return true;
    }

    /// Action map of a morphism φ. Right families are contravariant:
    /// φ: X' -> X induces fiber(X) -> fiber(X') by pre-composition. Left
    /// families are covariant by post-composition.
    GroupHom action(const Morphism& phi) const {
        i64 from = side_ == Side::Right ? phi.tgt : phi.src;
        i64 to = side_ == Side::Right ? phi.src : phi.tgt;
        const Fiber& src = fiber(from);
        const Fiber& dst = fiber(to);
        GroupHom h{src.orders, dst.orders, Mat(src.orders.size(), ElementVector(dst.orders.size(), 0))};
        for (std::size_t bi = 0; bi < src.blocks.size(); ++bi) {
            i64 a = src.block_object[bi];
            const auto& pb = src.blocks[bi];
            // destination block for the same base object
            std::size_t di = 0;
            while (dst.block_object[di] != a) ++di;
            for (std::size_t g = 0; g < pb.quotient().size(); ++g) {
                Morphism rep = side_ == Side::Right ? Morphism{from, a, pb.lift(g)} : Morphism{a, from, pb.lift(g)};
                Morphism img = side_ == Side::Right ? cat_->compose(rep, phi) : cat_->compose(phi, rep);
                ElementVector coords = dst.blocks[di].project(img.coords);
                for (std::size_t k = 0; k < coords.size(); ++k)
                    h.matrix[src.offsets[bi] + g][dst.offsets[di] + k] = coords[k];
            }
        }
        return h;
    }

  private:
    Side side_ = Side::Right;
    Ideal num_, den_;
    const FiniteLinearCategory* cat_ = nullptr;
    std::set<i64> base_;
    mutable std::mutex fiber_lock_;
    mutable std::map<i64, Fiber> fibers_;
};

/// I/J as a module family; J must be contained in I on the same side.
inline ModuleFamily quotient_ideals(const Ideal& I, const Ideal& J) {
    if (I.cat != J.cat || I.side != J.side)
        throw std::invalid_argument("quotient_ideals: incompatible ideals");
    if (I.side == Side::TwoSided)
        throw std::invalid_argument("quotient_ideals: one-sided ideals expected");
    if (!ideal_subset(J, I)) throw ContainmentViolation("quotient_ideals: J not contained in I");
    for (i64 b : J.base)
        if (!I.base.count(b)) throw ContainmentViolation("quotient_ideals: J declared outside I's base");
    return ModuleFamily(I.side, I, J);
}

}  // namespace catideal
