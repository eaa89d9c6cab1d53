#pragma once

// Bounded chain complexes over a finite linear category, the ideal-theoretic
// right/left homology H^R_n = Ker(d_n)/Im(d_{n+1}) and
// H^L_n = Coker(d_{n+1})/Coim(d_n), induced maps, exactness, homotopies, and
// the global-ideal form of homology.

#include <map>
#include <optional>
#include <vector>

#include "catideal/ideal.hpp"

namespace catideal {

/// Homological (descending) indexing: d_n: C_n -> C_{n-1} for lo < n <= hi.
/// Out-of-range differentials are zero morphisms.
struct ChainComplex {
    const FiniteLinearCategory* cat = nullptr;
    i64 lo = 0;
    i64 hi = 0;
    std::vector<i64> objects;     // objects[n - lo]
    std::vector<Morphism> diffs;  // diffs[n - lo - 1] = d_n

    bool has_degree(i64 n) const { return n >= lo && n <= hi; }
    i64 object_at(i64 n) const { return objects[static_cast<std::size_t>(n - lo)]; }
    std::optional<Morphism> diff(i64 n) const {
        if (n <= lo || n > hi) return std::nullopt;
        return diffs[static_cast<std::size_t>(n - lo - 1)];
    }
};

inline ChainComplex make_complex(const FiniteLinearCategory& cat, i64 lo, std::vector<i64> objects,
                                 std::vector<Morphism> diffs) {
    ChainComplex c;
    c.cat = &cat;
    c.lo = lo;
    c.hi = lo + static_cast<i64>(objects.size()) - 1;
    c.objects = std::move(objects);
    c.diffs = std::move(diffs);
    if (c.objects.empty()) throw std::invalid_argument("make_complex: at least one degree required");
    if (c.diffs.size() + 1 != c.objects.size())
        throw std::invalid_argument("make_complex: need one differential per interior degree");
    return c;
}

/// One object concentrated in a single degree.
inline ChainComplex concentrated(const FiniteLinearCategory& cat, i64 obj, i64 degree) {
    return make_complex(cat, degree, {obj}, {});
}

struct ComplexReport {
    bool ok = true;
    std::vector<std::string> violations;
};

inline ComplexReport validate_complex(const ChainComplex& c) {
    ComplexReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.violations.push_back(s);
    };
    for (i64 n = c.lo + 1; n <= c.hi; ++n) {
        Morphism d = *c.diff(n);
        if (d.src != c.object_at(n) || d.tgt != c.object_at(n - 1))
            fail("differential d_" + std::to_string(n) + " has wrong endpoints");
    }
    if (!rep.ok) return rep;
    for (i64 n = c.lo + 2; n <= c.hi; ++n)
        if (!c.cat->compose(*c.diff(n - 1), *c.diff(n)).is_zero())
            fail("d_" + std::to_string(n - 1) + " ∘ d_" + std::to_string(n) + " != 0");
    return rep;
}

/// The three equivalent complex conditions for a composable pair, each
/// computed independently: (a) g∘f = 0, (b) Im(f) ⊆ Ker(g),
/// (c) Coim(g) ⊆ Coker(f).
struct ComplexConditions {
    bool composite_zero = false;
    bool image_in_kernel = false;
    bool coimage_in_cokernel = false;
    bool all_agree() const {
        return composite_zero == image_in_kernel && image_in_kernel == coimage_in_cokernel;
    }
};

inline ComplexConditions complex_conditions(const FiniteLinearCategory& cat, const Morphism& g,
                                            const Morphism& f) {
    if (f.tgt != g.src) throw ComposabilityError("complex_conditions: pair not composable");
    ComplexConditions out;
    out.composite_zero = cat.compose(g, f).is_zero();
    out.image_in_kernel = ideal_subset(im_of(cat, f), ker_of(cat, g));
    out.coimage_in_cokernel = ideal_subset(coim_of(cat, g), coker_of(cat, f));
    return out;
}

// ---------------------------------------------------------------------------
// Ideal-theoretic homology
// ---------------------------------------------------------------------------

/// Ker(d_n) as a right ideal; the boundary convention reads d_lo as the zero
/// morphism, whose kernel is the total sieve on C_lo.
inline Ideal kernel_ideal_at(const ChainComplex& c, i64 n) {
    if (!c.has_degree(n)) throw std::invalid_argument("kernel_ideal_at: degree out of range");
    if (auto d = c.diff(n)) return ker_of(*c.cat, *d);
    return total_sieve(*c.cat, c.object_at(n));
}

/// Im(d_{n+1}) as a right ideal; into the top degree it is the zero ideal
/// declared at C_hi.
inline Ideal image_ideal_at(const ChainComplex& c, i64 n) {
    if (!c.has_degree(n)) throw std::invalid_argument("image_ideal_at: degree out of range");
    if (auto d = c.diff(n + 1)) return im_of(*c.cat, *d);
    return zero_ideal(*c.cat, Side::Right, {c.object_at(n)});
}

/// Coker(d_{n+1}) as a left ideal; at the top degree the vacuous convention
/// gives the total cosieve on C_hi.
inline Ideal cokernel_ideal_at(const ChainComplex& c, i64 n) {
    if (!c.has_degree(n)) throw std::invalid_argument("cokernel_ideal_at: degree out of range");
    if (auto d = c.diff(n + 1)) return coker_of(*c.cat, *d);
    return total_cosieve(*c.cat, c.object_at(n));
}

/// Coim(d_n) as a left ideal; out of the bottom degree it is the zero ideal
/// declared at C_lo.
inline Ideal coimage_ideal_at(const ChainComplex& c, i64 n) {
    if (!c.has_degree(n)) throw std::invalid_argument("coimage_ideal_at: degree out of range");
    if (auto d = c.diff(n)) return coim_of(*c.cat, *d);
    return zero_ideal(*c.cat, Side::Left, {c.object_at(n)});
}

struct HomologyFamily {
    i64 degree = 0;
    ModuleFamily family;
};

/// H^R_n(C) = Ker(d_n)/Im(d_{n+1}) as a family of right modules.
inline HomologyFamily right_homology(const ChainComplex& c, i64 n) {
    return HomologyFamily{n, quotient_ideals(kernel_ideal_at(c, n), image_ideal_at(c, n))};
}

/// H^L_n(C) = Coker(d_{n+1})/Coim(d_n) as a family of left modules.
inline HomologyFamily left_homology(const ChainComplex& c, i64 n) {
    return HomologyFamily{n, quotient_ideals(cokernel_ideal_at(c, n), coimage_ideal_at(c, n))};
}

/// Exact iff all homology module families vanish (both variants).
inline bool is_exact(const ChainComplex& c) {
    for (i64 n = c.lo; n <= c.hi; ++n)
        if (!right_homology(c, n).family.trivial() || !left_homology(c, n).family.trivial()) return false;
    return true;
}

/// The global form: the right ideal generated by all differentials and the
/// left counterpart, each declared on every object of the complex (total
/// sieves/cosieves then arise from the annihilator conventions at the ends).
inline std::pair<Ideal, Ideal> global_ideals(const ChainComplex& c) {
    std::vector<Morphism> ds;
    for (i64 n = c.lo + 1; n <= c.hi; ++n) ds.push_back(*c.diff(n));
    std::set<i64> objs(c.objects.begin(), c.objects.end());
    return {saturate(*c.cat, Side::Right, ds, objs), saturate(*c.cat, Side::Left, ds, objs)};
}

// ---------------------------------------------------------------------------
// Chain maps, induced maps on homology, homotopies
// ---------------------------------------------------------------------------

struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    std::map<i64, Morphism> parts;  // f_n for degrees where both complexes live

    bool has_part(i64 n) const { return parts.count(n) > 0; }
    const Morphism& part(i64 n) const {
        auto it = parts.find(n);
        if (it == parts.end()) throw std::invalid_argument("chain map: no component at requested degree");
        return it->second;
    }
};

inline ChainMap make_chain_map(const ChainComplex& src, const ChainComplex& tgt,
                               std::map<i64, Morphism> parts) {
    ChainMap f;
    f.source = src;
    f.target = tgt;
    for (i64 n = std::max(src.lo, tgt.lo); n <= std::min(src.hi, tgt.hi); ++n) {
        auto it = parts.find(n);
        if (it == parts.end())
            f.parts[n] = src.cat->zero_morphism(src.object_at(n), tgt.object_at(n));
        else
            f.parts[n] = it->second;
    }
    return f;
}

inline ChainMap identity_chain_map(const ChainComplex& c) {
    std::map<i64, Morphism> parts;
    for (i64 n = c.lo; n <= c.hi; ++n) parts[n] = c.cat->identity(c.object_at(n));
    return make_chain_map(c, c, std::move(parts));
}

inline ChainMap zero_chain_map(const ChainComplex& src, const ChainComplex& tgt) {
    return make_chain_map(src, tgt, {});
}

inline bool validate_chain_map(const ChainMap& f) {
    const FiniteLinearCategory& cat = *f.source.cat;
    const ChainComplex& c = f.source;
    const ChainComplex& d = f.target;
    for (i64 n = std::min(c.lo, d.lo); n <= std::max(c.hi, d.hi) + 1; ++n) {
        // d^D_n ∘ f_n = f_{n-1} ∘ d^C_n as maps C_n -> D_{n-1}; terms whose
        // intermediate object is missing are zero
        if (!c.has_degree(n) || !d.has_degree(n - 1)) continue;
        Morphism lhs = cat.zero_morphism(c.object_at(n), d.object_at(n - 1));
        if (f.has_part(n))
            if (auto dd = d.diff(n)) lhs = cat.compose(*dd, f.part(n));
        Morphism rhs = cat.zero_morphism(c.object_at(n), d.object_at(n - 1));
        if (f.has_part(n - 1))
            if (auto dc = c.diff(n)) rhs = cat.compose(f.part(n - 1), *dc);
        if (lhs != rhs) return false;
    }
    return true;
}

inline ChainMap compose_chain_maps(const ChainMap& g, const ChainMap& f) {
    std::map<i64, Morphism> parts;
    const FiniteLinearCategory& cat = *f.source.cat;
    for (i64 n = std::max(f.source.lo, g.target.lo); n <= std::min(f.source.hi, g.target.hi); ++n)
        if (f.has_part(n) && g.has_part(n)) parts[n] = cat.compose(g.part(n), f.part(n));
    return make_chain_map(f.source, g.target, std::move(parts));
}

inline ChainMap add_chain_maps(const ChainMap& f, const ChainMap& g) {
    std::map<i64, Morphism> parts;
    for (const auto& [n, m] : f.parts) parts[n] = f.source.cat->add(m, g.part(n));
    return make_chain_map(f.source, f.target, std::move(parts));
}

/// Per-object maps H^R_n(C)(X) -> H^R_n(D)(X) induced by a chain map.
struct HomologyMap {
    i64 degree = 0;
    std::map<i64, GroupHom> per_object;

    bool operator==(const HomologyMap& o) const {
        if (degree != o.degree || per_object.size() != o.per_object.size()) return false;
        for (const auto& [x, h] : per_object) {
            auto it = o.per_object.find(x);
            if (it == o.per_object.end() || h.matrix != it->second.matrix) return false;
        }
        return true;
    }
};

/// Post-composition with f_n descends to homology: kernels map to kernels
/// and ideal images to ideal images. Both facts are rechecked on every
/// generator; a violation indicates an internal bug.
inline HomologyMap induced_map(const ChainMap& f, i64 n) {
    const FiniteLinearCategory& cat = *f.source.cat;
    HomologyFamily src = right_homology(f.source, n);
    HomologyFamily dst = right_homology(f.target, n);
    Ideal dst_ker = kernel_ideal_at(f.target, n);
    Ideal dst_im = image_ideal_at(f.target, n);
    Ideal src_im = image_ideal_at(f.source, n);
    i64 c_obj = f.source.object_at(n);
    Morphism fn = f.part(n);
    HomologyMap out;
    out.degree = n;
    for (i64 x = 0; x < static_cast<i64>(cat.object_count()); ++x) {
        const auto& sf = src.family.fiber(x);
        const auto& df = dst.family.fiber(x);
        GroupHom h{sf.orders, df.orders, Mat(sf.orders.size(), ElementVector(df.orders.size(), 0))};
        for (std::size_t g = 0; g < sf.orders.size(); ++g) {
            Morphism rep{x, c_obj, sf.blocks[0].lift(g)};
            Morphism img = cat.compose(fn, rep);
            if (!dst_ker.contains_morphism(img))
                throw WellDefinednessViolation("induced_map: image escapes the kernel ideal");
            h.matrix[g] = df.blocks[0].project(img.coords);
        }
        // image generators must land in the target image ideal
        for (const auto& r : src_im.component(x, c_obj).rows) {
            Morphism img = cat.compose(fn, Morphism{x, c_obj, r});
            if (!dst_im.contains_morphism(img))
                throw WellDefinednessViolation("induced_map: boundary escapes the image ideal");
        }
        out.per_object[x] = std::move(h);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Homotopies
// ---------------------------------------------------------------------------

/// The boundary operator s |-> d∘s + s∘d from degree-(+1) graded maps to
/// graded maps, as one stacked GroupHom with explicit layouts.
struct HomotopySystem {
    std::vector<i64> s_degrees;
    std::vector<std::size_t> s_offsets;
    std::vector<i64> eq_degrees;
    std::vector<std::size_t> eq_offsets;
    GroupHom boundary;
};

inline HomotopySystem homotopy_system(const ChainComplex& c, const ChainComplex& d) {
    const FiniteLinearCategory& cat = *c.cat;
    HomotopySystem sys;
    std::vector<i64> s_orders, eq_orders;
    for (i64 n = std::max(c.lo, d.lo - 1); n <= std::min(c.hi, d.hi - 1); ++n) {
        sys.s_degrees.push_back(n);
        sys.s_offsets.push_back(s_orders.size());
        for (i64 o : cat.hom(c.object_at(n), d.object_at(n + 1)).orders.orders) s_orders.push_back(o);
    }
    for (i64 n = std::max(c.lo, d.lo); n <= std::min(c.hi, d.hi); ++n) {
        sys.eq_degrees.push_back(n);
        sys.eq_offsets.push_back(eq_orders.size());
        for (i64 o : cat.hom(c.object_at(n), d.object_at(n)).orders.orders) eq_orders.push_back(o);
    }
    GroupHom b{OrderVector(s_orders), OrderVector(eq_orders),
               Mat(s_orders.size(), ElementVector(eq_orders.size(), 0))};
    auto eq_block = [&](i64 n) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < sys.eq_degrees.size(); ++i)
            if (sys.eq_degrees[i] == n) return i;
        return std::nullopt;
    };
    for (std::size_t bi = 0; bi < sys.s_degrees.size(); ++bi) {
        i64 n = sys.s_degrees[bi];
        std::size_t off = sys.s_offsets[bi];
        // d^D_{n+1} ∘ s_n lands in equation block n
        if (auto dd = d.diff(n + 1)) {
            if (auto eb = eq_block(n)) {
                GroupHom post = postcompose_hom(cat, *dd, c.object_at(n));
                for (std::size_t i = 0; i < post.matrix.size(); ++i)
                    for (std::size_t j = 0; j < post.matrix[i].size(); ++j)
                        b.matrix[off + i][sys.eq_offsets[*eb] + j] = mod_pos(
                            b.matrix[off + i][sys.eq_offsets[*eb] + j] + post.matrix[i][j],
                            b.target.orders[sys.eq_offsets[*eb] + j]);
            }
        }
        // s_n ∘ d^C_{n+1} lands in equation block n+1
        if (auto dc = c.diff(n + 1)) {
            if (auto eb = eq_block(n + 1)) {
                GroupHom pre = precompose_hom(cat, *dc, d.object_at(n + 1));
                for (std::size_t i = 0; i < pre.matrix.size(); ++i)
                    for (std::size_t j = 0; j < pre.matrix[i].size(); ++j)
                        b.matrix[off + i][sys.eq_offsets[*eb] + j] = mod_pos(
                            b.matrix[off + i][sys.eq_offsets[*eb] + j] + pre.matrix[i][j],
                            b.target.orders[sys.eq_offsets[*eb] + j]);
            }
        }
    }
    sys.boundary = std::move(b);
    return sys;
}

/// Solves f - g = d∘s + s∘d; returns the homotopy s when one exists.
inline std::optional<std::map<i64, Morphism>> are_homotopic(const ChainMap& f, const ChainMap& g) {
    if (f.source.objects != g.source.objects || f.target.objects != g.target.objects ||
        f.source.lo != g.source.lo || f.target.lo != g.target.lo)
        throw std::invalid_argument("are_homotopic: chain maps are not parallel");
    const FiniteLinearCategory& cat = *f.source.cat;
    HomotopySystem sys = homotopy_system(f.source, f.target);
    ElementVector rhs(sys.boundary.target.size(), 0);
    for (std::size_t ei = 0; ei < sys.eq_degrees.size(); ++ei) {
        i64 n = sys.eq_degrees[ei];
        Morphism delta = cat.add(f.part(n), cat.negate(g.part(n)));
        for (std::size_t k = 0; k < delta.coords.size(); ++k) rhs[sys.eq_offsets[ei] + k] = delta.coords[k];
    }
    auto x = solve(sys.boundary, rhs);
    if (!x) return std::nullopt;
    std::map<i64, Morphism> s;
    for (std::size_t bi = 0; bi < sys.s_degrees.size(); ++bi) {
        i64 n = sys.s_degrees[bi];
        const OrderVector& h = cat.hom(f.source.object_at(n), f.target.object_at(n + 1)).orders;
        ElementVector coords(h.size());
        for (std::size_t k = 0; k < h.size(); ++k) coords[k] = (*x)[sys.s_offsets[bi] + k];
        s[n] = Morphism{f.source.object_at(n), f.target.object_at(n + 1), reduce_coords(h, coords)};
    }
    return s;
}

// ---------------------------------------------------------------------------
// The Hom sequences of an exact sequence
// ---------------------------------------------------------------------------

struct HomSequenceReport {
    bool f_star_injective = false;      // 0 -> Hom(X,A) -> Hom(X,B)
    bool g_star_injective = false;      // 0 -> Hom(C,X) -> Hom(B,X)
    std::map<i64, bool> middle_exact;   // classical exactness at interior degrees
    bool bottom_surjective = false;     // classical surjectivity onto the lowest term
};

/// For an ideal-exact complex: injectivity of f_* and g^* (which always
/// holds) together with the classical sequence behaviour, which is allowed
/// to fail beyond injectivity.
inline HomSequenceReport hom_left_sequences(const ChainComplex& c, i64 x) {
    if (c.hi == c.lo)
        throw std::invalid_argument("hom_left_sequences: the sequence needs at least two terms");
    if (!is_exact(c)) throw std::invalid_argument("hom_left_sequences: input complex is not ideal-exact");
    const FiniteLinearCategory& cat = *c.cat;
    HomSequenceReport rep;
    Morphism top = *c.diff(c.hi);
    rep.f_star_injective = kernel(postcompose_hom(cat, top, x)).is_zero();
    Morphism bottom = *c.diff(c.lo + 1);
    rep.g_star_injective = kernel(precompose_hom(cat, bottom, x)).is_zero();
    for (i64 n = c.lo + 1; n < c.hi; ++n) {
        SubgroupBasis ker_n = kernel(postcompose_hom(cat, *c.diff(n), x));
        SubgroupBasis im_n1 = image(postcompose_hom(cat, *c.diff(n + 1), x));
        rep.middle_exact[n] = (ker_n == im_n1);
    }
    rep.bottom_surjective =
        image(postcompose_hom(cat, bottom, x)) == full_subgroup(cat.hom(x, c.object_at(c.lo)).orders);
    return rep;
}

/// Im(f)(X) (ideal-theoretic) against im(Hom(X, f)) (pointwise image).
inline std::pair<SubgroupBasis, SubgroupBasis> im_vs_pointwise_image(const FiniteLinearCategory& cat,
                                                                     const Morphism& f, i64 x) {
    return {im_of(cat, f).component(x, f.tgt), image(postcompose_hom(cat, f, x))};
}

}  // namespace catideal
