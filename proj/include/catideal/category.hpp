#pragma once

// Finite additive (Z/m-linear) categories: finitely many objects, finitely
// generated Hom-groups ⊕ Z/d_i with fixed ordered bases, and composition
// given by structure constants extended bilinearly.

#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catideal/exact_linalg.hpp"

namespace catideal {

/// Morphism of a FiniteLinearCategory: endpoints plus coordinates in the
/// declared basis of Hom(source, target).
struct Morphism {
    i64 src = 0;
    i64 tgt = 0;
    ElementVector coords;

    bool operator==(const Morphism& o) const { return src == o.src && tgt == o.tgt && coords == o.coords; }
    bool operator!=(const Morphism& o) const { return !(*this == o); }
    bool operator<(const Morphism& o) const {
        if (src != o.src) return src < o.src;
        if (tgt != o.tgt) return tgt < o.tgt;
        return coords < o.coords;
    }
    bool is_zero() const { return is_zero_vec(coords); }
};

struct HomGroup {
    i64 src = 0;
    i64 tgt = 0;
    OrderVector orders;
    std::vector<std::string> basis_labels;
};

struct CategoryReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// A validated finite Z/m-linear category. Immutable after construction;
/// all operations are pure.
class FiniteLinearCategory {
  public:
    ResidueRing ring;
    std::vector<std::string> labels;
    // per ordered object pair (a,b)
    std::vector<HomGroup> homs;
    // structure constants: table(a,b,c)[i][j] = coords of e_j ∘ e_i in
    // Hom(a,c) for e_i in Hom(a,b), e_j in Hom(b,c)
    std::vector<std::vector<std::vector<ElementVector>>> comp;
    std::vector<ElementVector> identities;
    // module-model payload: cyclic decomposition per object (empty vector of
    // objects when the category was not built from modules)
    std::vector<std::vector<i64>> module_decomp;

    std::size_t object_count() const { return labels.size(); }

    const HomGroup& hom(i64 a, i64 b) const { return homs[pair_index(a, b)]; }

    const ElementVector& struct_const(i64 a, i64 b, i64 c, std::size_t i, std::size_t j) const {
        return comp[triple_index(a, b, c)][i][j];
    }

    bool is_module_model() const { return !module_decomp.empty(); }

    Morphism zero_morphism(i64 a, i64 b) const { return Morphism{a, b, zero_coords(hom(a, b).orders)}; }

    Morphism identity(i64 a) const { return Morphism{a, a, identities[static_cast<std::size_t>(a)]}; }

    Morphism basis_morphism(i64 a, i64 b, std::size_t i) const {
        ElementVector v = zero_coords(hom(a, b).orders);
        v.at(i) = 1;
        return Morphism{a, b, std::move(v)};
    }

    Morphism make_morphism(i64 a, i64 b, ElementVector coords) const {
        return Morphism{a, b, reduce_coords(hom(a, b).orders, std::move(coords))};
    }

    Morphism add(const Morphism& f, const Morphism& g) const {
        if (f.src != g.src || f.tgt != g.tgt) throw ComposabilityError("add: endpoint mismatch");
        return Morphism{f.src, f.tgt, add_coords(hom(f.src, f.tgt).orders, f.coords, g.coords)};
    }

    Morphism scale(i64 c, const Morphism& f) const {
        return Morphism{f.src, f.tgt, scale_coords(hom(f.src, f.tgt).orders, c, f.coords)};
    }

    Morphism negate(const Morphism& f) const { return scale(-1, f); }

    /// g ∘ f, bilinear extension of the structure-constant table.
    Morphism compose(const Morphism& g, const Morphism& f) const {
        if (f.tgt != g.src)
            throw ComposabilityError("compose: target of f (" + label(f.tgt) + ") is not source of g (" +
                                     label(g.src) + ")");
        const OrderVector& out_orders = hom(f.src, g.tgt).orders;
        ElementVector out = zero_coords(out_orders);
        i64 m = ring.modulus;
        for (std::size_t i = 0; i < f.coords.size(); ++i) {
            if (f.coords[i] == 0) continue;
            for (std::size_t j = 0; j < g.coords.size(); ++j) {
                if (g.coords[j] == 0) continue;
                i64 c = mod_pos(f.coords[i] * g.coords[j], m);
                const ElementVector& t = struct_const(f.src, f.tgt, g.tgt, i, j);
                for (std::size_t k = 0; k < out.size(); ++k)
                    out[k] = mod_pos(out[k] + c * t[k], out_orders.orders[k]);
            }
        }
        return Morphism{f.src, g.tgt, std::move(out)};
    }

    const std::string& label(i64 a) const { return labels[static_cast<std::size_t>(a)]; }

    i64 object_by_label(const std::string& name) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == name) return static_cast<i64>(i);
        throw std::invalid_argument("unknown object label: " + name);
    }

    std::string describe(const Morphism& f) const {
        std::ostringstream os;
        os << label(f.src) << "->" << label(f.tgt) << ":(";
        for (std::size_t i = 0; i < f.coords.size(); ++i) os << (i ? "," : "") << f.coords[i];
        os << ")";
        return os.str();
    }

    /// Every morphism of Hom(a,b); throws when the group order exceeds cap.
    std::vector<Morphism> all_morphisms(i64 a, i64 b, i64 cap = 4096) const {
        const OrderVector& ords = hom(a, b).orders;
        if (ords.order_capped(cap) > cap)
            throw EnumerationCapExceeded("all_morphisms: Hom(" + label(a) + "," + label(b) +
                                         ") exceeds enumeration cap");
        std::vector<Morphism> out;
        for_each_element(ords, [&](const ElementVector& v) { out.push_back(Morphism{a, b, v}); });
        return out;
    }

    std::size_t pair_index(i64 a, i64 b) const {
        check_object(a);
        check_object(b);
        return static_cast<std::size_t>(a) * object_count() + static_cast<std::size_t>(b);
    }

    std::size_t triple_index(i64 a, i64 b, i64 c) const {
        return (static_cast<std::size_t>(a) * object_count() + static_cast<std::size_t>(b)) * object_count() +
               static_cast<std::size_t>(c);
    }

    void check_object(i64 a) const {
        if (a < 0 || static_cast<std::size_t>(a) >= object_count())
            throw std::invalid_argument("unknown object index " + std::to_string(a));
    }
};

/// Structural and axiomatic validation: order compatibility of every
/// structure constant, identity laws, and associativity over all composable
/// basis triples. Violations are report entries, not errors.
inline CategoryReport validate(const FiniteLinearCategory& cat) {
    CategoryReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.violations.push_back(s);
    };
    const std::size_t n = cat.object_count();
    i64 m = cat.ring.modulus;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const HomGroup& h = cat.hom(static_cast<i64>(a), static_cast<i64>(b));
            for (i64 d : h.orders.orders)
                if (d < 1 || m % d != 0)
                    fail("order " + std::to_string(d) + " does not divide modulus in Hom(" + cat.labels[a] + "," +
                         cat.labels[b] + ")");
        }
    // order compatibility of structure constants
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const auto& hab = cat.hom(static_cast<i64>(a), static_cast<i64>(b)).orders;
                const auto& hbc = cat.hom(static_cast<i64>(b), static_cast<i64>(c)).orders;
                const auto& hac = cat.hom(static_cast<i64>(a), static_cast<i64>(c)).orders;
                for (std::size_t i = 0; i < hab.size(); ++i)
                    for (std::size_t j = 0; j < hbc.size(); ++j) {
                        const ElementVector& t =
                            cat.struct_const(static_cast<i64>(a), static_cast<i64>(b), static_cast<i64>(c), i, j);
                        for (std::size_t k = 0; k < hac.size(); ++k) {
                            i64 ord = hac.orders[k];
                            if ((hab.orders[i] * mod_pos(t[k], ord)) % ord != 0 ||
                                (hbc.orders[j] * mod_pos(t[k], ord)) % ord != 0)
                                fail("order-incompatible structure constant at (" + cat.labels[a] + "," +
                                     cat.labels[b] + "," + cat.labels[c] + ") basis (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
                        }
                    }
            }
    if (!rep.ok) return rep;  // bilinear extension might not be well defined below
    // identity laws on every basis morphism
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto& h = cat.hom(static_cast<i64>(a), static_cast<i64>(b));
            for (std::size_t i = 0; i < h.orders.size(); ++i) {
                Morphism e = cat.basis_morphism(static_cast<i64>(a), static_cast<i64>(b), i);
                if (cat.compose(e, cat.identity(static_cast<i64>(a))) != e)
                    fail("right identity law fails at basis " + h.basis_labels[i] + " of Hom(" + cat.labels[a] +
                         "," + cat.labels[b] + ")");
                if (cat.compose(cat.identity(static_cast<i64>(b)), e) != e)
                    fail("left identity law fails at basis " + h.basis_labels[i] + " of Hom(" + cat.labels[a] +
                         "," + cat.labels[b] + ")");
            }
        }
    // associativity over all composable basis triples
    for (std::size_t a = 0; a < n && rep.violations.size() < 64; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const auto& hab = cat.hom(static_cast<i64>(a), static_cast<i64>(b));
                    const auto& hbc = cat.hom(static_cast<i64>(b), static_cast<i64>(c));
                    const auto& hcd = cat.hom(static_cast<i64>(c), static_cast<i64>(d));
                    for (std::size_t i = 0; i < hab.orders.size(); ++i)
                        for (std::size_t j = 0; j < hbc.orders.size(); ++j)
                            for (std::size_t k = 0; k < hcd.orders.size(); ++k) {
                                Morphism f = cat.basis_morphism(static_cast<i64>(a), static_cast<i64>(b), i);
                                Morphism g = cat.basis_morphism(static_cast<i64>(b), static_cast<i64>(c), j);
                                Morphism h = cat.basis_morphism(static_cast<i64>(c), static_cast<i64>(d), k);
                                if (cat.compose(h, cat.compose(g, f)) != cat.compose(cat.compose(h, g), f))
                                    fail("associativity fails at triple (" + hab.basis_labels[i] + "," +
                                         hbc.basis_labels[j] + "," + hcd.basis_labels[k] + ")");
                            }
                }
    return rep;
}

/// The opposite category: Hom^op(a,b) = Hom(b,a) with reversed composition.
inline FiniteLinearCategory opposite(const FiniteLinearCategory& cat) {
    FiniteLinearCategory op;
    op.ring = cat.ring;
    op.labels = cat.labels;
    op.module_decomp = cat.module_decomp;
    const std::size_t n = cat.object_count();
    op.homs.resize(n * n);
    op.comp.resize(n * n * n);
    op.identities = cat.identities;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            HomGroup h = cat.hom(static_cast<i64>(b), static_cast<i64>(a));
            std::swap(h.src, h.tgt);
            op.homs[a * n + b] = std::move(h);
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const auto& hab = op.homs[a * n + b].orders;
                const auto& hbc = op.homs[b * n + c].orders;
                auto& table = op.comp[(a * n + b) * n + c];
                table.assign(hab.size(), std::vector<ElementVector>(hbc.size()));
                for (std::size_t i = 0; i < hab.size(); ++i)
                    for (std::size_t j = 0; j < hbc.size(); ++j)
                        table[i][j] = cat.struct_const(static_cast<i64>(c), static_cast<i64>(b),
                                                       static_cast<i64>(a), j, i);
            }
    return op;
}

inline Morphism transport_to_opposite(const Morphism& f) { return Morphism{f.tgt, f.src, f.coords}; }

/// Post-composition with g as a homomorphism Hom(x, src g) -> Hom(x, tgt g).
inline GroupHom postcompose_hom(const FiniteLinearCategory& cat, const Morphism& g, i64 x) {
    const OrderVector& src = cat.hom(x, g.src).orders;
    const OrderVector& tgt = cat.hom(x, g.tgt).orders;
    GroupHom h{src, tgt, Mat(src.size())};
    for (std::size_t i = 0; i < src.size(); ++i)
        h.matrix[i] = cat.compose(g, cat.basis_morphism(x, g.src, i)).coords;
    return h;
}

/// Pre-composition with g as a homomorphism Hom(tgt g, y) -> Hom(src g, y).
inline GroupHom precompose_hom(const FiniteLinearCategory& cat, const Morphism& g, i64 y) {
    const OrderVector& src = cat.hom(g.tgt, y).orders;
    const OrderVector& tgt = cat.hom(g.src, y).orders;
    GroupHom h{src, tgt, Mat(src.size())};
    for (std::size_t i = 0; i < src.size(); ++i)
        h.matrix[i] = cat.compose(cat.basis_morphism(g.tgt, y, i), g).coords;
    return h;
}

}  // namespace catideal
