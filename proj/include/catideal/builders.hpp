#pragma once

// Constructors for the worked categories: module categories over Z/m (the
// abelian models), free Z/m-linearizations of finite ordinary categories,
// and quiver path categories with monomial relations.

#include <map>
#include <string>
#include <vector>

#include "catideal/category.hpp"

namespace catideal {

// ---------------------------------------------------------------------------
// Module categories A = (chosen finite subcategory of) Z/m-mod
// ---------------------------------------------------------------------------

/// Basis of Hom(⊕ Z/a_k, ⊕ Z/b_l): one generator per factor pair with
/// gcd(a_k, b_l) > 1; the (k,l) generator is 1 |-> b_l/gcd(a_k,b_l) in the
/// (k,l) matrix slot.
inline std::vector<std::pair<std::size_t, std::size_t>> module_basis_pairs(const std::vector<i64>& a,
                                                                           const std::vector<i64>& b) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t l = 0; l < b.size(); ++l)
            if (gcd_i64(a[k], b[l]) > 1) out.emplace_back(k, l);
    return out;
}

/// Desk-scale model of Z/m-mod on the declared objects. Hom-groups are built
/// entrywise from Hom(Z/a, Z/b) ≅ Z/gcd(a,b); composition is matrix
/// multiplication of the representing integer matrices reduced back to the
/// canonical generators.
inline FiniteLinearCategory build_module_category(i64 m, std::vector<std::vector<i64>> decompositions,
                                                  std::vector<std::string> object_labels = {}) {
    ResidueRing ring(m);
    FiniteLinearCategory cat;
    cat.ring = ring;
    const std::size_t n = decompositions.size();
    for (auto& dec : decompositions) {
        std::vector<i64> kept;
        for (i64 c : dec) {
            if (c < 1 || m % c != 0)
                throw std::invalid_argument("build_module_category: factor " + std::to_string(c) +
                                            " does not divide the modulus");
            if (c > 1) kept.push_back(c);  // Z/1 factors are the zero module
        }
        dec = std::move(kept);
    }
    cat.module_decomp = decompositions;
    if (object_labels.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            std::string s = "M" + std::to_string(i);
            object_labels.push_back(s);
        }
    }
    cat.labels = object_labels;
    cat.homs.resize(n * n);
    cat.comp.resize(n * n * n);
    cat.identities.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto& da = decompositions[a];
            const auto& db = decompositions[b];
            auto pairs = module_basis_pairs(da, db);
            std::vector<i64> orders;
            std::vector<std::string> names;
            for (auto [k, l] : pairs) {
                orders.push_back(gcd_i64(da[k], db[l]));
                names.push_back("e" + std::to_string(k) + "_" + std::to_string(l));
            }
            cat.homs[a * n + b] = HomGroup{static_cast<i64>(a), static_cast<i64>(b), OrderVector(orders), names};
        }
    for (std::size_t a = 0; a < n; ++a) {
        const auto& da = decompositions[a];
        auto pairs = module_basis_pairs(da, da);
        ElementVector id(pairs.size(), 0);
        for (std::size_t t = 0; t < pairs.size(); ++t)
            if (pairs[t].first == pairs[t].second) id[t] = 1;
        cat.identities[a] = std::move(id);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const auto& da = decompositions[a];
                const auto& db = decompositions[b];
                const auto& dc = decompositions[c];
                auto pab = module_basis_pairs(da, db);
                auto pbc = module_basis_pairs(db, dc);
                auto pac = module_basis_pairs(da, dc);
                auto& table = cat.comp[(a * n + b) * n + c];
                table.assign(pab.size(), std::vector<ElementVector>(pbc.size()));
                for (std::size_t i = 0; i < pab.size(); ++i)
                    for (std::size_t j = 0; j < pbc.size(); ++j) {
                        auto [k, l] = pab[i];
                        auto [l2, nn] = pbc[j];
                        ElementVector out(pac.size(), 0);
                        if (l == l2) {
                            // composite (k,n) entry of the integer matrices
                            i64 gab = gcd_i64(da[k], db[l]);
                            i64 gbc = gcd_i64(db[l], dc[nn]);
                            i64 t = mod_pos((db[l] / gab) * (dc[nn] / gbc), dc[nn]);
                            i64 gac = gcd_i64(da[k], dc[nn]);
                            if (gac > 1) {
                                i64 gen = dc[nn] / gac;  // canonical generator image
                                if (t % gen != 0)
                                    throw WellDefinednessViolation(
                                        "module composition does not reduce to the canonical generator");
                                for (std::size_t q = 0; q < pac.size(); ++q)
                                    if (pac[q] == std::make_pair(k, nn)) out[q] = mod_pos(t / gen, gac);
                            } else if (t % dc[nn] != 0) {
                                throw WellDefinednessViolation("module composition escapes a trivial Hom slot");
                            }
                        }
                        table[i][j] = std::move(out);
                    }
            }
    return cat;
}

/// Element-level realization of a module-model morphism as a GroupHom
/// between the underlying finite abelian groups.
inline GroupHom module_hom_of(const FiniteLinearCategory& cat, const Morphism& f) {
    if (!cat.is_module_model()) throw std::invalid_argument("module_hom_of: not a module model");
    const auto& da = cat.module_decomp[static_cast<std::size_t>(f.src)];
    const auto& db = cat.module_decomp[static_cast<std::size_t>(f.tgt)];
    auto pairs = module_basis_pairs(da, db);
    GroupHom h{OrderVector(da), OrderVector(db), Mat(da.size(), ElementVector(db.size(), 0))};
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        auto [k, l] = pairs[t];
        i64 g = gcd_i64(da[k], db[l]);
        h.matrix[k][l] = mod_pos(f.coords[t] * (db[l] / g), db[l]);
    }
    return h;
}

/// Inverse of module_hom_of: reads the canonical-generator coordinates off an
/// integer matrix (which must represent a well-defined homomorphism).
inline Morphism morphism_of_module_hom(const FiniteLinearCategory& cat, i64 a, i64 b, const GroupHom& h) {
    if (!cat.is_module_model()) throw std::invalid_argument("morphism_of_module_hom: not a module model");
    const auto& da = cat.module_decomp[static_cast<std::size_t>(a)];
    const auto& db = cat.module_decomp[static_cast<std::size_t>(b)];
    auto pairs = module_basis_pairs(da, db);
    ElementVector coords(pairs.size(), 0);
    for (std::size_t k = 0; k < da.size(); ++k)
        for (std::size_t l = 0; l < db.size(); ++l) {
            i64 g = gcd_i64(da[k], db[l]);
            i64 v = mod_pos(h.matrix[k][l], db[l]);
            i64 gen = db[l] / g;
            if (v % gen != 0)
                throw WellDefinednessViolation("morphism_of_module_hom: matrix entry is not a group hom");
            if (g > 1)
                for (std::size_t t = 0; t < pairs.size(); ++t)
                    if (pairs[t] == std::make_pair(k, l)) coords[t] = mod_pos(v / gen, g);
        }
    return Morphism{a, b, std::move(coords)};
}

// ---------------------------------------------------------------------------
// Free linearization k[C] of a finite ordinary category
// ---------------------------------------------------------------------------

struct OrdinaryArrow {
    std::string name;
    std::string src;
    std::string tgt;
};

/// A finite ordinary category presented by its non-identity arrows and a
/// complete composition table (identities are implicit, named id_<object>).
struct FiniteOrdinaryCategory {
    std::vector<std::string> objects;
    std::vector<OrdinaryArrow> arrows;
    // (g.name, f.name) -> name of g∘f, for composable non-identity pairs
    std::map<std::pair<std::string, std::string>, std::string> table;
};

/// Hom_k(A,B) = free Z/m-module on the ordinary morphisms A -> B, with
/// composition extended bilinearly.
inline FiniteLinearCategory build_free_linearization(i64 m, const FiniteOrdinaryCategory& ord) {
    ResidueRing ring(m);
    FiniteLinearCategory cat;
    cat.ring = ring;
    cat.labels = ord.objects;
    const std::size_t n = ord.objects.size();
    auto obj_index = [&](const std::string& s) -> std::size_t {
        for (std::size_t i = 0; i < n; ++i)
            if (ord.objects[i] == s) return i;
        throw std::invalid_argument("free linearization: unknown object " + s);
    };
    struct Arr {
        std::string name;
        std::size_t src, tgt;
        bool is_id;
    };
    std::vector<Arr> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(Arr{"id_" + ord.objects[i], i, i, true});
    for (const auto& a : ord.arrows) all.push_back(Arr{a.name, obj_index(a.src), obj_index(a.tgt), false});
    auto arrow_index = [&](const std::string& s) -> std::size_t {
        for (std::size_t i = 0; i < all.size(); ++i)
            if (all[i].name == s) return i;
        throw std::invalid_argument("free linearization: unknown morphism " + s);
    };
    // full composition lookup, identities filled in automatically
    auto composite_name = [&](std::size_t gi, std::size_t fi) -> std::string {
        const Arr& g = all[gi];
        const Arr& f = all[fi];
        if (f.tgt != g.src) throw ComposabilityError("free linearization: table pair not composable");
        if (g.is_id) return f.name;
        if (f.is_id) return g.name;
        auto it = ord.table.find({g.name, f.name});
        if (it == ord.table.end())
            throw std::invalid_argument("free linearization: composition table not closed at (" + g.name + "," +
                                        f.name + ")");
        return it->second;
    };
    // group arrows by (src,tgt), identities first
    std::vector<std::vector<std::size_t>> basis(n * n);
    for (std::size_t i = 0; i < all.size(); ++i) basis[all[i].src * n + all[i].tgt].push_back(i);
    cat.homs.resize(n * n);
    cat.comp.resize(n * n * n);
    cat.identities.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<i64> orders(basis[a * n + b].size(), m);
            std::vector<std::string> names;
            for (std::size_t idx : basis[a * n + b]) names.push_back(all[idx].name);
            cat.homs[a * n + b] = HomGroup{static_cast<i64>(a), static_cast<i64>(b), OrderVector(orders), names};
        }
    for (std::size_t a = 0; a < n; ++a) {
        ElementVector id(basis[a * n + a].size(), 0);
        for (std::size_t t = 0; t < basis[a * n + a].size(); ++t)
            if (all[basis[a * n + a][t]].is_id) id[t] = 1;
        cat.identities[a] = std::move(id);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const auto& bab = basis[a * n + b];
                const auto& bbc = basis[b * n + c];
                const auto& bac = basis[a * n + c];
                auto& table = cat.comp[(a * n + b) * n + c];
                table.assign(bab.size(), std::vector<ElementVector>(bbc.size()));
                for (std::size_t i = 0; i < bab.size(); ++i)
                    for (std::size_t j = 0; j < bbc.size(); ++j) {
                        std::string name = composite_name(bbc[j], bab[i]);
                        std::size_t target = arrow_index(name);
                        ElementVector out(bac.size(), 0);
                        bool placed = false;
                        for (std::size_t q = 0; q < bac.size(); ++q)
                            if (bac[q] == target) {
                                out[q] = 1;
                                placed = true;
                            }
                        if (!placed)
                            throw std::invalid_argument("free linearization: composite " + name +
                                                        " has wrong endpoints");
                        table[i][j] = std::move(out);
                    }
            }
    return cat;
}

// ---------------------------------------------------------------------------
// Quiver path categories with monomial relations
// ---------------------------------------------------------------------------

struct QuiverArrow {
    std::string name;
    std::string src;
    std::string tgt;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;
};

/// Path category of a quiver over Z/m, modulo monomial relations (each
/// relation is a path, written in diagrammatic order, declared zero). The
/// basis consists of the surviving paths; a surviving path longer than the
/// cap means the basis does not close and is an error.
inline FiniteLinearCategory build_quiver_category(i64 m, const Quiver& quiver,
                                                  const std::vector<std::vector<std::string>>& relations,
                                                  std::size_t nilpotency_cap) {
    ResidueRing ring(m);
    const std::size_t n = quiver.vertices.size();
    auto vertex_index = [&](const std::string& s) -> std::size_t {
        for (std::size_t i = 0; i < n; ++i)
            if (quiver.vertices[i] == s) return i;
        throw std::invalid_argument("quiver: unknown vertex " + s);
    };
    auto arrow_index = [&](const std::string& s) -> std::size_t {
        for (std::size_t i = 0; i < quiver.arrows.size(); ++i)
            if (quiver.arrows[i].name == s) return i;
        throw std::invalid_argument("quiver: unknown arrow " + s);
    };
    using Path = std::vector<std::size_t>;  // arrow indices, diagrammatic order
    std::vector<Path> rels;
    for (const auto& r : relations) {
        Path p;
        for (const auto& name : r) p.push_back(arrow_index(name));
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (quiver.arrows[p[i]].tgt != quiver.arrows[p[i + 1]].src)
                throw std::invalid_argument("quiver: relation path is not composable");
        if (p.empty()) throw std::invalid_argument("quiver: empty relation");
        rels.push_back(std::move(p));
    }
    auto forbidden = [&](const Path& p) {
        for (const auto& r : rels) {
            if (r.size() > p.size()) continue;
            for (std::size_t off = 0; off + r.size() <= p.size(); ++off) {
                bool hit = true;
                for (std::size_t i = 0; i < r.size(); ++i)
                    if (p[off + i] != r[i]) hit = false;
                if (hit) return true;
            }
        }
        return false;
    };
    struct BasisPath {
        std::size_t src, tgt;
        Path path;
    };
    std::vector<BasisPath> survivors;
    std::vector<BasisPath> frontier;
    for (std::size_t v = 0; v < n; ++v) frontier.push_back(BasisPath{v, v, {}});
    survivors = frontier;
    for (std::size_t len = 1; len <= nilpotency_cap + 1; ++len) {
        std::vector<BasisPath> next;
        for (const auto& bp : frontier)
            for (std::size_t ai = 0; ai < quiver.arrows.size(); ++ai) {
                if (vertex_index(quiver.arrows[ai].src) != bp.tgt) continue;
                BasisPath ext{bp.src, vertex_index(quiver.arrows[ai].tgt), bp.path};
                ext.path.push_back(ai);
                if (!forbidden(ext.path)) next.push_back(std::move(ext));
            }
        if (len == nilpotency_cap + 1) {
            if (!next.empty())
                throw EnumerationCapExceeded(
                    "build_quiver_category: path basis does not close within the nilpotency cap");
            break;
        }
        survivors.insert(survivors.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    FiniteLinearCategory cat;
    cat.ring = ring;
    cat.labels = quiver.vertices;
    std::vector<std::vector<Path>> basis(n * n);
    for (const auto& bp : survivors) basis[bp.src * n + bp.tgt].push_back(bp.path);
    for (auto& b : basis)
        std::sort(b.begin(), b.end(), [](const Path& x, const Path& y) {
            if (x.size() != y.size()) return x.size() < y.size();
            return x < y;
        });
    auto path_name = [&](std::size_t src, const Path& p) {
        if (p.empty()) return "id_" + quiver.vertices[src];
        std::string s;
        for (std::size_t i = p.size(); i-- > 0;) {
            s += quiver.arrows[p[i]].name;
            if (i > 0) s += "*";
        }
        return s;
    };
    cat.homs.resize(n * n);
    cat.comp.resize(n * n * n);
    cat.identities.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<i64> orders(basis[a * n + b].size(), m);
            std::vector<std::string> names;
            for (const auto& p : basis[a * n + b]) names.push_back(path_name(a, p));
            cat.homs[a * n + b] = HomGroup{static_cast<i64>(a), static_cast<i64>(b), OrderVector(orders), names};
        }
    for (std::size_t a = 0; a < n; ++a) {
        ElementVector id(basis[a * n + a].size(), 0);
        for (std::size_t t = 0; t < basis[a * n + a].size(); ++t)
            if (basis[a * n + a][t].empty()) id[t] = 1;
        cat.identities[a] = std::move(id);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const auto& bab = basis[a * n + b];
                const auto& bbc = basis[b * n + c];
                const auto& bac = basis[a * n + c];
                auto& table = cat.comp[(a * n + b) * n + c];
                table.assign(bab.size(), std::vector<ElementVector>(bbc.size()));
                for (std::size_t i = 0; i < bab.size(); ++i)
                    for (std::size_t j = 0; j < bbc.size(); ++j) {
                        Path cattd = bab[i];
                        cattd.insert(cattd.end(), bbc[j].begin(), bbc[j].end());
                        ElementVector out(bac.size(), 0);
                        if (cattd.size() <= nilpotency_cap && !forbidden(cattd))
                            for (std::size_t q = 0; q < bac.size(); ++q)
                                if (bac[q] == cattd) out[q] = 1;
                        table[i][j] = std::move(out);
                    }
            }
    return cat;
}

/// The smallest category where |j> and Im(j) separate: objects x, a, b
/// with arrows p: x->a, q: x->b, j: a->b and the composite j∘p a fourth,
/// distinct arrow. Over Z/m the arrow j has zero cokernel ideal while |j> is
/// a proper subideal of its image ideal.
inline FiniteOrdinaryCategory xab_ordinary_category() {
    FiniteOrdinaryCategory ord;
    ord.objects = {"x", "a", "b"};
    ord.arrows = {{"p", "x", "a"}, {"q", "x", "b"}, {"j", "a", "b"}, {"jp", "x", "b"}};
    ord.table[{"j", "p"}] = "jp";
    return ord;
}

}  // namespace catideal
