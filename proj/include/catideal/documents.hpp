#pragma once

// Line-oriented description documents for categories, complexes, and complex
// lists, plus the bundled examples. The format is key/value per line with
// explicit integer vectors, '#' comments, and no expression language.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "catideal/builders.hpp"
#include "catideal/complex.hpp"

namespace catideal {

struct CategoryDocument {
    std::string kind;  // module | free | quiver | explicit
    i64 modulus = 0;
    // module payload
    std::vector<std::string> object_labels;
    std::vector<std::vector<i64>> decompositions;
    // free payload
    FiniteOrdinaryCategory ordinary;
    // quiver payload
    Quiver quiver;
    std::vector<std::vector<std::string>> relations;
    std::size_t cap = 0;
    // explicit payload
    std::map<std::pair<std::string, std::string>, std::vector<i64>> hom_orders;
    std::map<std::string, std::vector<i64>> identity_coords;
    std::map<std::tuple<std::string, std::string, std::string, std::size_t, std::size_t>, std::vector<i64>>
        struct_consts;
};

struct ComplexDocument {
    std::string category_ref;
    i64 lo = 0, hi = 0;
    std::map<i64, std::string> object_by_degree;
    std::map<i64, std::vector<i64>> diff_by_degree;
};

struct ComplexListDocument {
    std::string category_ref;
    std::vector<std::string> names;
    std::vector<ComplexDocument> complexes;  // category_ref left empty
    struct MapDecl {
        std::string name, src, tgt;
        std::map<i64, std::vector<i64>> parts;
    };
    std::vector<MapDecl> maps;
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

inline i64 parse_int(const std::string& tok, int lineno) {
    try {
        std::size_t pos = 0;
        i64 v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (...) {
        throw ParseError("line " + std::to_string(lineno) + ": expected an integer, got '" + tok + "'");
    }
}

inline std::vector<i64> parse_ints(const std::vector<std::string>& toks, std::size_t from, int lineno) {
    std::vector<i64> out;
    for (std::size_t i = from; i < toks.size(); ++i) out.push_back(parse_int(toks[i], lineno));
    return out;
}

}  // namespace detail

inline CategoryDocument parse_category_document(const std::string& text) {
    CategoryDocument doc;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];
        auto need = [&](std::size_t n) {
            if (toks.size() < n)
                throw ParseError("line " + std::to_string(lineno) + ": '" + key + "' needs more fields");
        };
        if (key == "kind") {
            need(2);
            doc.kind = toks[1];
            if (doc.kind != "module" && doc.kind != "free" && doc.kind != "quiver" && doc.kind != "explicit")
                throw ParseError("line " + std::to_string(lineno) + ": unknown category kind '" + doc.kind + "'");
        } else if (key == "modulus") {
            need(2);
            doc.modulus = detail::parse_int(toks[1], lineno);
        } else if (key == "object") {
            need(2);
            doc.object_labels.push_back(toks[1]);
            doc.decompositions.push_back(detail::parse_ints(toks, 2, lineno));
            doc.ordinary.objects.push_back(toks[1]);
        } else if (key == "arrow") {
            need(4);
            doc.ordinary.arrows.push_back({toks[1], toks[2], toks[3]});
            doc.quiver.arrows.push_back({toks[1], toks[2], toks[3]});
        } else if (key == "compose") {
            need(4);
            doc.ordinary.table[{toks[1], toks[2]}] = toks[3];
        } else if (key == "vertex") {
            need(2);
            doc.quiver.vertices.push_back(toks[1]);
        } else if (key == "relation") {
            need(2);
            doc.relations.push_back(std::vector<std::string>(toks.begin() + 1, toks.end()));
        } else if (key == "cap") {
            need(2);
            doc.cap = static_cast<std::size_t>(detail::parse_int(toks[1], lineno));
        } else if (key == "hom") {
            need(3);
            doc.hom_orders[{toks[1], toks[2]}] = detail::parse_ints(toks, 3, lineno);
        } else if (key == "id") {
            need(2);
            doc.identity_coords[toks[1]] = detail::parse_ints(toks, 2, lineno);
        } else if (key == "comp") {
            need(6);
            std::size_t i = static_cast<std::size_t>(detail::parse_int(toks[4], lineno));
            std::size_t j = static_cast<std::size_t>(detail::parse_int(toks[5], lineno));
            doc.struct_consts[{toks[1], toks[2], toks[3], i, j}] = detail::parse_ints(toks, 6, lineno);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (doc.kind.empty()) throw ParseError("category document: missing 'kind'");
    if (doc.modulus < 2) throw ParseError("category document: missing or bad 'modulus'");
    return doc;
}

inline FiniteLinearCategory build_category(const CategoryDocument& doc) {
    if (doc.kind == "module") return build_module_category(doc.modulus, doc.decompositions, doc.object_labels);
    if (doc.kind == "free") return build_free_linearization(doc.modulus, doc.ordinary);
    if (doc.kind == "quiver") {
        if (doc.cap == 0) throw ParseError("quiver document: missing 'cap'");
        return build_quiver_category(doc.modulus, doc.quiver, doc.relations, doc.cap);
    }
    // explicit: raw hom orders and structure constants
    FiniteLinearCategory cat;
    cat.ring = ResidueRing(doc.modulus);
    cat.labels = doc.object_labels;
    const std::size_t n = cat.labels.size();
    auto idx = [&](const std::string& s) -> std::size_t {
        for (std::size_t i = 0; i < n; ++i)
            if (cat.labels[i] == s) return i;
        throw ParseError("explicit document: unknown object '" + s + "'");
    };
    cat.homs.resize(n * n);
    cat.comp.resize(n * n * n);
    cat.identities.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<i64> orders;
            auto it = doc.hom_orders.find({cat.labels[a], cat.labels[b]});
            if (it != doc.hom_orders.end()) orders = it->second;
            std::vector<std::string> names;
            for (std::size_t i = 0; i < orders.size(); ++i) names.push_back("e" + std::to_string(i));
            cat.homs[a * n + b] = HomGroup{static_cast<i64>(a), static_cast<i64>(b), OrderVector(orders), names};
        }
    for (std::size_t a = 0; a < n; ++a) {
        auto it = doc.identity_coords.find(cat.labels[a]);
        ElementVector id(cat.homs[a * n + a].orders.size(), 0);
        if (it != doc.identity_coords.end()) id = reduce_coords(cat.homs[a * n + a].orders, it->second);
        cat.identities[a] = std::move(id);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                auto& table = cat.comp[(a * n + b) * n + c];
                std::size_t ni = cat.homs[a * n + b].orders.size();
                std::size_t nj = cat.homs[b * n + c].orders.size();
                table.assign(ni, std::vector<ElementVector>(nj, zero_coords(cat.homs[a * n + c].orders)));
            }
    for (const auto& [key, coords] : doc.struct_consts) {
        const auto& [sa, sb, sc, i, j] = key;
        std::size_t a = idx(sa), b = idx(sb), c = idx(sc);
        if (i >= cat.homs[a * n + b].orders.size() || j >= cat.homs[b * n + c].orders.size())
            throw ParseError("explicit document: comp indices out of range");
        cat.comp[(a * n + b) * n + c][i][j] = reduce_coords(cat.homs[a * n + c].orders, coords);
    }
    return cat;
}

inline ComplexDocument parse_complex_document(const std::string& text) {
    ComplexDocument doc;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool kind_seen = false, degrees_seen = false;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];
        auto need = [&](std::size_t n) {
            if (toks.size() < n)
                throw ParseError("line " + std::to_string(lineno) + ": '" + key + "' needs more fields");
        };
        if (key == "kind") {
            need(2);
            if (toks[1] != "complex")
                throw ParseError("line " + std::to_string(lineno) + ": expected kind 'complex'");
            kind_seen = true;
        } else if (key == "category") {
            need(2);
            doc.category_ref = toks[1];
        } else if (key == "degrees") {
            need(3);
            doc.lo = detail::parse_int(toks[1], lineno);
            doc.hi = detail::parse_int(toks[2], lineno);
            if (doc.lo > doc.hi)
                throw ParseError("line " + std::to_string(lineno) + ": degrees must be 'lo hi' with lo <= hi");
            degrees_seen = true;
        } else if (key == "object") {
            need(3);
            doc.object_by_degree[detail::parse_int(toks[1], lineno)] = toks[2];
        } else if (key == "diff") {
            need(2);
            doc.diff_by_degree[detail::parse_int(toks[1], lineno)] = detail::parse_ints(toks, 2, lineno);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!kind_seen || !degrees_seen || doc.category_ref.empty())
        throw ParseError("complex document: 'kind', 'category' and 'degrees' are required");
    return doc;
}

inline ChainComplex build_complex(const ComplexDocument& doc, const FiniteLinearCategory& cat) {
    std::vector<i64> objects;
    for (i64 n = doc.lo; n <= doc.hi; ++n) {
        auto it = doc.object_by_degree.find(n);
        if (it == doc.object_by_degree.end())
            throw ParseError("complex document: no object declared at degree " + std::to_string(n));
        objects.push_back(cat.object_by_label(it->second));
    }
    std::vector<Morphism> diffs;
    for (i64 n = doc.lo + 1; n <= doc.hi; ++n) {
        i64 src = objects[static_cast<std::size_t>(n - doc.lo)];
        i64 tgt = objects[static_cast<std::size_t>(n - 1 - doc.lo)];
        auto it = doc.diff_by_degree.find(n);
        ElementVector coords = it == doc.diff_by_degree.end() ? zero_coords(cat.hom(src, tgt).orders)
                                                              : ElementVector(it->second);
        if (coords.size() != cat.hom(src, tgt).orders.size())
            throw ParseError("complex document: differential at degree " + std::to_string(n) +
                             " has wrong coordinate count");
        diffs.push_back(cat.make_morphism(src, tgt, coords));
    }
    ChainComplex c = make_complex(cat, doc.lo, objects, diffs);
    auto rep = validate_complex(c);
    if (!rep.ok) throw ParseError("complex document: " + rep.violations.front());
    return c;
}

inline ComplexListDocument parse_complexlist_document(const std::string& text) {
    ComplexListDocument doc;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    ComplexDocument* open_complex = nullptr;
    ComplexListDocument::MapDecl* open_map = nullptr;
    bool kind_seen = false;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];
        auto need = [&](std::size_t n) {
            if (toks.size() < n)
                throw ParseError("line " + std::to_string(lineno) + ": '" + key + "' needs more fields");
        };
        if (key == "kind") {
            need(2);
            if (toks[1] != "complexlist")
                throw ParseError("line " + std::to_string(lineno) + ": expected kind 'complexlist'");
            kind_seen = true;
        } else if (key == "category") {
            need(2);
            doc.category_ref = toks[1];
        } else if (key == "complex") {
            need(2);
            if (open_complex || open_map)
                throw ParseError("line " + std::to_string(lineno) + ": nested block");
            doc.names.push_back(toks[1]);
            doc.complexes.emplace_back();
            open_complex = &doc.complexes.back();
        } else if (key == "map") {
            need(4);
            if (open_complex || open_map)
                throw ParseError("line " + std::to_string(lineno) + ": nested block");
            doc.maps.push_back({toks[1], toks[2], toks[3], {}});
            open_map = &doc.maps.back();
        } else if (key == "end") {
            if (!open_complex && !open_map)
                throw ParseError("line " + std::to_string(lineno) + ": stray 'end'");
            open_complex = nullptr;
            open_map = nullptr;
        } else if (key == "degrees" && open_complex) {
            need(3);
            open_complex->lo = detail::parse_int(toks[1], lineno);
            open_complex->hi = detail::parse_int(toks[2], lineno);
        } else if (key == "object" && open_complex) {
            need(3);
            open_complex->object_by_degree[detail::parse_int(toks[1], lineno)] = toks[2];
        } else if (key == "diff" && open_complex) {
            need(2);
            open_complex->diff_by_degree[detail::parse_int(toks[1], lineno)] =
                detail::parse_ints(toks, 2, lineno);
        } else if (key == "at" && open_map) {
            need(2);
            open_map->parts[detail::parse_int(toks[1], lineno)] = detail::parse_ints(toks, 2, lineno);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!kind_seen || doc.category_ref.empty())
        throw ParseError("complex list document: 'kind' and 'category' are required");
    if (open_complex || open_map) throw ParseError("complex list document: unterminated block");
    return doc;
}

// ---------------------------------------------------------------------------
// Bundled example documents
// ---------------------------------------------------------------------------

inline const std::map<std::string, std::string>& bundled_documents() {
    static const std::map<std::string, std::string> docs = {
        {"module-z4",
         "# Z/4-modules on Z/2 and Z/4\n"
         "kind module\n"
         "modulus 4\n"
         "object Z2 2\n"
         "object Z4 4\n"},
        {"matrix-f2",
         "# matrices over F_2 on F_2^0, F_2^1, F_2^2\n"
         "kind module\n"
         "modulus 2\n"
         "object F0\n"
         "object F1 2\n"
         "object F2 2 2\n"},
        {"free-xab",
         "# free Z/4-linearization of the category x, a, b with j*p distinct from q\n"
         "kind free\n"
         "modulus 4\n"
         "object x\n"
         "object a\n"
         "object b\n"
         "arrow p x a\n"
         "arrow q x b\n"
         "arrow j a b\n"
         "arrow jp x b\n"
         "compose j p jp\n"},
        {"ses-z4",
         "# the short exact sequence 0 -> Z2 -> Z4 -> Z2 -> 0 in degrees 2..0\n"
         "kind complex\n"
         "category module-z4\n"
         "degrees 0 2\n"
         "object 2 Z2\n"
         "object 1 Z4\n"
         "object 0 Z2\n"
         "diff 2 1\n"
         "diff 1 1\n"},
        {"bo-z4",
         "# complexes and the map u: Z2 -> Z4 (1 |-> 2) for the cokernel run\n"
         "kind complexlist\n"
         "category module-z4\n"
         "complex X\n"
         "degrees 0 0\n"
         "object 0 Z2\n"
         "end\n"
         "complex Y\n"
         "degrees 0 0\n"
         "object 0 Z4\n"
         "end\n"
         "complex X1\n"
         "degrees 1 1\n"
         "object 1 Z2\n"
         "end\n"
         "complex Y1\n"
         "degrees 1 1\n"
         "object 1 Z4\n"
         "end\n"
         "map u X Y\n"
         "at 0 1\n"
         "end\n"},
    };
    return docs;
}

/// Resolves a document reference: a bundled name, else a file path.
inline std::string load_document(const std::string& ref) {
    auto it = bundled_documents().find(ref);
    if (it != bundled_documents().end()) return it->second;
    std::ifstream in(ref);
    if (!in) throw ParseError("cannot resolve document '" + ref + "' (not bundled, not a readable file)");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace catideal
