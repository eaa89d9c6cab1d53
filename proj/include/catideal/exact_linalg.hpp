#pragma once

// Exact linear algebra over residue rings Z/m: canonical Howell bases for
// subgroups of finite modules ⊕ Z/d_i, kernels and images of group
// homomorphisms, Smith normal form, and canonical quotient presentations.
// Everything downstream (ideals, homology, homotopy categories) reduces to
// the operations in this header.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "catideal/errors.hpp"

namespace catideal {

using i64 = std::int64_t;
using ElementVector = std::vector<i64>;
using Mat = std::vector<ElementVector>;

inline i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i64 lcm_i64(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_i64(a, b) * b;
}

/// Extended gcd: returns g = gcd(a,b) and sets x, y with a*x + b*y = g.
inline i64 xgcd(i64 a, i64 b, i64& x, i64& y) {
    i64 old_r = a, r = b;
    i64 old_x = 1, cur_x = 0;
    i64 old_y = 0, cur_y = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * cur_x;
        old_x = cur_x;
        cur_x = t;
        t = old_y - q * cur_y;
        old_y = cur_y;
        cur_y = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    x = old_x;
    y = old_y;
    return old_r;
}

inline i64 mod_pos(i64 a, i64 n) {
    assert(n > 0);
    a %= n;
    if (a < 0) a += n;
    return a;
}

/// Inverse of a modulo n; requires gcd(a, n) == 1.
inline i64 mod_inverse(i64 a, i64 n) {
    if (n == 1) return 0;
    i64 x, y;
    i64 g = xgcd(mod_pos(a, n), n, x, y);
    assert(g == 1);
    (void)g;
    return mod_pos(x, n);
}

/// Unit u mod N with u*a ≡ gcd(a, N) (mod N). The pivot-normalizing step of
/// the Howell reduction; see Storjohann-Mulders.
inline i64 stabilizing_unit(i64 a, i64 N) {
    a = mod_pos(a, N);
    if (a == 0) return 1;
    i64 g = gcd_i64(a, N);
    i64 a1 = a / g, n1 = N / g;
    i64 u = (n1 == 1) ? 1 : mod_inverse(a1 % n1, n1);
    if (u == 0) u = 1;
    while (gcd_i64(u, N) != 1) u += n1;
    return mod_pos(u, N);
}

// ---------------------------------------------------------------------------
// Rings and ambient groups
// ---------------------------------------------------------------------------

/// Coefficient ring Z/m. Arithmetic on values reduced below m never exceeds
/// m^2 < 2^62, hence the documented modulus cap.
struct ResidueRing {
    i64 modulus = 2;

    ResidueRing() = default;
    explicit ResidueRing(i64 m) : modulus(m) {
        if (m < 2) throw std::invalid_argument("ResidueRing: modulus must be >= 2");
        if (m > (i64(1) << 31)) throw std::invalid_argument("ResidueRing: modulus above 2^31 cap");
    }
    bool operator==(const ResidueRing& o) const { return modulus == o.modulus; }
};

/// Presentation ⊕ Z/d_i of a finite abelian group. Length 0 encodes the zero
/// group. Order-1 factors are legal and carry no information.
struct OrderVector {
    std::vector<i64> orders;

    OrderVector() = default;
    explicit OrderVector(std::vector<i64> d) : orders(std::move(d)) {
        for (i64 x : orders)
            if (x < 1) throw std::invalid_argument("OrderVector: orders must be >= 1");
    }
    std::size_t size() const { return orders.size(); }
    bool operator==(const OrderVector& o) const { return orders == o.orders; }
    bool operator!=(const OrderVector& o) const { return !(*this == o); }
    bool operator<(const OrderVector& o) const { return orders < o.orders; }

    i64 exponent() const {  // lcm of the orders; 1 for the zero group
        i64 n = 1;
        for (i64 d : orders) n = lcm_i64(n, d);
        return n;
    }
    /// Group order, saturating at cap+1 to avoid overflow.
    i64 order_capped(i64 cap) const {
        i64 t = 1;
        for (i64 d : orders) {
            if (t > cap / std::max<i64>(d, 1) + 1) return cap + 1;
            t *= d;
            if (t > cap) return cap + 1;
        }
        return t;
    }
};

inline ElementVector reduce_coords(const OrderVector& amb, ElementVector v) {
    if (v.size() != amb.size()) throw std::invalid_argument("coordinate length mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_pos(v[i], amb.orders[i]);
    return v;
}

inline bool is_zero_vec(const ElementVector& v) {
    for (i64 x : v)
        if (x != 0) return false;
    return true;
}

inline ElementVector zero_coords(const OrderVector& amb) { return ElementVector(amb.size(), 0); }

inline ElementVector add_coords(const OrderVector& amb, const ElementVector& a, const ElementVector& b) {
    ElementVector out(amb.size());
    for (std::size_t i = 0; i < amb.size(); ++i) out[i] = mod_pos(a[i] + b[i], amb.orders[i]);
    return out;
}

inline ElementVector scale_coords(const OrderVector& amb, i64 c, const ElementVector& a) {
    ElementVector out(amb.size());
    for (std::size_t i = 0; i < amb.size(); ++i) out[i] = mod_pos(mod_pos(c, amb.orders[i]) * a[i], amb.orders[i]);
    return out;
}

/// Odometer over all elements of ⊕ Z/d_i; runs fn on each coordinate tuple.
template <typename Fn>
inline void for_each_element(const OrderVector& amb, Fn&& fn) {
    ElementVector v(amb.size(), 0);
    while (true) {
        fn(static_cast<const ElementVector&>(v));
        std::size_t i = 0;
        while (i < v.size()) {
            if (++v[i] < amb.orders[i]) break;
            v[i] = 0;
            ++i;
        }
        if (i == v.size()) return;
    }
}

// ---------------------------------------------------------------------------
// Howell form over Z/N
// ---------------------------------------------------------------------------

namespace detail {

inline int pivot_col(const ElementVector& r) {
    for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j] != 0) return static_cast<int>(j);
    return -1;
}

inline ElementVector row_combine(const ElementVector& a, i64 ca, const ElementVector& b, i64 cb, i64 N) {
    ElementVector out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out[k] = mod_pos(mod_pos(ca, N) * a[k] + mod_pos(cb, N) * b[k], N);
    return out;
}

/// Canonical Howell basis of the row span of `rows` in (Z/N)^ncols.
/// Unique for the submodule: echelon, pivots divide N, entries above a pivot
/// reduced below it, and span-saturated.
inline Mat howell_mod(const Mat& rows, i64 N, std::size_t ncols) {
    if (N == 1) return {};
    std::vector<ElementVector> work;
    for (const auto& r : rows) {
        ElementVector v(ncols);
        for (std::size_t j = 0; j < ncols; ++j) v[j] = mod_pos(r[j], N);
        if (!is_zero_vec(v)) work.push_back(std::move(v));
    }
    Mat result;
    for (std::size_t j = 0; j < ncols; ++j) {
        std::vector<ElementVector> rest;
        std::optional<ElementVector> piv;
        for (auto& r : work) {
            if (r[j] == 0) {
                rest.push_back(std::move(r));
                continue;
            }
            if (!piv) {
                piv = std::move(r);
                continue;
            }
            i64 s, t;
            i64 g = xgcd((*piv)[j], r[j], s, t);
            ElementVector newp = row_combine(*piv, s, r, t, N);
            ElementVector newr = row_combine(*piv, r[j] / g, r, -((*piv)[j] / g), N);
            assert(newr[j] == 0);
            piv = std::move(newp);
            if (!is_zero_vec(newr)) rest.push_back(std::move(newr));
        }
        work = std::move(rest);
        if (piv) {
            i64 u = stabilizing_unit((*piv)[j], N);
            ElementVector p = row_combine(*piv, u, *piv, 0, N);
            i64 e = p[j];
            assert(e != 0 && N % e == 0);
            if (N / e > 1) {
                ElementVector extra = row_combine(p, N / e, p, 0, N);
                assert(extra[j] == 0);
                if (!is_zero_vec(extra)) work.push_back(std::move(extra));
            }
            result.push_back(std::move(p));
        }
    }
    // reduce entries above each pivot below the pivot value
    for (std::size_t i = 0; i < result.size(); ++i) {
        int j = pivot_col(result[i]);
        i64 e = result[i][j];
        for (std::size_t k = 0; k < i; ++k) {
            i64 c = result[k][j] / e;
            if (c != 0) result[k] = row_combine(result[k], 1, result[i], -c, N);
        }
    }
    return result;
}

/// Greedy reduction of x against a Howell basis H. On success returns the
/// coefficient of each row used; fails (nullopt) iff x is not in the span.
inline std::optional<ElementVector> howell_solve(const Mat& H, ElementVector x, i64 N) {
    ElementVector coeff(H.size(), 0);
    std::map<int, std::size_t> piv;
    for (std::size_t i = 0; i < H.size(); ++i) piv[pivot_col(H[i])] = i;
    for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = mod_pos(x[j], N);
        if (x[j] == 0) continue;
        auto it = piv.find(static_cast<int>(j));
        if (it == piv.end()) return std::nullopt;
        const ElementVector& row = H[it->second];
        i64 e = row[j];
        if (x[j] % e != 0) return std::nullopt;
        i64 c = x[j] / e;
        coeff[it->second] = mod_pos(coeff[it->second] + c, N);
        for (std::size_t k = j; k < x.size(); ++k) x[k] = mod_pos(x[k] - c * row[k], N);
    }
    return coeff;
}

/// Left kernel {x : x*A ≡ 0 (mod N)} of a p x n matrix, via Howell of [A|I].
inline Mat left_kernel_mod(const Mat& A, i64 N, std::size_t p, std::size_t n) {
    if (N == 1) return {};
    Mat M(p, ElementVector(n + p, 0));
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = mod_pos(A[i][j], N);
        M[i][n + i] = 1;
    }
    Mat H = howell_mod(M, N, n + p);
    Mat out;
    for (const auto& r : H) {
        bool head_zero = true;
        for (std::size_t j = 0; j < n; ++j)
            if (r[j] != 0) head_zero = false;
        if (head_zero) out.emplace_back(r.begin() + static_cast<long>(n), r.end());
    }
    return howell_mod(out, N, p);
}

/// One solution of x*A ≡ b (mod N), if any.
inline std::optional<ElementVector> solve_mod(const Mat& A, const ElementVector& b, i64 N, std::size_t p,
                                              std::size_t n) {
    if (N == 1) return ElementVector(p, 0);
    Mat M(p, ElementVector(n + p, 0));
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = mod_pos(A[i][j], N);
        M[i][n + i] = 1;
    }
    Mat H = howell_mod(M, N, n + p);
    std::map<int, std::size_t> piv;
    for (std::size_t i = 0; i < H.size(); ++i) piv[pivot_col(H[i])] = i;
    ElementVector v(n + p, 0);
    for (std::size_t j = 0; j < n; ++j) v[j] = mod_pos(b[j], N);
    for (std::size_t j = 0; j < n; ++j) {
        if (v[j] == 0) continue;
        auto it = piv.find(static_cast<int>(j));
        if (it == piv.end()) return std::nullopt;
        const ElementVector& row = H[it->second];
        i64 e = row[j];
        if (v[j] % e != 0) return std::nullopt;
        i64 c = v[j] / e;
        for (std::size_t k = j; k < n + p; ++k) v[k] = mod_pos(v[k] - c * row[k], N);
    }
    ElementVector x(p);
    for (std::size_t i = 0; i < p; ++i) x[i] = mod_pos(-v[n + i], N);
    return x;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subgroups of ⊕ Z/d_i
// ---------------------------------------------------------------------------

/// Canonical basis of a subgroup of ⊕ Z/d_i. Rows are stored in ambient
/// coordinates; internally all computations embed coordinate i with the
/// scaling N/d_i into (Z/N)^r, N = lcm(d_i), where Howell form is canonical.
/// Two subgroups are equal iff their rows are equal.
struct SubgroupBasis {
    OrderVector ambient;
    Mat rows;

    bool operator==(const SubgroupBasis& o) const { return ambient == o.ambient && rows == o.rows; }
    bool operator!=(const SubgroupBasis& o) const { return !(*this == o); }
    bool is_zero() const { return rows.empty(); }

    i64 order_capped(i64 cap) const {
        // product over rows of N/ (scaled pivot): order of the subgroup
        i64 N = ambient.exponent();
        if (N == 1) return 1;
        i64 t = 1;
        for (const auto& r : rows) {
            ElementVector e = embed(r);
            int j = detail::pivot_col(e);
            assert(j >= 0);
            i64 cyc = N / e[j];
            if (t > cap / std::max<i64>(cyc, 1) + 1) return cap + 1;
            t *= cyc;
            if (t > cap) return cap + 1;
        }
        return t;
    }

    ElementVector embed(const ElementVector& v) const {
        i64 N = ambient.exponent();
        ElementVector w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = mod_pos(v[i] * (N / ambient.orders[i]), N);
        return w;
    }
    ElementVector unembed(const ElementVector& w) const {
        i64 N = ambient.exponent();
        ElementVector v(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            i64 s = N / ambient.orders[i];
            assert(w[i] % s == 0);
            v[i] = mod_pos(w[i] / s, ambient.orders[i]);
        }
        return v;
    }
    Mat embedded_rows() const {
        Mat out;
        out.reserve(rows.size());
        for (const auto& r : rows) out.push_back(embed(r));
        return out;
    }
};

/// Canonical Howell basis of the subgroup generated by `rows`. Idempotent and
/// independent of generator order.
inline SubgroupBasis howell_form(const Mat& rows, const OrderVector& ambient) {
    SubgroupBasis out{ambient, {}};
    i64 N = ambient.exponent();
    if (N == 1 || ambient.size() == 0) return out;
    Mat emb;
    for (const auto& r : rows) out.rows.push_back(reduce_coords(ambient, r));
    emb = out.embedded_rows();
    Mat H = detail::howell_mod(emb, N, ambient.size());
    out.rows.clear();
    for (const auto& r : H) out.rows.push_back(out.unembed(r));
    return out;
}

inline SubgroupBasis zero_subgroup(const OrderVector& ambient) { return SubgroupBasis{ambient, {}}; }

inline SubgroupBasis full_subgroup(const OrderVector& ambient) {
    Mat rows;
    for (std::size_t i = 0; i < ambient.size(); ++i) {
        ElementVector e(ambient.size(), 0);
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    return howell_form(rows, ambient);
}

inline bool contains(const SubgroupBasis& b, const ElementVector& x) {
    ElementVector v = reduce_coords(b.ambient, x);
    i64 N = b.ambient.exponent();
    if (N == 1) return true;
    return detail::howell_solve(b.embedded_rows(), b.embed(v), N).has_value();
}

/// Coefficients of x over the Howell rows of b, if x lies in the subgroup.
inline std::optional<ElementVector> express(const SubgroupBasis& b, const ElementVector& x) {
    ElementVector v = reduce_coords(b.ambient, x);
    i64 N = b.ambient.exponent();
    if (N == 1) return ElementVector(b.rows.size(), 0);
    return detail::howell_solve(b.embedded_rows(), b.embed(v), N);
}

inline bool subgroup_leq(const SubgroupBasis& a, const SubgroupBasis& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("subgroup_leq: ambient mismatch");
    for (const auto& r : a.rows)
        if (!contains(b, r)) return false;
    return true;
}

inline SubgroupBasis sum(const SubgroupBasis& a, const SubgroupBasis& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("sum: ambient mismatch");
    Mat rows = a.rows;
    rows.insert(rows.end(), b.rows.begin(), b.rows.end());
    return howell_form(rows, a.ambient);
}

/// A ∩ B via the kernel of the stacked difference map (x,y) -> x*A - y*B.
inline SubgroupBasis intersect(const SubgroupBasis& a, const SubgroupBasis& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("intersect: ambient mismatch");
    i64 N = a.ambient.exponent();
    std::size_t n = a.ambient.size();
    if (N == 1 || a.rows.empty() || b.rows.empty()) return zero_subgroup(a.ambient);
    Mat stacked = a.embedded_rows();
    for (const auto& r : b.embedded_rows()) {
        ElementVector neg(n);
        for (std::size_t j = 0; j < n; ++j) neg[j] = mod_pos(-r[j], N);
        stacked.push_back(std::move(neg));
    }
    Mat ker = detail::left_kernel_mod(stacked, N, stacked.size(), n);
    Mat aemb = a.embedded_rows();
    Mat gens;
    for (const auto& c : ker) {
        ElementVector w(n, 0);
        for (std::size_t i = 0; i < aemb.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) w[j] = mod_pos(w[j] + c[i] * aemb[i][j], N);
        gens.push_back(a.unembed(w));
    }
    return howell_form(gens, a.ambient);
}

// ---------------------------------------------------------------------------
// Group homomorphisms
// ---------------------------------------------------------------------------

/// Homomorphism ⊕ Z/d_i -> ⊕ Z/e_j as an integer matrix; row i is the image
/// of the i-th source generator. Well-defined iff e_j | d_i * matrix[i][j].
struct GroupHom {
    OrderVector source;
    OrderVector target;
    Mat matrix;  // source.size() x target.size()

    bool well_formed() const {
        if (matrix.size() != source.size()) return false;
        for (std::size_t i = 0; i < matrix.size(); ++i) {
            if (matrix[i].size() != target.size()) return false;
            for (std::size_t j = 0; j < target.size(); ++j)
                if ((source.orders[i] * mod_pos(matrix[i][j], target.orders[j])) % target.orders[j] != 0)
                    return false;
        }
        return true;
    }

    ElementVector apply(const ElementVector& x) const {
        ElementVector v = reduce_coords(source, x);
        ElementVector out(target.size(), 0);
        for (std::size_t j = 0; j < target.size(); ++j) {
            i64 e = target.orders[j];
            i64 acc = 0;
            for (std::size_t i = 0; i < source.size(); ++i)
                acc = mod_pos(acc + mod_pos(v[i], e) * mod_pos(matrix[i][j], e), e);
            out[j] = acc;
        }
        return out;
    }

    static GroupHom zero(const OrderVector& s, const OrderVector& t) {
        return GroupHom{s, t, Mat(s.size(), ElementVector(t.size(), 0))};
    }
    static GroupHom identity(const OrderVector& s) {
        GroupHom h{s, s, Mat(s.size(), ElementVector(s.size(), 0))};
        for (std::size_t i = 0; i < s.size(); ++i) h.matrix[i][i] = 1;
        return h;
    }
};

/// g ∘ h for h: A -> B, g: B -> C (apply h first).
inline GroupHom compose_homs(const GroupHom& g, const GroupHom& h) {
    if (!(h.target == g.source)) throw ComposabilityError("compose_homs: middle group mismatch");
    GroupHom out{h.source, g.target, Mat(h.source.size(), ElementVector(g.target.size(), 0))};
    for (std::size_t i = 0; i < h.source.size(); ++i) out.matrix[i] = g.apply(h.matrix[i]);
    return out;
}

/// {x in source | h(x) = 0}, canonical form.
inline SubgroupBasis kernel(const GroupHom& h) {
    std::size_t p = h.source.size(), n = h.target.size();
    if (n == 0 || h.target.exponent() == 1) return full_subgroup(h.source);
    if (p == 0) return zero_subgroup(h.source);
    i64 N = lcm_i64(h.source.exponent(), h.target.exponent());
    // scaled condition matrix: column j scaled by N/e_j
    Mat A(p, ElementVector(n, 0));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < n; ++j)
            A[i][j] = mod_pos(mod_pos(h.matrix[i][j], N) * (N / h.target.orders[j]), N);
    Mat ker = detail::left_kernel_mod(A, N, p, n);
    Mat gens;
    for (const auto& r : ker) gens.push_back(reduce_coords(h.source, r));
    // coordinates only matter modulo d_i; relation rows d_i*e_i are kernel
    // elements automatically, so plain reduction is enough
    return howell_form(gens, h.source);
}

/// Howell basis of {h(x)}.
inline SubgroupBasis image(const GroupHom& h) {
    Mat rows;
    for (const auto& r : h.matrix) rows.push_back(r);
    return howell_form(rows, h.target);
}

/// Solutions x of h(x) = y, one representative (if any).
inline std::optional<ElementVector> solve(const GroupHom& h, const ElementVector& y) {
    std::size_t p = h.source.size(), n = h.target.size();
    i64 N = lcm_i64(h.source.exponent(), h.target.exponent());
    if (N == 1) return ElementVector(p, 0);
    Mat A(p, ElementVector(n, 0));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < n; ++j)
            A[i][j] = mod_pos(mod_pos(h.matrix[i][j], N) * (N / h.target.orders[j]), N);
    ElementVector b(n);
    ElementVector yr = reduce_coords(h.target, y);
    for (std::size_t j = 0; j < n; ++j) b[j] = mod_pos(yr[j] * (N / h.target.orders[j]), N);
    auto x = detail::solve_mod(A, b, N, p, n);
    if (!x) return std::nullopt;
    return reduce_coords(h.source, *x);
}

// ---------------------------------------------------------------------------
// Smith normal form and invariant factors
// ---------------------------------------------------------------------------

using InvariantFactors = std::vector<i64>;  // ascending divisibility chain, each >= 2

namespace detail {

struct SnfResult {
    std::vector<i64> diag;  // length min(rows, cols), nonnegative, chained
    Mat V, Vinv;            // cols x cols column transforms (when requested)
};

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("smith_normal_form: entry overflow");
    return r;
}
inline i64 checked_addmul(i64 a, i64 c, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, checked_mul(c, b), &r))
        throw std::overflow_error("smith_normal_form: entry overflow");
    return r;
}

/// Smith normal form by row/column reduction with minimal-pivot selection.
/// Exact integer arithmetic; inputs at desk scale keep entries far below the
/// checked i64 range.
inline SnfResult smith_normal_form(Mat A, bool want_transforms) {
    std::size_t rows = A.size();
    std::size_t cols = rows == 0 ? 0 : A[0].size();
    SnfResult res;
    if (want_transforms) {
        res.V.assign(cols, ElementVector(cols, 0));
        res.Vinv.assign(cols, ElementVector(cols, 0));
        for (std::size_t i = 0; i < cols; ++i) res.V[i][i] = res.Vinv[i][i] = 1;
    }
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (auto& r : A) std::swap(r[a], r[b]);
        if (want_transforms) {
            for (auto& r : res.V) std::swap(r[a], r[b]);
            std::swap(res.Vinv[a], res.Vinv[b]);
        }
    };
    auto addmul_col = [&](std::size_t dst, std::size_t src, i64 c) {
        // col_dst += c * col_src
        if (c == 0) return;
        for (auto& r : A) r[dst] = checked_addmul(r[dst], c, r[src]);
        if (want_transforms) {
            for (auto& r : res.V) r[dst] = checked_addmul(r[dst], c, r[src]);
            for (std::size_t j = 0; j < res.Vinv[src].size(); ++j)
                res.Vinv[src][j] = checked_addmul(res.Vinv[src][j], -c, res.Vinv[dst][j]);
        }
    };
    auto negate_col = [&](std::size_t c) {
        for (auto& r : A) r[c] = -r[c];
        if (want_transforms) {
            for (auto& r : res.V) r[c] = -r[c];
            for (auto& v : res.Vinv[c]) v = -v;
        }
    };
    std::size_t t = 0;
    std::size_t nmin = std::min(rows, cols);
    while (t < nmin) {
        // locate minimal nonzero entry in the trailing submatrix
        std::size_t bi = t, bj = t;
        i64 best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (A[i][j] != 0 && (best == 0 || std::abs(A[i][j]) < std::abs(best))) {
                    best = A[i][j];
                    bi = i;
                    bj = j;
                }
        if (best == 0) break;
        std::swap(A[t], A[bi]);
        swap_cols(t, bj);
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (A[i][t] == 0) continue;
            i64 q = A[i][t] / A[t][t];
            for (std::size_t j = t; j < cols; ++j) A[i][j] = checked_addmul(A[i][j], -q, A[t][j]);
            if (A[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (A[t][j] == 0) continue;
            i64 q = A[t][j] / A[t][t];
            addmul_col(j, t, -q);
            if (A[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        // divisibility fixup: pull in a row whose entries resist the pivot
        bool redo = false;
        for (std::size_t i = t + 1; i < rows && !redo; ++i)
            for (std::size_t j = t + 1; j < cols && !redo; ++j)
                if (A[i][j] % A[t][t] != 0) {
                    for (std::size_t k = t; k < cols; ++k) A[t][k] = checked_addmul(A[t][k], 1, A[i][k]);
                    redo = true;
                }
        if (redo) continue;
        if (A[t][t] < 0) negate_col(t);
        ++t;
    }
    res.diag.assign(nmin, 0);
    for (std::size_t i = 0; i < t; ++i) res.diag[i] = A[i][i];
    return res;
}

}  // namespace detail

/// Ascending invariant-factor chain of ⊕ Z/orders (dropping trivial factors).
inline InvariantFactors invariant_factors_of(const std::vector<i64>& orders) {
    // merge prime powers: k-th factor collects the k-th largest exponent of
    // every prime
    std::map<i64, std::vector<int>> exps;
    for (i64 d : orders) {
        i64 v = d;
        for (i64 p = 2; p * p <= v; ++p) {
            if (v % p != 0) continue;
            int e = 0;
            while (v % p == 0) {
                v /= p;
                ++e;
            }
            exps[p].push_back(e);
        }
        if (v > 1) exps[v].push_back(1);
    }
    std::size_t layers = 0;
    for (auto& [p, es] : exps) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        layers = std::max(layers, es.size());
    }
    InvariantFactors chain(layers, 1);
    for (auto& [p, es] : exps)
        for (std::size_t k = 0; k < es.size(); ++k) {
            i64 pw = 1;
            for (int e = 0; e < es[k]; ++e) pw *= p;
            chain[k] *= pw;  // k-th largest goes to the k-th biggest factor
        }
    std::sort(chain.begin(), chain.end());
    InvariantFactors out;
    for (i64 f : chain)
        if (f > 1) out.push_back(f);
    return out;
}

/// Invariant factors of ambient/sub via Smith form of a relation presentation.
inline InvariantFactors quotient_invariants(const OrderVector& ambient, const SubgroupBasis& sub) {
    if (sub.ambient != ambient) throw std::invalid_argument("quotient_invariants: ambient mismatch");
    std::size_t r = ambient.size();
    if (r == 0) return {};
    Mat rel = sub.rows;
    for (std::size_t i = 0; i < r; ++i) {
        ElementVector d(r, 0);
        d[i] = ambient.orders[i];
        rel.push_back(std::move(d));
    }
    auto snf = detail::smith_normal_form(rel, false);
    std::vector<i64> diag;
    for (i64 s : snf.diag) diag.push_back(s == 0 ? 1 : s);
    return invariant_factors_of(diag);
}

// ---------------------------------------------------------------------------
// Quotient presentations K/B
// ---------------------------------------------------------------------------

/// Canonical presentation of the subquotient K/B of an ambient ⊕ Z/d_i,
/// carrying generator lifts (elements of K) and a projection of elements of
/// K onto quotient coordinates. Built from the Smith form of the coefficient
/// relation lattice {c : c * K_rows ∈ B}.
class QuotientPresentation {
  public:
    QuotientPresentation() = default;

    const OrderVector& quotient() const { return quotient_; }
    const OrderVector& ambient() const { return ambient_; }
    const SubgroupBasis& numerator() const { return kgens_; }
    const SubgroupBasis& denominator() const { return b_; }
    const ElementVector& lift(std::size_t i) const { return lifts_[i]; }
    bool trivial() const { return quotient_.size() == 0; }

    /// Quotient coordinates of x (x must lie in K).
    ElementVector project(const ElementVector& x) const {
        auto c = express(kgens_, x);
        if (!c) throw ContainmentViolation("QuotientPresentation::project: element outside numerator");
        ElementVector y(kept_.size(), 0);
        for (std::size_t a = 0; a < kept_.size(); ++a) {
            std::size_t col = kept_[a];
            i64 s = snf_diag_[col];
            i64 acc = 0;
            for (std::size_t i = 0; i < c->size(); ++i)
                acc = mod_pos(acc + mod_pos((*c)[i], s) * mod_pos(V_[i][col], s), s);
            y[a] = acc;
        }
        return y;
    }

    friend QuotientPresentation subquotient_presentation(const OrderVector&, const SubgroupBasis&,
                                                         const SubgroupBasis&);

  private:
    OrderVector ambient_;
    SubgroupBasis kgens_;
    SubgroupBasis b_;
    OrderVector quotient_;
    std::vector<ElementVector> lifts_;
    Mat V_;
    std::vector<i64> snf_diag_;
    std::vector<std::size_t> kept_;
};

inline QuotientPresentation subquotient_presentation(const OrderVector& ambient, const SubgroupBasis& K,
                                                     const SubgroupBasis& B) {
    if (K.ambient != ambient || B.ambient != ambient)
        throw std::invalid_argument("subquotient_presentation: ambient mismatch");
    if (!subgroup_leq(B, K))
        throw ContainmentViolation("subquotient_presentation: denominator not inside numerator");
    QuotientPresentation out;
    out.ambient_ = ambient;
    out.kgens_ = K;
    out.b_ = B;
    std::size_t p = K.rows.size();
    if (p == 0) return out;  // trivial quotient of the zero subgroup
    i64 N = ambient.exponent();
    std::size_t n = ambient.size();
    // relation lattice {c : c*K ∈ B} modulo N, via the stacked kernel
    Mat stacked = K.embedded_rows();
    for (const auto& r : B.embedded_rows()) stacked.push_back(r);
    Mat ker = detail::left_kernel_mod(stacked, N, stacked.size(), n);
    Mat rel;
    for (const auto& r : ker) rel.emplace_back(r.begin(), r.begin() + static_cast<long>(p));
    for (std::size_t i = 0; i < p; ++i) {
        ElementVector d(p, 0);
        d[i] = N;
        rel.push_back(std::move(d));
    }
    auto snf = detail::smith_normal_form(rel, true);
    out.snf_diag_.assign(p, 1);
    for (std::size_t i = 0; i < snf.diag.size() && i < p; ++i) out.snf_diag_[i] = snf.diag[i] == 0 ? 1 : snf.diag[i];
    out.V_ = snf.V;
    std::vector<i64> qorders;
    for (std::size_t i = 0; i < p; ++i)
        if (out.snf_diag_[i] > 1) {
            out.kept_.push_back(i);
            qorders.push_back(out.snf_diag_[i]);
        }
    out.quotient_ = OrderVector(qorders);
    for (std::size_t a = 0; a < out.kept_.size(); ++a) {
        std::size_t idx = out.kept_[a];
        // generator lift: row idx of V^{-1} gives coefficients over K's rows
        ElementVector elem(n, 0);
        for (std::size_t i = 0; i < p; ++i) {
            i64 c = snf.Vinv[idx][i];
            for (std::size_t j = 0; j < n; ++j) {
                i64 d = ambient.orders[j];
                elem[j] = mod_pos(elem[j] + mod_pos(c, d) * K.rows[i][j], d);
            }
        }
        out.lifts_.push_back(reduce_coords(ambient, elem));
    }
    return out;
}

/// Presentation of ambient/sub.
inline QuotientPresentation quotient_presentation(const OrderVector& ambient, const SubgroupBasis& sub) {
    return subquotient_presentation(ambient, full_subgroup(ambient), sub);
}

/// Independent generating set of a subgroup: K presented as ⊕ Z/f_j.
inline QuotientPresentation subgroup_decomposition(const SubgroupBasis& K) {
    return subquotient_presentation(K.ambient, K, zero_subgroup(K.ambient));
}

/// The unique map induced on quotients by h with h(subS) ⊆ subT.
inline GroupHom induced_on_quotient(const GroupHom& h, const SubgroupBasis& subS, const SubgroupBasis& subT) {
    if (subS.ambient != h.source || subT.ambient != h.target)
        throw std::invalid_argument("induced_on_quotient: ambient mismatch");
    for (const auto& r : subS.rows)
        if (!contains(subT, h.apply(r)))
            throw WellDefinednessViolation("induced_on_quotient: h(subS) not contained in subT");
    QuotientPresentation ps = quotient_presentation(h.source, subS);
    QuotientPresentation pt = quotient_presentation(h.target, subT);
    GroupHom out{ps.quotient(), pt.quotient(), Mat(ps.quotient().size(), ElementVector(pt.quotient().size(), 0))};
    for (std::size_t i = 0; i < ps.quotient().size(); ++i) out.matrix[i] = pt.project(h.apply(ps.lift(i)));
    return out;
}

}  // namespace catideal
