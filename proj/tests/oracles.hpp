// Test-only reference computations. Nothing here calls into the library's
// series arithmetic: polynomials are plain int64 vectors, powers of (1-x)
// are repeated naive products, and the degree formulas are rebuilt as
// expression trees and expanded term by term.
#ifndef TDEG_TESTS_ORACLES_HPP
#define TDEG_TESTS_ORACLES_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <utility>
#include <vector>

namespace oracle
{

using Poly = std::vector<std::int64_t>;

inline Poly constant(std::int64_t c, int n)
{
    Poly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = c;
    return p;
}

inline Poly naive_mul(const Poly &a, const Poly &b)
{
    Poly out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (i + j < out.size()) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    return out;
}

inline Poly naive_add(const Poly &a, const Poly &b)
{
    Poly out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += b[i];
    }
    return out;
}

inline Poly block(int d, int n)
{
    Poly p(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= d && k <= n; ++k) {
        p[static_cast<std::size_t>(k)] = 1;
    }
    return p;
}

// (1-x)^m: m copies of (1 - x), or |m| copies of 1 + x + x^2 + ... .
inline Poly one_minus_x_power(int m, int n)
{
    Poly factor(static_cast<std::size_t>(n) + 1, 0);
    if (m >= 0) {
        factor[0] = 1;
        if (n >= 1) {
            factor[1] = -1;
        }
    } else {
        factor = block(n, n);
    }
    Poly acc = constant(1, n);
    for (int i = 0; i < (m >= 0 ? m : -m); ++i) {
        acc = naive_mul(acc, factor);
    }
    return acc;
}

// Minimal expression tree for the generating-function formulas.
struct Expr {
    enum class Kind { Const, Block, OneMinusX, Sum, Prod };
    Kind kind = Kind::Const;
    std::int64_t value = 0; // Const value, Block top degree, OneMinusX exponent
    std::vector<Expr> children;

    static Expr cst(std::int64_t c) { return {Kind::Const, c, {}}; }
    static Expr blk(int d) { return {Kind::Block, d, {}}; }
    static Expr omx(int m) { return {Kind::OneMinusX, m, {}}; }
    static Expr sum(std::vector<Expr> xs) { return {Kind::Sum, 0, std::move(xs)}; }
    static Expr prod(std::vector<Expr> xs) { return {Kind::Prod, 0, std::move(xs)}; }
};

inline Poly expand(const Expr &e, int n)
{
    switch (e.kind) {
        case Expr::Kind::Const:
            return constant(e.value, n);
        case Expr::Kind::Block:
            return block(static_cast<int>(e.value), n);
        case Expr::Kind::OneMinusX:
            return one_minus_x_power(static_cast<int>(e.value), n);
        case Expr::Kind::Sum: {
            Poly acc = constant(0, n);
            for (const auto &c : e.children) {
                acc = naive_add(acc, expand(c, n));
            }
            return acc;
        }
        case Expr::Kind::Prod: {
            Poly acc = constant(1, n);
            for (const auto &c : e.children) {
                acc = naive_mul(acc, expand(c, n));
            }
            return acc;
        }
    }
    return {};
}

struct Pt {
    int a1;
    int a2;
};

// Shadow-type bracket for the component whose weights are picked by `own`
// and whose coupling entry is k.
inline Expr bracket(int chi, const std::vector<Pt> &pts, bool component_two, int k)
{
    auto own = [&](const Pt &p) { return component_two ? p.a2 : p.a1; };
    auto other = [&](const Pt &p) { return component_two ? p.a1 : p.a2; };
    std::vector<Expr> full{Expr::cst(chi - static_cast<int>(pts.size())), Expr::blk(-k)};
    for (const auto &p : pts) {
        if (own(p) > 0) {
            full.push_back(Expr::blk(own(p)));
        }
    }
    std::vector<Expr> terms{Expr::prod(full)};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (own(pts[i]) == 0 || other(pts[i]) != 0) {
            continue;
        }
        std::vector<Expr> f{Expr::blk(own(pts[i]) - k)};
        for (std::size_t q = 0; q < pts.size(); ++q) {
            if (q != i && own(pts[q]) > 0) {
                f.push_back(Expr::blk(own(pts[q])));
            }
        }
        terms.push_back(Expr::prod(f));
    }
    return Expr::sum(terms);
}

inline Expr weight_blocks(const std::vector<Pt> &pts, bool component_two)
{
    std::vector<Expr> f{Expr::cst(1)};
    for (const auto &p : pts) {
        const int a = component_two ? p.a2 : p.a1;
        if (a > 0) {
            f.push_back(Expr::blk(a));
        }
    }
    return Expr::prod(f);
}

inline Expr shadow(int chi, const std::vector<Pt> &pts, int k21)
{
    return Expr::prod({Expr::omx(chi - 1), bracket(chi, pts, true, k21)});
}

inline Expr toda_rho1(int chi, const std::vector<Pt> &pts, int k21)
{
    return Expr::sum({Expr::prod({Expr::omx(chi - 1), weight_blocks(pts, true)}),
                      Expr::prod({Expr::cst(-1), shadow(chi, pts, k21)})});
}

inline Expr toda_rho2(int chi, const std::vector<Pt> &pts, int k12)
{
    return Expr::prod({Expr::omx(chi - 1), Expr::sum({weight_blocks(pts, false),
                                                      Expr::prod({Expr::cst(-1), bracket(chi, pts, false, k12)})})});
}

// {N + sum_{p in A}(1 + alpha_p)} \ {0} up to bound, by enumerating every
// subset A and every N.
inline std::set<int> critical_multiples(const std::vector<int> &weights, int bound)
{
    std::set<int> out;
    const std::size_t subsets = std::size_t{1} << weights.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        int s = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (mask & (std::size_t{1} << i)) {
                s += 1 + weights[i];
            }
        }
        for (int n = 0; n + s <= bound; ++n) {
            if (n + s > 0) {
                out.insert(n + s);
            }
        }
    }
    return out;
}

// Every even (s1, s2) != (0, 0) in [0, limit]^2 satisfying the Pohozaev
// identity, checked by direct evaluation of both sides.
inline std::vector<std::pair<int, int>> pohozaev_scan(int k12, int k21, int g1, int g2, int limit)
{
    std::vector<std::pair<int, int>> out;
    for (std::int64_t s1 = 0; s1 <= limit; s1 += 2) {
        for (std::int64_t s2 = 0; s2 <= limit; s2 += 2) {
            if (s1 == 0 && s2 == 0) {
                continue;
            }
            const std::int64_t lhs = k21 * s1 * s1 + std::int64_t{k12} * k21 * s1 * s2 + k12 * s2 * s2;
            const std::int64_t rhs = 2 * std::int64_t{k21} * (1 + g1) * s1 + 2 * std::int64_t{k12} * (1 + g2) * s2;
            if (lhs == rhs) {
                out.emplace_back(static_cast<int>(s1), static_cast<int>(s2));
            }
        }
    }
    return out;
}

} // namespace oracle

#endif
