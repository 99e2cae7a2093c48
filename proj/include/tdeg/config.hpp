#ifndef TDEG_CONFIG_HPP
#define TDEG_CONFIG_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <tdeg/series.hpp>

namespace tdeg
{

using Rational = boost::multiprecision::cpp_rational;

enum class CartanKind { A2, B2, G2 };

std::string_view to_string(CartanKind kind) noexcept;
// Accepts "A2", "B2", "G2".
CartanKind parse_cartan_kind(std::string_view name);

// Rank-2 Cartan matrix of type A2, B2 or G2 together with its exact inverse.
//   A2 = ((2,-1),(-1,2)),  B2 = ((2,-1),(-2,2)),  G2 = ((2,-1),(-3,2)).
class CartanMatrix
{
public:
    explicit CartanMatrix(CartanKind kind);

    CartanKind kind() const noexcept { return kind_; }
    // 1-based indices, i, j in {1, 2}.
    int entry(int i, int j) const;
    const Rational &inverse(int i, int j) const;

    int k12() const noexcept { return k_[0][1]; }
    int k21() const noexcept { return k_[1][0]; }
    int determinant() const noexcept { return k_[0][0] * k_[1][1] - k_[0][1] * k_[1][0]; }

    friend bool operator==(const CartanMatrix &a, const CartanMatrix &b) noexcept { return a.kind_ == b.kind_; }

private:
    CartanKind kind_;
    std::array<std::array<int, 2>, 2> k_{};
    std::array<std::array<Rational, 2>, 2> inv_{};
};

// A point of S1 ∪ S2. A zero weight means the point is absent from that set.
struct SingularPoint {
    std::string label;
    int alpha1 = 0;
    int alpha2 = 0;

    bool in_s1() const noexcept { return alpha1 > 0; }
    bool in_s2() const noexcept { return alpha2 > 0; }
    // Both weights in {0, 1, 2}: the range where the degree formulas are proven.
    bool within_proven_range() const noexcept { return alpha1 <= 2 && alpha2 <= 2; }

    friend bool operator==(const SingularPoint &, const SingularPoint &) = default;
};

inline constexpr int min_euler_characteristic = -64;
inline constexpr int max_euler_characteristic = 2;
inline constexpr int max_truncation = 4096;

// Immutable problem instance. chi and cartan may be left unset when a
// command does not need them; accessors throw ConfigError in that case.
class ProblemConfig
{
public:
    ProblemConfig(std::optional<int> chi, std::vector<SingularPoint> points, std::optional<CartanMatrix> cartan,
                  int truncation = default_truncation);

    bool has_chi() const noexcept { return chi_.has_value(); }
    int chi() const;
    bool has_cartan() const noexcept { return cartan_.has_value(); }
    const CartanMatrix &cartan() const;
    int truncation() const noexcept { return truncation_; }
    const std::vector<SingularPoint> &points() const noexcept { return points_; }

    std::vector<SingularPoint> s1() const;
    std::vector<SingularPoint> s2() const;
    // |S1 ∪ S2|; equals points().size() since empty points are rejected.
    int union_size() const noexcept { return static_cast<int>(points_.size()); }

    const SingularPoint *find(std::string_view label) const noexcept;

    ProblemConfig with_truncation(int n) const;
    // Exchanges alpha1 and alpha2 on every point.
    ProblemConfig with_swapped_weights() const;
    ProblemConfig with_cartan(CartanKind kind) const;

private:
    std::optional<int> chi_;
    std::vector<SingularPoint> points_;
    std::optional<CartanMatrix> cartan_;
    int truncation_;
};

// rho_i / 4pi, both strictly positive.
struct RhoPair {
    Rational rho1_over_4pi;
    Rational rho2_over_4pi;

    friend bool operator==(const RhoPair &, const RhoPair &) = default;
};

struct Critical {
    friend bool operator==(Critical, Critical) noexcept { return true; }
};

// Either the interval index j with j < rho/4pi < j+1, or Critical when
// rho/4pi is an integer.
using IntervalIndex = std::variant<int, Critical>;

// Sorted multiples a_k with Sigma = {8 pi a_k} up to 8 pi * bound, built
// from {N + sum_{p in A} (1 + alpha_p) : N >= 0, A ⊆ S_component} \ {0}.
std::vector<int> critical_set(const ProblemConfig &config, int component, int bound);
// Same, from a bare weight list.
std::vector<int> critical_set(std::span<const int> weights, int bound);

// rho_i / 4pi = 1 + sum_j K^{ij} N_j.
RhoPair rho_from_ramification(const CartanMatrix &cartan, int n1, int n2);

IntervalIndex rho_interval_index(const Rational &rho_over_4pi);

// "p/q", or "p" when the denominator is one.
std::string format_rational(const Rational &r);

} // namespace tdeg

#endif
