#include <tdeg/config.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include <tdeg/errors.hpp>

namespace tdeg
{

std::string_view to_string(CartanKind kind) noexcept
{
    switch (kind) {
        case CartanKind::A2:
            return "A2";
        case CartanKind::B2:
            return "B2";
        case CartanKind::G2:
            return "G2";
    }
    return "?";
}

CartanKind parse_cartan_kind(std::string_view name)
{
    if (name == "A2") {
        return CartanKind::A2;
    }
    if (name == "B2") {
        return CartanKind::B2;
    }
    if (name == "G2") {
        return CartanKind::G2;
    }
    throw ConfigError("unknown Cartan type '" + std::string(name) + "' (expected A2, B2 or G2)");
}

CartanMatrix::CartanMatrix(CartanKind kind) : kind_(kind)
{
    int k21 = 0;
    switch (kind) {
        case CartanKind::A2:
            k21 = -1;
            break;
        case CartanKind::B2:
            k21 = -2;
            break;
        case CartanKind::G2:
            k21 = -3;
            break;
    }
    k_ = {{{2, -1}, {k21, 2}}};

    // 2x2 inverse: adj(K) / det(K).
    const Rational det(determinant());
    inv_[0][0] = Rational(k_[1][1]) / det;
    inv_[0][1] = Rational(-k_[0][1]) / det;
    inv_[1][0] = Rational(-k_[1][0]) / det;
    inv_[1][1] = Rational(k_[0][0]) / det;
}

int CartanMatrix::entry(int i, int j) const
{
    if (i < 1 || i > 2 || j < 1 || j > 2) {
        throw DomainError("Cartan matrix index out of range");
    }
    return k_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

const Rational &CartanMatrix::inverse(int i, int j) const
{
    if (i < 1 || i > 2 || j < 1 || j > 2) {
        throw DomainError("Cartan matrix index out of range");
    }
    return inv_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

ProblemConfig::ProblemConfig(std::optional<int> chi, std::vector<SingularPoint> points,
                             std::optional<CartanMatrix> cartan, int truncation)
    : chi_(chi), points_(std::move(points)), cartan_(cartan), truncation_(truncation)
{
    if (chi_ && (*chi_ < min_euler_characteristic || *chi_ > max_euler_characteristic)) {
        throw ConfigError("chi = " + std::to_string(*chi_) + " outside the accepted range ["
                          + std::to_string(min_euler_characteristic) + ", "
                          + std::to_string(max_euler_characteristic) + "]");
    }
    if (truncation_ < 0 || truncation_ > max_truncation) {
        throw ConfigError("truncation = " + std::to_string(truncation_) + " outside [0, "
                          + std::to_string(max_truncation) + "]");
    }
    std::unordered_set<std::string> seen;
    for (const auto &p : points_) {
        if (p.alpha1 < 0 || p.alpha2 < 0) {
            throw ConfigError("point '" + p.label + "': weights must be nonnegative");
        }
        if (p.alpha1 + p.alpha2 < 1) {
            throw ConfigError("point '" + p.label + "': alpha1 and alpha2 are both zero");
        }
        if (!seen.insert(p.label).second) {
            throw ConfigError("duplicate point label '" + p.label + "'");
        }
    }
}

int ProblemConfig::chi() const
{
    if (!chi_) {
        throw ConfigError("missing Euler characteristic 'chi'");
    }
    return *chi_;
}

const CartanMatrix &ProblemConfig::cartan() const
{
    if (!cartan_) {
        throw ConfigError("missing Cartan matrix 'cartan'");
    }
    return *cartan_;
}

std::vector<SingularPoint> ProblemConfig::s1() const
{
    std::vector<SingularPoint> out;
    std::copy_if(points_.begin(), points_.end(), std::back_inserter(out), [](const auto &p) { return p.in_s1(); });
    return out;
}

std::vector<SingularPoint> ProblemConfig::s2() const
{
    std::vector<SingularPoint> out;
    std::copy_if(points_.begin(), points_.end(), std::back_inserter(out), [](const auto &p) { return p.in_s2(); });
    return out;
}

const SingularPoint *ProblemConfig::find(std::string_view label) const noexcept
{
    auto it = std::find_if(points_.begin(), points_.end(), [&](const auto &p) { return p.label == label; });
    return it == points_.end() ? nullptr : &*it;
}

ProblemConfig ProblemConfig::with_truncation(int n) const
{
    return ProblemConfig(chi_, points_, cartan_, n);
}

ProblemConfig ProblemConfig::with_swapped_weights() const
{
    auto swapped = points_;
    for (auto &p : swapped) {
        std::swap(p.alpha1, p.alpha2);
    }
    return ProblemConfig(chi_, std::move(swapped), cartan_, truncation_);
}

ProblemConfig ProblemConfig::with_cartan(CartanKind kind) const
{
    return ProblemConfig(chi_, points_, CartanMatrix(kind), truncation_);
}

std::vector<int> critical_set(std::span<const int> weights, int bound)
{
    if (bound < 1) {
        throw DomainError("critical_set: bound must be at least 1");
    }
    for (auto a : weights) {
        if (a <= 0) {
            throw DomainError("critical_set: weights must be positive, got " + std::to_string(a));
        }
    }
    // Subset sums of (1 + alpha_p) not exceeding bound, one point at a time.
    std::vector<bool> reachable(static_cast<std::size_t>(bound) + 1u, false);
    reachable[0] = true;
    for (auto a : weights) {
        const int step = 1 + a;
        for (int s = bound; s >= step; --s) {
            if (reachable[static_cast<std::size_t>(s - step)]) {
                reachable[static_cast<std::size_t>(s)] = true;
            }
        }
    }
    std::set<int> values;
    for (int s = 0; s <= bound; ++s) {
        if (!reachable[static_cast<std::size_t>(s)]) {
            continue;
        }
        for (int n = 0; s + n <= bound; ++n) {
            if (s + n > 0) {
                values.insert(s + n);
            }
        }
    }
    return {values.begin(), values.end()};
}

std::vector<int> critical_set(const ProblemConfig &config, int component, int bound)
{
    if (component != 1 && component != 2) {
        throw DomainError("critical_set: component must be 1 or 2");
    }
    std::vector<int> weights;
    for (const auto &p : config.points()) {
        const int a = component == 1 ? p.alpha1 : p.alpha2;
        if (a > 0) {
            weights.push_back(a);
        }
    }
    return critical_set(weights, bound);
}

RhoPair rho_from_ramification(const CartanMatrix &cartan, int n1, int n2)
{
    if (n1 < 0 || n2 < 0) {
        throw DomainError("rho_from_ramification: ramification totals must be nonnegative");
    }
    RhoPair r;
    r.rho1_over_4pi = 1 + cartan.inverse(1, 1) * n1 + cartan.inverse(1, 2) * n2;
    r.rho2_over_4pi = 1 + cartan.inverse(2, 1) * n1 + cartan.inverse(2, 2) * n2;
    return r;
}

IntervalIndex rho_interval_index(const Rational &rho_over_4pi)
{
    if (rho_over_4pi <= 0) {
        throw DomainError("rho must be positive, got " + format_rational(rho_over_4pi));
    }
    const auto num = boost::multiprecision::numerator(rho_over_4pi);
    const auto den = boost::multiprecision::denominator(rho_over_4pi);
    if (den == 1) {
        return Critical{};
    }
    // Positive, so truncating division is the floor.
    return static_cast<int>(BigInt(num / den));
}

std::string format_rational(const Rational &r)
{
    std::ostringstream os;
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    os << num;
    if (den != 1) {
        os << '/' << den;
    }
    return os.str();
}

} // namespace tdeg
