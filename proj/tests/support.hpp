#ifndef TDEG_TESTS_SUPPORT_HPP
#define TDEG_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <tdeg/config.hpp>
#include <tdeg/series.hpp>

#include "oracles.hpp"

namespace testing_support
{

inline oracle::Poly to_poly(const tdeg::TruncatedSeries &s)
{
    oracle::Poly p;
    for (const auto &c : s.coeffs()) {
        p.push_back(static_cast<std::int64_t>(c));
    }
    return p;
}

inline tdeg::TruncatedSeries series(std::initializer_list<long long> c, int n)
{
    return tdeg::TruncatedSeries(c, n);
}

inline std::vector<oracle::Pt> oracle_points(const tdeg::ProblemConfig &c)
{
    std::vector<oracle::Pt> out;
    for (const auto &p : c.points()) {
        out.push_back({p.alpha1, p.alpha2});
    }
    return out;
}

inline tdeg::ProblemConfig make_config(int chi, tdeg::CartanKind kind, std::vector<std::pair<int, int>> weights,
                                       int n = tdeg::default_truncation)
{
    std::vector<tdeg::SingularPoint> pts;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        pts.push_back({"p" + std::to_string(i), weights[i].first, weights[i].second});
    }
    return tdeg::ProblemConfig(chi, std::move(pts), tdeg::CartanMatrix(kind), n);
}

inline constexpr tdeg::CartanKind all_kinds[] = {tdeg::CartanKind::A2, tdeg::CartanKind::B2, tdeg::CartanKind::G2};

// Random configuration: chi in [chi_lo, chi_hi], 0..max_points points,
// each weight in {0, 1, 2} and not both zero.
inline tdeg::ProblemConfig random_config(std::mt19937_64 &rng, int chi_lo, int chi_hi, int max_points,
                                         int n = tdeg::default_truncation)
{
    std::uniform_int_distribution<int> chi_d(chi_lo, chi_hi);
    std::uniform_int_distribution<int> count_d(0, max_points);
    std::uniform_int_distribution<int> w_d(0, 2);
    std::uniform_int_distribution<int> kind_d(0, 2);
    std::vector<std::pair<int, int>> weights;
    const int count = count_d(rng);
    while (static_cast<int>(weights.size()) < count) {
        const int a1 = w_d(rng);
        const int a2 = w_d(rng);
        if (a1 + a2 > 0) {
            weights.emplace_back(a1, a2);
        }
    }
    return make_config(chi_d(rng), all_kinds[kind_d(rng)], std::move(weights), n);
}

inline tdeg::TruncatedSeries random_series(std::mt19937_64 &rng, int n, int mag = 50)
{
    std::uniform_int_distribution<int> d(-mag, mag);
    std::vector<tdeg::BigInt> c;
    for (int k = 0; k <= n; ++k) {
        c.emplace_back(d(rng));
    }
    return tdeg::TruncatedSeries(std::move(c), n);
}

} // namespace testing_support

#endif
