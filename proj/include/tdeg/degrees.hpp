#ifndef TDEG_DEGREES_HPP
#define TDEG_DEGREES_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <tdeg/config.hpp>
#include <tdeg/series.hpp>

namespace tdeg
{

// What the index j of a degree table refers to:
//   FourPi:  rho in (4 j pi, 4 (j+1) pi)
//   EightPi: rho in (8 a_j pi, 8 a_{j+1} pi), a_j the critical multiples
//            (a_j = j for integer weights).
enum class IntervalUnit { FourPi, EightPi };

std::string_view to_string(IntervalUnit unit) noexcept;
// Text form of the j-th interval, e.g. "(4pi, 8pi)".
std::string interval_label(IntervalUnit unit, int j);

// Degrees d_j read off a generating function, j = 0..N.
struct DegreeTable {
    TruncatedSeries series;
    IntervalUnit interval_unit = IntervalUnit::FourPi;
    std::vector<std::string> warnings;

    int truncation_degree() const noexcept { return series.truncation_degree(); }
    const BigInt &degree_at(int j) const;
};

// g^(1)(x) = (1-x)^{chi-|S0|-1} prod_p (1 - x^{1+alpha_p}).
DegreeTable mean_field_gf(int chi, std::span<const int> weights, int n = default_truncation);

// g_s(x), coefficient j is d_j^S for rho2 in (4 j pi, 4 (j+1) pi).
DegreeTable shadow_gf(const ProblemConfig &config);

// g_1^(2)(x, K) = (1-x)^{chi-1} prod_{S2} (1+...+x^{alpha_{p,2}}) - g_s(x);
// coefficient j is d_{1,j} for rho1 in (4pi, 8pi).
DegreeTable toda_gf_rho1_first_interval(const ProblemConfig &config);

// The role-swapped generating function; coefficient j is d_{j,1} for
// rho2 in (4pi, 8pi), rho1 in (4 j pi, 4 (j+1) pi).
DegreeTable toda_gf_rho2_first_interval(const ProblemConfig &config);

// Closed form for S1 ∪ S2 = ∅: (1-x)^{chi-1} (1 - chi (1+...+x^{-K21})).
DegreeTable toda_gf_no_singularity(int chi, const CartanMatrix &cartan, int n = default_truncation);

// Coefficientwise comparison d_{1,j} - d_{0,j} + d_j^S, which must vanish.
struct GapReport {
    std::vector<BigInt> residuals;
    std::vector<std::string> warnings;

    bool ok() const;
    // Smallest j with a nonzero residual.
    std::optional<int> first_failure() const;
};

GapReport gap_check(const ProblemConfig &config);

} // namespace tdeg

#endif
