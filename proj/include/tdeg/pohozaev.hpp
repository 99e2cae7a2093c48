#ifndef TDEG_POHOZAEV_HPP
#define TDEG_POHOZAEV_HPP

#include <compare>
#include <string_view>
#include <vector>

#include <tdeg/config.hpp>

namespace tdeg
{

// Local masses (sigma1, sigma2) at a point; both nonnegative and even.
struct LocalMassPair {
    int sigma1 = 0;
    int sigma2 = 0;

    bool is_blow_up() const noexcept { return sigma1 != 0 || sigma2 != 0; }

    friend auto operator<=>(const LocalMassPair &, const LocalMassPair &) = default;
};

// gamma_i(p) = alpha_{p,i} if p in S_i, else 0.
struct SingularWeights {
    int gamma1 = 0;
    int gamma2 = 0;

    bool is_regular() const noexcept { return gamma1 == 0 && gamma2 == 0; }
};

// Off-diagonal Cartan entries. Kept separate from CartanMatrix so that the
// transposed coupling (K12 <-> K21), which is not one of the three kinds
// for B2 and G2, can be expressed.
struct Coupling {
    int k12 = -1;
    int k21 = -1;

    Coupling() = default;
    Coupling(int k12_, int k21_) : k12(k12_), k21(k21_) {}
    Coupling(const CartanMatrix &k) : k12(k.k12()), k21(k.k21()) {} // NOLINT: implicit by intent

    Coupling transposed() const noexcept { return {k21, k12}; }
};

// K21 s1^2 + K12 K21 s1 s2 + K12 s2^2 - 2 K21 (1+g1) s1 - 2 K12 (1+g2) s2.
// Zero exactly when the Pohozaev identity holds.
BigInt pohozaev_residual(Coupling k, SingularWeights w, LocalMassPair m);

// Largest sigma1 >= 0 for which the residual, as a quadratic in sigma2, has
// a nonnegative discriminant. Every real root has sigma1 in [0, bound].
// Requires K12, K21 < 0 and K12 K21 < 4 (positive-definite form).
int sigma1_search_bound(Coupling k, SingularWeights w);

// All even pairs (sigma1, sigma2) != (0, 0) with zero residual, sorted
// lexicographically. For gamma != 0 this is a set of necessary conditions.
std::vector<LocalMassPair> enumerate_local_masses(Coupling k, SingularWeights w);

enum class Concentration { First, Second, Both, Neither };

std::string_view to_string(Concentration c) noexcept;

// Which of 2 s1 - 2 g1 + K12 s2 >= 2 and 2 s2 - 2 g2 + K21 s1 >= 2 hold.
Concentration concentration_filter(Coupling k, SingularWeights w, LocalMassPair m);

// Candidates {m0, 2 + 2 beta_sum - m0} for the outer local mass, keeping
// only positive values. Sorted, without duplicates.
std::vector<int> mass_dichotomy(int beta_sum, int m0);

// Even m <= bound with m > alpha_total + 1.
std::vector<int> entire_mass_candidates(int alpha_total, int bound);

// K21 * sum_{q in B_v} e / (q - e) = -n (n-1) + (alpha - K21) n for a
// blow-up cluster of size n in {1, 2}.
int blowup_location_sum(int cluster_size, int alpha, int k21);

struct ScenarioReport {
    int k21 = 0;
    int alpha = 0;
    // Even sigma(Q0) below the case-level bound 3 - K21 (the bound at
    // alpha = 2, the top of the proven range).
    std::vector<int> admissible_sigma;
    // Even sigma(Q0) with sigma < alpha - K21 + 1 for this alpha.
    std::vector<int> sigma_within_alpha_bound;
    std::vector<int> admissible_cluster_sizes;
    bool blow_up_at_origin_allowed = false;
    bool blow_up_at_e_allowed = false;
};

// Restricted to K21 in {-1, -2, -3} and alpha in {1, 2}.
ScenarioReport classify_blowup_scenarios(int k21, int alpha_q0);

} // namespace tdeg

#endif
