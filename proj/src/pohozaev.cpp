#include <tdeg/pohozaev.hpp>

#include <algorithm>
#include <set>

#include <tdeg/errors.hpp>

namespace tdeg
{

namespace
{

void check_coupling(Coupling k)
{
    if (k.k12 >= 0 || k.k21 >= 0 || k.k12 * k.k21 >= 4) {
        throw DomainError("coupling (K12, K21) = (" + std::to_string(k.k12) + ", " + std::to_string(k.k21)
                          + ") is not negative with K12 K21 < 4");
    }
}

void check_weights(SingularWeights w)
{
    if (w.gamma1 < 0 || w.gamma2 < 0) {
        throw DomainError("singular weights must be nonnegative");
    }
}

// Residual written as A s2^2 + B s2 + C with s1 fixed.
struct QuadraticInSigma2 {
    BigInt a, b, c;

    BigInt discriminant() const { return b * b - 4 * a * c; }
};

QuadraticInSigma2 slice(Coupling k, SingularWeights w, const BigInt &s1)
{
    return {BigInt(k.k12), BigInt(k.k12) * k.k21 * s1 - 2 * BigInt(k.k12) * (1 + w.gamma2),
            BigInt(k.k21) * s1 * s1 - 2 * BigInt(k.k21) * (1 + w.gamma1) * s1};
}

bool is_nonnegative_even(const BigInt &v)
{
    return v >= 0 && (v % 2) == 0;
}

} // namespace

BigInt pohozaev_residual(Coupling k, SingularWeights w, LocalMassPair m)
{
    const BigInt s1 = m.sigma1;
    const BigInt s2 = m.sigma2;
    return k.k21 * s1 * s1 + BigInt(k.k12) * k.k21 * s1 * s2 + k.k12 * s2 * s2
           - 2 * BigInt(k.k21) * (1 + w.gamma1) * s1 - 2 * BigInt(k.k12) * (1 + w.gamma2) * s2;
}

int sigma1_search_bound(Coupling k, SingularWeights w)
{
    check_coupling(k);
    check_weights(w);
    // The discriminant in s1 has leading coefficient K12 K21 (K12 K21 - 4) < 0
    // and value 4 K12^2 (1+g2)^2 > 0 at s1 = 0, so it changes sign exactly
    // once on [0, inf). The first negative value ends the search.
    int s1 = 0;
    while (slice(k, w, BigInt(s1 + 1)).discriminant() >= 0) {
        ++s1;
    }
    return s1;
}

std::vector<LocalMassPair> enumerate_local_masses(Coupling k, SingularWeights w)
{
    const int cap = sigma1_search_bound(k, w);
    std::vector<LocalMassPair> out;
    for (int s1 = 0; s1 <= cap; s1 += 2) {
        const auto q = slice(k, w, BigInt(s1));
        const BigInt disc = q.discriminant();
        const BigInt root = boost::multiprecision::sqrt(disc);
        if (root * root != disc) {
            continue;
        }
        std::set<BigInt> candidates;
        for (const auto &num : {BigInt(-q.b + root), BigInt(-q.b - root)}) {
            const BigInt den = 2 * q.a;
            if (num % den == 0) {
                candidates.insert(num / den);
            }
        }
        for (const auto &s2 : candidates) {
            if (!is_nonnegative_even(s2)) {
                continue;
            }
            LocalMassPair m{s1, static_cast<int>(s2)};
            if (m.is_blow_up() && pohozaev_residual(k, w, m) == 0) {
                out.push_back(m);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string_view to_string(Concentration c) noexcept
{
    switch (c) {
        case Concentration::First:
            return "first";
        case Concentration::Second:
            return "second";
        case Concentration::Both:
            return "both";
        case Concentration::Neither:
            return "neither";
    }
    return "?";
}

Concentration concentration_filter(Coupling k, SingularWeights w, LocalMassPair m)
{
    const bool first = 2 * m.sigma1 - 2 * w.gamma1 + k.k12 * m.sigma2 >= 2;
    const bool second = 2 * m.sigma2 - 2 * w.gamma2 + k.k21 * m.sigma1 >= 2;
    if (first && second) {
        return Concentration::Both;
    }
    if (first) {
        return Concentration::First;
    }
    return second ? Concentration::Second : Concentration::Neither;
}

std::vector<int> mass_dichotomy(int beta_sum, int m0)
{
    if (beta_sum < 0) {
        throw DomainError("mass_dichotomy: beta_sum must be nonnegative");
    }
    if (m0 < 0 || m0 % 2 != 0) {
        throw DomainError("mass_dichotomy: m0 must be a nonnegative even integer");
    }
    std::set<int> out;
    for (int s : {m0, 2 + 2 * beta_sum - m0}) {
        if (s > 0) {
            out.insert(s);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<int> entire_mass_candidates(int alpha_total, int bound)
{
    if (alpha_total < 0) {
        throw DomainError("entire_mass_candidates: alpha_total must be nonnegative");
    }
    if (bound < 1) {
        throw DomainError("entire_mass_candidates: bound must be at least 1");
    }
    std::vector<int> out;
    for (int m = 2; m <= bound; m += 2) {
        if (m > alpha_total + 1) {
            out.push_back(m);
        }
    }
    return out;
}

int blowup_location_sum(int cluster_size, int alpha, int k21)
{
    if (cluster_size != 1 && cluster_size != 2) {
        throw DomainError("blowup_location_sum: cluster size must be 1 or 2, got " + std::to_string(cluster_size));
    }
    if (alpha < 0) {
        throw DomainError("blowup_location_sum: alpha must be nonnegative");
    }
    if (k21 < -3 || k21 > -1) {
        throw DomainError("blowup_location_sum: K21 must be -1, -2 or -3");
    }
    const int n = cluster_size;
    return -n * (n - 1) + (alpha - k21) * n;
}

ScenarioReport classify_blowup_scenarios(int k21, int alpha_q0)
{
    if (k21 < -3 || k21 > -1) {
        throw DomainError("classify_blowup_scenarios: K21 must be -1, -2 or -3");
    }
    if (alpha_q0 != 1 && alpha_q0 != 2) {
        throw DomainError("classify_blowup_scenarios: alpha must be 1 or 2");
    }
    constexpr int max_alpha = 2;

    ScenarioReport r;
    r.k21 = k21;
    r.alpha = alpha_q0;
    // sigma(Q0) in 2N and alpha - K21 + 1 > sigma(Q0).
    for (int s = 2; s < max_alpha - k21 + 1; s += 2) {
        r.admissible_sigma.push_back(s);
    }
    for (int s = 2; s < alpha_q0 - k21 + 1; s += 2) {
        r.sigma_within_alpha_bound.push_back(s);
    }
    // Away from 0 and e each bubble carries mass 2.
    for (int s : r.admissible_sigma) {
        r.admissible_cluster_sizes.push_back(s / 2);
    }
    for (int s : r.admissible_sigma) {
        if (s >= 2 - 2 * k21) {
            r.blow_up_at_e_allowed = true;
        }
        const bool within = std::find(r.sigma_within_alpha_bound.begin(), r.sigma_within_alpha_bound.end(), s)
                            != r.sigma_within_alpha_bound.end();
        if (s >= 2 + 2 * alpha_q0 && within) {
            r.blow_up_at_origin_allowed = true;
        }
    }
    return r;
}

} // namespace tdeg
