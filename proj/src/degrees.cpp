#include <tdeg/degrees.hpp>

#include <tdeg/errors.hpp>

namespace tdeg
{

std::string_view to_string(IntervalUnit unit) noexcept
{
    return unit == IntervalUnit::FourPi ? "4pi" : "8pi";
}

std::string interval_label(IntervalUnit unit, int j)
{
    const int step = unit == IntervalUnit::FourPi ? 4 : 8;
    auto bound = [step](int k) { return k == 0 ? std::string("0") : std::to_string(step * k) + "pi"; };
    return "(" + bound(j) + ", " + bound(j + 1) + ")";
}

const BigInt &DegreeTable::degree_at(int j) const
{
    if (j < 0 || j > series.truncation_degree()) {
        throw DomainError("degree index " + std::to_string(j) + " outside [0, "
                          + std::to_string(series.truncation_degree()) + "]");
    }
    return series[j];
}

namespace
{

std::vector<std::string> hypothesis_warnings(const ProblemConfig &config)
{
    std::vector<std::string> out;
    for (const auto &p : config.points()) {
        if (!p.within_proven_range()) {
            out.push_back("point '" + p.label + "' has weights (" + std::to_string(p.alpha1) + ", "
                          + std::to_string(p.alpha2) + "): outside proven hypothesis alpha in {1,2}");
        }
    }
    return out;
}

int weight(const SingularPoint &p, int component)
{
    return component == 1 ? p.alpha1 : p.alpha2;
}

// prod_{q in S_component, q != skip} (1 + ... + x^{alpha_q}).
TruncatedSeries weight_product(const ProblemConfig &config, int component, const SingularPoint *skip = nullptr)
{
    const int n = config.truncation();
    auto acc = TruncatedSeries::one(n);
    for (const auto &q : config.points()) {
        if (&q == skip || weight(q, component) == 0) {
            continue;
        }
        acc = acc * interval_poly(weight(q, component), n);
    }
    return acc;
}

// The bracket of the shadow generating function for the given component:
//   (chi - |S1 ∪ S2|) (1+...+x^{-k}) prod_{S_c} P_q
//     + sum_{p in S_c \ S_other} (1+...+x^{alpha_p - k}) prod_{S_c \ {p}} P_q
// with k the off-diagonal Cartan entry coupling into component c.
TruncatedSeries shadow_bracket(const ProblemConfig &config, int component, int coupling)
{
    const int n = config.truncation();
    const int other = component == 1 ? 2 : 1;
    const auto full = weight_product(config, component);

    auto out = scale(interval_poly(-coupling, n) * full, BigInt(config.chi() - config.union_size()));
    for (const auto &p : config.points()) {
        if (weight(p, component) == 0 || weight(p, other) != 0) {
            continue;
        }
        out = out + interval_poly(weight(p, component) - coupling, n) * weight_product(config, component, &p);
    }
    return out;
}

} // namespace

DegreeTable mean_field_gf(int chi, std::span<const int> weights, int n)
{
    for (auto a : weights) {
        if (a <= 0) {
            throw DomainError("mean_field_gf: weights must be positive, got " + std::to_string(a));
        }
    }
    auto g = one_minus_x_pow(chi - static_cast<int>(weights.size()) - 1, n);
    for (auto a : weights) {
        // 1 - x^{1+a}
        std::vector<BigInt> c(static_cast<std::size_t>(n) + 1u, BigInt(0));
        c[0] = 1;
        if (1 + a <= n) {
            c[static_cast<std::size_t>(1 + a)] = -1;
        }
        g = g * TruncatedSeries(std::move(c), n);
    }
    return {std::move(g), IntervalUnit::EightPi, {}};
}

DegreeTable shadow_gf(const ProblemConfig &config)
{
    const auto &cartan = config.cartan();
    const int n = config.truncation();
    auto g = one_minus_x_pow(config.chi() - 1, n) * shadow_bracket(config, 2, cartan.k21());
    return {std::move(g), IntervalUnit::FourPi, hypothesis_warnings(config)};
}

DegreeTable toda_gf_rho1_first_interval(const ProblemConfig &config)
{
    const int n = config.truncation();
    auto base = one_minus_x_pow(config.chi() - 1, n) * weight_product(config, 2);
    auto shadow = shadow_gf(config);
    return {base - shadow.series, IntervalUnit::FourPi, std::move(shadow.warnings)};
}

DegreeTable toda_gf_rho2_first_interval(const ProblemConfig &config)
{
    const auto &cartan = config.cartan();
    const int n = config.truncation();
    auto bracket = weight_product(config, 1) - shadow_bracket(config, 1, cartan.k12());
    return {one_minus_x_pow(config.chi() - 1, n) * bracket, IntervalUnit::FourPi, hypothesis_warnings(config)};
}

DegreeTable toda_gf_no_singularity(int chi, const CartanMatrix &cartan, int n)
{
    auto inner = TruncatedSeries::one(n) - scale(interval_poly(-cartan.k21(), n), BigInt(chi));
    return {one_minus_x_pow(chi - 1, n) * inner, IntervalUnit::FourPi, {}};
}

bool GapReport::ok() const
{
    return !first_failure().has_value();
}

std::optional<int> GapReport::first_failure() const
{
    for (std::size_t j = 0; j < residuals.size(); ++j) {
        if (residuals[j] != 0) {
            return static_cast<int>(j);
        }
    }
    return std::nullopt;
}

GapReport gap_check(const ProblemConfig &config)
{
    std::vector<int> s2_weights;
    for (const auto &p : config.s2()) {
        s2_weights.push_back(p.alpha2);
    }
    const auto d1 = toda_gf_rho1_first_interval(config);
    const auto d0 = mean_field_gf(config.chi(), s2_weights, config.truncation());
    const auto ds = shadow_gf(config);

    // d_{1,j} - d_{0,j} = -d_j^S
    const auto residual = d1.series - d0.series + ds.series;
    return {std::vector<BigInt>(residual.coeffs().begin(), residual.coeffs().end()), ds.warnings};
}

} // namespace tdeg
