#include <tdeg/series.hpp>

#include <sstream>
#include <string>
#include <utility>

#include <tdeg/errors.hpp>

namespace tdeg
{

namespace
{

void check_degree(int n)
{
    if (n < 0) {
        throw DomainError("truncation degree must be nonnegative, got " + std::to_string(n));
    }
}

void check_same_degree(const TruncatedSeries &a, const TruncatedSeries &b, const char *op)
{
    if (a.truncation_degree() != b.truncation_degree()) {
        throw ConfigError(std::string(op) + ": mismatched truncation degrees "
                          + std::to_string(a.truncation_degree()) + " and "
                          + std::to_string(b.truncation_degree()));
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(int n)
{
    check_degree(n);
    coeffs_.assign(static_cast<std::size_t>(n) + 1u, BigInt(0));
}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs, int n) : coeffs_(std::move(coeffs))
{
    check_degree(n);
    coeffs_.resize(static_cast<std::size_t>(n) + 1u, BigInt(0));
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long long> coeffs, int n)
{
    check_degree(n);
    coeffs_.reserve(static_cast<std::size_t>(n) + 1u);
    for (auto c : coeffs) {
        if (coeffs_.size() == static_cast<std::size_t>(n) + 1u) {
            break;
        }
        coeffs_.emplace_back(c);
    }
    coeffs_.resize(static_cast<std::size_t>(n) + 1u, BigInt(0));
}

TruncatedSeries TruncatedSeries::one(int n)
{
    return constant(BigInt(1), n);
}

TruncatedSeries TruncatedSeries::constant(const BigInt &c, int n)
{
    TruncatedSeries s(n);
    s.coeffs_[0] = c;
    return s;
}

bool TruncatedSeries::is_zero() const
{
    for (const auto &c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

std::optional<int> TruncatedSeries::top_nonzero() const
{
    for (auto k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
        if (coeffs_[static_cast<std::size_t>(k)] != 0) {
            return k;
        }
    }
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncate(int n) const
{
    return TruncatedSeries(coeffs_, n);
}

TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b)
{
    check_same_degree(a, b, "add");
    std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] += b.coeffs()[k];
    }
    return TruncatedSeries(std::move(out), a.truncation_degree());
}

TruncatedSeries sub(const TruncatedSeries &a, const TruncatedSeries &b)
{
    check_same_degree(a, b, "sub");
    std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] -= b.coeffs()[k];
    }
    return TruncatedSeries(std::move(out), a.truncation_degree());
}

TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
    check_same_degree(a, b, "mul");
    const auto n = static_cast<std::size_t>(a.truncation_degree());
    std::vector<BigInt> out(n + 1u, BigInt(0));
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    for (std::size_t i = 0; i <= n; ++i) {
        if (ac[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            out[i + j] += ac[i] * bc[j];
        }
    }
    return TruncatedSeries(std::move(out), a.truncation_degree());
}

TruncatedSeries scale(const TruncatedSeries &a, const BigInt &c)
{
    std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
    for (auto &x : out) {
        x *= c;
    }
    return TruncatedSeries(std::move(out), a.truncation_degree());
}

TruncatedSeries negate(const TruncatedSeries &a)
{
    return scale(a, BigInt(-1));
}

TruncatedSeries one_minus_x_pow(int exponent, int n)
{
    check_degree(n);
    std::vector<BigInt> out(static_cast<std::size_t>(n) + 1u, BigInt(0));
    if (exponent >= 0) {
        // Signed binomial row: (-1)^k C(m, k), built by the ratio
        // C(m, k) = C(m, k-1) * (m-k+1) / k.
        BigInt c = 1;
        for (int k = 0; k <= n && k <= exponent; ++k) {
            if (k > 0) {
                c = c * (exponent - k + 1) / k;
            }
            out[static_cast<std::size_t>(k)] = (k % 2 == 0) ? c : BigInt(-c);
        }
    } else {
        // C(k+m-1, m-1) = C(k+m-1, k), ratio form in k.
        const int m = -exponent;
        BigInt c = 1;
        for (int k = 0; k <= n; ++k) {
            if (k > 0) {
                c = c * (k + m - 1) / k;
            }
            out[static_cast<std::size_t>(k)] = c;
        }
    }
    return TruncatedSeries(std::move(out), n);
}

TruncatedSeries interval_poly(int top_degree, int n)
{
    if (top_degree < 0) {
        throw DomainError("interval_poly: top degree must be nonnegative, got " + std::to_string(top_degree));
    }
    check_degree(n);
    std::vector<BigInt> out(static_cast<std::size_t>(n) + 1u, BigInt(0));
    for (int k = 0; k <= n && k <= top_degree; ++k) {
        out[static_cast<std::size_t>(k)] = 1;
    }
    return TruncatedSeries(std::move(out), n);
}

TruncatedSeries product(std::span<const TruncatedSeries> factors, int n)
{
    auto acc = TruncatedSeries::one(n);
    for (const auto &f : factors) {
        acc = mul(acc, f);
    }
    return acc;
}

std::string to_string(const TruncatedSeries &s)
{
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= s.truncation_degree(); ++k) {
        const auto &c = s[k];
        if (c == 0) {
            continue;
        }
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != 1) {
            os << mag;
        }
        if (k >= 1) {
            os << 'x';
        }
        if (k >= 2) {
            os << '^' << k;
        }
        first = false;
    }
    if (first) {
        os << '0';
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s)
{
    return os << to_string(s);
}

} // namespace tdeg
