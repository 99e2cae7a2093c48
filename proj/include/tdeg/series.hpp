#ifndef TDEG_SERIES_HPP
#define TDEG_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tdeg
{

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int default_truncation = 32;

// Integer power series in x, truncated at a fixed degree N. Holds exactly
// N+1 coefficients, index k being the coefficient of x^k. Immutable: every
// arithmetic operation returns a new value.
class TruncatedSeries
{
public:
    // The zero series at degree n.
    explicit TruncatedSeries(int n = default_truncation);
    // Coefficients beyond n are dropped, missing ones are zero.
    TruncatedSeries(std::vector<BigInt> coeffs, int n);
    TruncatedSeries(std::initializer_list<long long> coeffs, int n);

    static TruncatedSeries zero(int n) { return TruncatedSeries(n); }
    static TruncatedSeries one(int n);
    static TruncatedSeries constant(const BigInt &c, int n);

    int truncation_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
    const BigInt &operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

    bool is_zero() const;
    // Index of the highest nonzero coefficient, nullopt for the zero series.
    std::optional<int> top_nonzero() const;

    // Same coefficients re-truncated at n (zero-padded when n grows).
    TruncatedSeries truncate(int n) const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    std::vector<BigInt> coeffs_;
};

TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries sub(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries scale(const TruncatedSeries &a, const BigInt &c);
TruncatedSeries negate(const TruncatedSeries &a);

inline TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) { return mul(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries &a) { return negate(a); }

// (1-x)^exponent truncated at n. Negative exponents use
// [x^k](1-x)^{-m} = C(k+m-1, m-1).
TruncatedSeries one_minus_x_pow(int exponent, int n);

// 1 + x + ... + x^top_degree truncated at n.
TruncatedSeries interval_poly(int top_degree, int n);

// Product over a list of factors, the empty product being one.
TruncatedSeries product(std::span<const TruncatedSeries> factors, int n);

// Human-readable polynomial form, e.g. "2 + x - x^2 - 2x^3".
std::string to_string(const TruncatedSeries &s);
std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s);

} // namespace tdeg

#endif
