// Exact truncated q-series over arbitrary-precision integers.
//
// Every generating function used by the library lives here: P(q), U(q),
// U*(q), the largest-part moment series MP_k and MU_k, the divisor-type
// series S_{k,n}, q-Pochhammer products, and complete Bell polynomials.

#ifndef UNIMODAL_SERIES_HPP
#define UNIMODAL_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace unimodal {

using BigInt = mpz_class;

/// Marks an infinite product, e.g. (q;q)_inf.
inline constexpr std::size_t infinite_order = std::numeric_limits<std::size_t>::max();

/// Power series sum_{i<=order} c_i q^i with exact integer coefficients.
///
/// Arithmetic between series of different orders yields the smaller
/// order. Coefficients beyond the order are dropped, never rounded.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order);
    /// Takes ownership of coefficients 0..coeffs.size()-1; must be nonempty.
    explicit TruncatedSeries(std::vector<BigInt> coeffs);

    static TruncatedSeries one(std::size_t order);
    static TruncatedSeries monomial(std::size_t exponent, const BigInt &coeff, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

    const BigInt &operator[](std::size_t i) const { return coeffs_.at(i); }
    BigInt &operator[](std::size_t i) { return coeffs_.at(i); }

    TruncatedSeries truncated(std::size_t order) const;

    TruncatedSeries &operator+=(const TruncatedSeries &rhs);
    TruncatedSeries &operator-=(const TruncatedSeries &rhs);
    TruncatedSeries &operator*=(const TruncatedSeries &rhs);
    TruncatedSeries &operator*=(const BigInt &scalar);

    /// In-place multiplication by (1 + sign*q^k)^power, sign = +-1.
    TruncatedSeries &mul_binomial(std::size_t k, int sign, unsigned power = 1);
    /// In-place division by (1 - q^k)^power, k >= 1.
    TruncatedSeries &div_one_minus(std::size_t k, unsigned power = 1);

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    void shrink_to(std::size_t order);

    std::vector<BigInt> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b);
TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries operator*(TruncatedSeries a, const BigInt &s);

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s);

/// Exact Cauchy product truncated to min(a.order(), b.order()).
TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b);

/// Multiplicative inverse modulo q^{order+1}. Throws std::domain_error
/// unless the constant coefficient is +1 or -1.
TruncatedSeries invert_unit(const TruncatedSeries &a);

/// (q;q)_m = prod_{j=1}^{m} (1 - q^j); m may be infinite_order.
TruncatedSeries pochhammer(std::size_t m, std::size_t order);

/// (-q;q)_m = prod_{j=1}^{m} (1 + q^j).
TruncatedSeries pochhammer_neg(std::size_t m, std::size_t order);

/// 1/(q^n;q)_inf = exp(S_{-1,n}), n >= 1.
TruncatedSeries inverse_tail_pochhammer(std::size_t n, std::size_t order);

/// P(q) = 1/(q;q)_inf, coefficients p(0..order).
TruncatedSeries partition_series(std::size_t order);

/// U(q) = 1 + sum_{m>=1} q^m/(q)_m^2, coefficients u(0..order).
TruncatedSeries unimodal_series(std::size_t order);

/// U*(q) = sum_{n>=0} (-q)_{n-1}^2 q^n with the n=0 term equal to 1.
TruncatedSeries strongly_unimodal_series(std::size_t order);

/// S_{k,n}(q) = sum_{m>=1} m^k q^{nm}/(1-q^m), k >= 0, n >= 1.
TruncatedSeries s_series(int k, std::size_t n, std::size_t order);

/// MU_k(q) = sum_{m>=0} m^k q^m/(q)_m^2, with 0^0 = 1.
TruncatedSeries mu_series_direct(unsigned k, std::size_t order);

/// MU_k(q) via the Bell-polynomial expansion
/// (q)_inf^{-2} sum_{n>=0} (-1)^n q^{n(n+1)/2} B_k(S_{0,n+1},...,S_{k-1,n+1}).
TruncatedSeries mu_series_bell(unsigned k, std::size_t order);

/// MP_k(q) = sum_{m>=0} m^k q^m/(q)_m, with 0^0 = 1.
TruncatedSeries mp_series_direct(unsigned k, std::size_t order);

/// MP_k(q) from MP_0 = P(q) and
/// MP_k = sum_{j<k} C(k-1,j) MP_j S_{k-1-j,1}.
TruncatedSeries mp_series_recursive(unsigned k, std::size_t order);

namespace detail {

inline double scale_by(double x, const BigInt &c) { return x * c.get_d(); }
inline BigInt scale_by(const BigInt &x, const BigInt &c) { return x * c; }
inline TruncatedSeries scale_by(const TruncatedSeries &x, const BigInt &c) { return x * c; }

} // namespace detail

/// Complete Bell polynomials B_0..B_k of a_1..a_k, via
/// B_k = sum_{j=0}^{k-1} C(k-1,j) B_{k-1-j} a_{j+1}.
/// `unit` is the multiplicative identity of T (carries the series order).
template <typename T>
std::vector<T> bell_complete_all(std::span<const T> a, const T &unit)
{
    const std::size_t k = a.size();
    std::vector<T> bell;
    bell.reserve(k + 1);
    bell.push_back(unit);
    for (std::size_t i = 1; i <= k; ++i) {
        BigInt binom = 1; // C(i-1, j)
        T acc = bell[i - 1] * a[0];
        for (std::size_t j = 1; j < i; ++j) {
            binom = binom * static_cast<unsigned long>(i - j) / static_cast<unsigned long>(j);
            acc += detail::scale_by(bell[i - 1 - j] * a[j], binom);
        }
        bell.push_back(std::move(acc));
    }
    return bell;
}

/// B_k(a_1..a_k) for a plain scalar ring.
template <typename T>
T bell_complete(std::span<const T> a)
{
    return bell_complete_all<T>(a, T(1)).back();
}

/// B_k(a_1..a_k) over truncated series of the given order.
TruncatedSeries bell_complete(std::span<const TruncatedSeries> a, std::size_t order);

/// Writes `exponent,coefficient` rows.
void write_series_csv(std::ostream &os, const TruncatedSeries &s);

} // namespace unimodal

#endif // UNIMODAL_SERIES_HPP
