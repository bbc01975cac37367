#include "unimodal/series.hpp"

#include <algorithm>

namespace unimodal {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("TruncatedSeries: coefficient list must be nonempty");
    }
}

TruncatedSeries TruncatedSeries::one(std::size_t order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t exponent, const BigInt &coeff, std::size_t order)
{
    TruncatedSeries s(order);
    if (exponent <= order) {
        s.coeffs_[exponent] = coeff;
    }
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    TruncatedSeries s = *this;
    s.shrink_to(order);
    return s;
}

void TruncatedSeries::shrink_to(std::size_t order)
{
    if (order < this->order()) {
        coeffs_.resize(order + 1);
    }
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &rhs)
{
    shrink_to(rhs.order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &rhs)
{
    shrink_to(rhs.order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const TruncatedSeries &rhs)
{
    *this = mul(*this, rhs);
    return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const BigInt &scalar)
{
    for (auto &c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::mul_binomial(std::size_t k, int sign, unsigned power)
{
    if (k == 0) {
        throw std::invalid_argument("mul_binomial: k must be positive");
    }
    const std::size_t n = order();
    for (unsigned p = 0; p < power; ++p) {
        // descending so each coefficient reads the un-updated lower one
        for (std::size_t i = n + 1; i-- > k;) {
            if (sign > 0) {
                coeffs_[i] += coeffs_[i - k];
            } else {
                coeffs_[i] -= coeffs_[i - k];
            }
        }
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::div_one_minus(std::size_t k, unsigned power)
{
    if (k == 0) {
        throw std::invalid_argument("div_one_minus: k must be positive");
    }
    const std::size_t n = order();
    for (unsigned p = 0; p < power; ++p) {
        for (std::size_t i = k; i <= n; ++i) {
            coeffs_[i] += coeffs_[i - k];
        }
    }
    return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) { return mul(a, b); }
TruncatedSeries operator*(TruncatedSeries a, const BigInt &s) { return a *= s; }

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s)
{
    bool first = true;
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (s[i] == 0) {
            continue;
        }
        if (!first) {
            os << (s[i] > 0 ? " + " : " - ");
        } else if (s[i] < 0) {
            os << "-";
        }
        first = false;
        const BigInt mag = abs(s[i]);
        if (mag != 1 || i == 0) {
            os << mag;
        }
        if (i > 0) {
            os << "q^" << i;
        }
    }
    if (first) {
        os << "0";
    }
    return os << " + O(q^" << s.order() + 1 << ")";
}

TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<BigInt> out(n + 1);
    const auto ca = a.coeffs();
    const auto cb = b.coeffs();
    for (std::size_t i = 0; i <= n; ++i) {
        if (ca[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (cb[j] != 0) {
                mpz_addmul(out[i + j].get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
            }
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries invert_unit(const TruncatedSeries &a)
{
    const BigInt &c0 = a[0];
    if (c0 != 1 && c0 != -1) {
        throw std::domain_error("invert_unit: constant coefficient must be +1 or -1");
    }
    const std::size_t n = a.order();
    std::vector<BigInt> b(n + 1);
    b[0] = c0; // 1/c0 == c0 for units
    const auto ca = a.coeffs();
    for (std::size_t i = 1; i <= n; ++i) {
        BigInt acc = 0;
        for (std::size_t j = 1; j <= i; ++j) {
            if (ca[j] != 0) {
                mpz_addmul(acc.get_mpz_t(), ca[j].get_mpz_t(), b[i - j].get_mpz_t());
            }
        }
        b[i] = -acc * c0;
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries pochhammer(std::size_t m, std::size_t order)
{
    TruncatedSeries s = TruncatedSeries::one(order);
    const std::size_t last = std::min(m, order);
    for (std::size_t j = 1; j <= last; ++j) {
        s.mul_binomial(j, -1);
    }
    return s;
}

TruncatedSeries pochhammer_neg(std::size_t m, std::size_t order)
{
    TruncatedSeries s = TruncatedSeries::one(order);
    const std::size_t last = std::min(m, order);
    for (std::size_t j = 1; j <= last; ++j) {
        s.mul_binomial(j, +1);
    }
    return s;
}

TruncatedSeries inverse_tail_pochhammer(std::size_t n, std::size_t order)
{
    if (n == 0) {
        throw std::invalid_argument("inverse_tail_pochhammer: n must be at least 1");
    }
    TruncatedSeries s = TruncatedSeries::one(order);
    for (std::size_t j = n; j <= order; ++j) {
        s.div_one_minus(j);
    }
    return s;
}

TruncatedSeries partition_series(std::size_t order)
{
    return inverse_tail_pochhammer(1, order);
}

namespace {

BigInt int_pow(std::size_t base, unsigned exp)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// sum_{m>=0} m^k q^m / (q)_m^power; the 0^0 = 1 convention applies at m = 0.
TruncatedSeries peak_moment_series(unsigned k, unsigned power, std::size_t order)
{
    TruncatedSeries out(order);
    if (k == 0) {
        out[0] = 1;
    }
    TruncatedSeries inv = TruncatedSeries::one(order); // 1/(q)_m^power
    for (std::size_t m = 1; m <= order; ++m) {
        inv.div_one_minus(m, power);
        const BigInt w = int_pow(m, k);
        for (std::size_t i = 0; i + m <= order; ++i) {
            if (inv[i] != 0) {
                mpz_addmul(out[i + m].get_mpz_t(), w.get_mpz_t(), inv[i].get_mpz_t());
            }
        }
    }
    return out;
}

} // namespace

TruncatedSeries unimodal_series(std::size_t order)
{
    return peak_moment_series(0, 2, order);
}

TruncatedSeries strongly_unimodal_series(std::size_t order)
{
    TruncatedSeries out(order);
    out[0] = 1;
    TruncatedSeries prod = TruncatedSeries::one(order); // (-q)_{p-1}^2
    for (std::size_t p = 1; p <= order; ++p) {
        if (p >= 2) {
            prod.mul_binomial(p - 1, +1, 2);
        }
        for (std::size_t i = 0; i + p <= order; ++i) {
            out[i + p] += prod[i];
        }
    }
    return out;
}

TruncatedSeries s_series(int k, std::size_t n, std::size_t order)
{
    if (k < 0) {
        throw std::invalid_argument("s_series: k must be non-negative (use inverse_tail_pochhammer for k = -1)");
    }
    if (n < 1) {
        throw std::invalid_argument("s_series: n must be at least 1");
    }
    // [q^N] = sum of m^k over divisors m of N with N/m >= n
    TruncatedSeries out(order);
    for (std::size_t m = 1; m * n <= order; ++m) {
        const BigInt w = int_pow(m, static_cast<unsigned>(k));
        for (std::size_t N = m * n; N <= order; N += m) {
            out[N] += w;
        }
    }
    return out;
}

TruncatedSeries bell_complete(std::span<const TruncatedSeries> a, std::size_t order)
{
    return bell_complete_all<TruncatedSeries>(a, TruncatedSeries::one(order)).back();
}

TruncatedSeries mu_series_direct(unsigned k, std::size_t order)
{
    return peak_moment_series(k, 2, order);
}

TruncatedSeries mu_series_bell(unsigned k, std::size_t order)
{
    TruncatedSeries sum(order);
    for (std::size_t n = 0; n * (n + 1) / 2 <= order; ++n) {
        std::vector<TruncatedSeries> args;
        args.reserve(k);
        for (unsigned j = 0; j < k; ++j) {
            args.push_back(s_series(static_cast<int>(j), n + 1, order));
        }
        const TruncatedSeries bell = bell_complete(args, order);
        const std::size_t shift = n * (n + 1) / 2;
        for (std::size_t i = 0; i + shift <= order; ++i) {
            if (n % 2 == 0) {
                sum[i + shift] += bell[i];
            } else {
                sum[i + shift] -= bell[i];
            }
        }
    }
    const TruncatedSeries p = partition_series(order);
    return mul(mul(p, p), sum);
}

TruncatedSeries mp_series_direct(unsigned k, std::size_t order)
{
    return peak_moment_series(k, 1, order);
}

TruncatedSeries mp_series_recursive(unsigned k, std::size_t order)
{
    std::vector<TruncatedSeries> mp;
    mp.reserve(k + 1);
    mp.push_back(partition_series(order));
    std::vector<TruncatedSeries> s;
    for (unsigned j = 0; j < k; ++j) {
        s.push_back(s_series(static_cast<int>(j), 1, order));
    }
    for (unsigned i = 1; i <= k; ++i) {
        TruncatedSeries acc(order);
        BigInt binom = 1; // C(i-1, j)
        for (unsigned j = 0; j < i; ++j) {
            if (j > 0) {
                binom = binom * (i - j) / j;
            }
            acc += mul(mp[j], s[i - 1 - j]) * binom;
        }
        mp.push_back(std::move(acc));
    }
    return mp[k];
}

void write_series_csv(std::ostream &os, const TruncatedSeries &s)
{
    os << "exponent,coefficient\n";
    for (std::size_t i = 0; i <= s.order(); ++i) {
        os << i << ',' << s[i].get_str() << '\n';
    }
}

} // namespace unimodal
