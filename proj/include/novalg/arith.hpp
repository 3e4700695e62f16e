#ifndef NOVALG_ARITH_HPP
#define NOVALG_ARITH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace novalg
{

// Arbitrary precision scalars used throughout the library.
using integer = mpz_class;
using rational = mpq_class;

inline integer factorial(long n)
{
    if (n < 0) {
        throw std::domain_error("factorial of a negative number");
    }
    integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// binom(n, k), zero outside 0 <= k <= n.
inline integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Multinomial coefficient (k_1 + ... + k_r)! / (k_1! ... k_r!).
inline integer multinomial(const std::vector<long> &ks)
{
    integer r = 1;
    long acc = 0;
    for (long k : ks) {
        if (k < 0) {
            throw std::domain_error("multinomial with a negative entry");
        }
        acc += k;
        r *= binomial(acc, k);
    }
    return r;
}

// Falling factorial k (k-1) ... (k-n+1).
inline integer falling_factorial(long k, long n)
{
    integer r = 1;
    for (long i = 0; i < n; ++i) {
        r *= (k - i);
    }
    return r;
}

inline rational make_rational(const integer &num, const integer &den = 1)
{
    rational q(num, den);
    q.canonicalize();
    return q;
}

// "numerator/denominator" in lowest terms, the sign carried by the numerator.
inline std::string to_string(const rational &q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const integer &z)
{
    return z.get_str();
}

// Parses "a/b" or "a"; the result is canonical.
inline rational parse_rational(const std::string &text)
{
    rational q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw std::invalid_argument("bad rational: " + text);
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator: " + text);
    }
    q.canonicalize();
    return q;
}

inline bool is_integral(const rational &q)
{
    return q.get_den() == 1;
}

inline integer to_integer(const rational &q)
{
    if (!is_integral(q)) {
        throw std::domain_error("rational " + to_string(q) + " is not an integer");
    }
    return q.get_num();
}

inline std::int64_t to_int64(const integer &z)
{
    if (!z.fits_slong_p()) {
        throw std::overflow_error("integer " + z.get_str() + " does not fit in 64 bits");
    }
    return z.get_si();
}

inline int sign_power(long e)
{
    return (e % 2 == 0) ? 1 : -1;
}

} // namespace novalg

#endif
