#ifndef OBSTRUCT_ARITH_HPP
#define OBSTRUCT_ARITH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace obstruct::arith {

using Integer = mpz_class;

/*
 * Factorization of a nonzero integer. The sign is kept apart from the
 * factors; primes are strictly increasing and exponents positive.
 */
struct PrimeFactorization
{
    Integer value;
    std::vector<std::pair<Integer, unsigned>> factors;

    int sign() const { return sgn(value); }
    Integer recompose() const;   /* |value| from the factors */
    bool is_squarefree() const;
};

/* Kronecker symbol (a/n), n != 0. Throws std::domain_error on n == 0. */
int kronecker(Integer const & a, Integer const & n);

/* Deterministic below 3.3e24 (fixed witness set), probabilistic above. */
bool is_prime(Integer const & n);

PrimeFactorization factor(Integer const & n);

bool is_squarefree(Integer const & n);

/* Returns (p, m) with n = p^m if n is a prime power, else (0, 0). */
std::pair<Integer, unsigned> prime_power(Integer const & n);

/* Primes in [2, bound], increasing. */
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

Integer parse_integer(std::string const & s);

/* Conversions that throw std::overflow_error instead of truncating. */
std::int64_t to_int64(Integer const & n);

} // namespace obstruct::arith

#endif
