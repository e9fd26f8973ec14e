#include "obstruct/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace obstruct::arith {

Integer PrimeFactorization::recompose() const
{
    Integer r = 1;
    for (auto const & [p, e] : factors) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        r *= pe;
    }
    return r;
}

bool PrimeFactorization::is_squarefree() const
{
    return std::all_of(factors.begin(), factors.end(),
                       [](auto const & f) { return f.second == 1; });
}

int kronecker(Integer const & a, Integer const & n)
{
    if (n == 0)
        throw std::domain_error("kronecker: n must be nonzero");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

namespace {

/* Witnesses {2..37} make Miller-Rabin exact for n < 3317044064679887385961981. */
Integer const deterministic_limit("3317044064679887385961981");

bool miller_rabin_round(Integer const & n, Integer const & d, unsigned s,
                        unsigned long witness)
{
    Integer a = witness;
    if (a % n == 0)
        return true;
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    Integer const nm1 = n - 1;
    if (x == 1 || x == nm1)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == nm1)
            return true;
    }
    return false;
}

Integer pollard_brent(Integer const & n, unsigned long seed)
{
    if (n % 2 == 0)
        return 2;
    Integer const c = seed;
    auto f = [&](Integer const & v) { return Integer((v * v + c) % n); };
    Integer y = seed + 1, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    unsigned long const m = 64;
    do {
        x = y;
        for (unsigned long i = 0; i < r; ++i)
            y = f(y);
        unsigned long k = 0;
        do {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = (q * abs(Integer(x - y))) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        } while (k < r && g == 1);
        r *= 2;
    } while (g == 1);
    if (g == n) {
        do {
            ys = f(ys);
            Integer diff = abs(Integer(x - ys));
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void split_into(Integer const & n, std::map<Integer, unsigned> & out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = n;
    for (unsigned long seed = 1; d == n; ++seed)
        d = pollard_brent(n, seed);
    split_into(d, out);
    split_into(Integer(n / d), out);
}

} // namespace

bool is_prime(Integer const & n)
{
    if (n < 2)
        return false;
    static unsigned long const small[] = { 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37 };
    for (unsigned long p : small) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (unsigned long w : small)
        if (!miller_rabin_round(n, d, s, w))
            return false;
    if (n < deterministic_limit)
        return true;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

PrimeFactorization factor(Integer const & n)
{
    if (n == 0)
        throw std::domain_error("factor: n must be nonzero");
    PrimeFactorization result;
    result.value = n;
    Integer rest = abs(n);
    std::map<Integer, unsigned> found;
    static std::vector<std::uint64_t> const small = primes_up_to(10000);
    bool cofactor_prime = false;
    for (std::uint64_t p : small) {
        if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0) {
            cofactor_prime = true;
            break;
        }
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++found[Integer(static_cast<unsigned long>(p))];
        }
    }
    if (cofactor_prime) {
        if (rest > 1)
            ++found[rest];
    } else {
        split_into(rest, found);
    }
    result.factors.assign(found.begin(), found.end());
    return result;
}

bool is_squarefree(Integer const & n)
{
    return factor(n).is_squarefree();
}

std::pair<Integer, unsigned> prime_power(Integer const & n)
{
    if (n < 2)
        return { 0, 0 };
    auto f = factor(n);
    if (f.factors.size() != 1)
        return { 0, 0 };
    return f.factors.front();
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound)
{
    std::vector<std::uint64_t> primes;
    if (bound < 2)
        return primes;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return primes;
}

Integer parse_integer(std::string const & s)
{
    Integer r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("not an integer: '" + s + "'");
    return r;
}

std::int64_t to_int64(Integer const & n)
{
    if (!mpz_fits_slong_p(n.get_mpz_t()))
        throw std::overflow_error("integer does not fit in 64 bits: " + n.get_str());
    return n.get_si();
}

} // namespace obstruct::arith
