#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "howe/betaset.hpp"
#include "howe/partition.hpp"

namespace howe {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

int euler_phi(int d);

/// Integer coefficients of the d-th cyclotomic polynomial, ascending.
const std::vector<long long>& cyclotomic_coefficients(int d);

/// A non-zero rational function of q kept in fully factored form
///   sign * q^e * prod_d Phi_d(q)^{m_d}
/// over cyclotomic polynomials Phi_d.  Exponents may be negative; the value
/// is a polynomial exactly when e >= 0 and every m_d >= 0.  Products and
/// quotients are exact and lossless.
class FactoredQPoly {
public:
    FactoredQPoly() = default;  // the constant 1

    static FactoredQPoly one() { return {}; }
    static FactoredQPoly q_power(long long e);
    static FactoredQPoly cyclotomic(int d, int exponent = 1);
    /// q^k - 1 = prod_{d | k} Phi_d.
    static FactoredQPoly q_pow_minus_one(int k);
    /// q^k + 1 = prod_{d | 2k, d not| k} Phi_d.
    static FactoredQPoly q_pow_plus_one(int k);
    /// q^k - (-1)^k.
    static FactoredQPoly q_pow_minus_sign(int k);

    FactoredQPoly& operator*=(const FactoredQPoly& o);
    FactoredQPoly& operator/=(const FactoredQPoly& o);
    friend FactoredQPoly operator*(FactoredQPoly a, const FactoredQPoly& b) { return a *= b; }
    friend FactoredQPoly operator/(FactoredQPoly a, const FactoredQPoly& b) { return a /= b; }

    FactoredQPoly negated() const;
    FactoredQPoly pow(int e) const;

    long long q_exponent() const { return q_exp_; }
    int sign() const { return sign_; }
    const std::map<int, int>& cyclotomic_exponents() const { return cyclo_; }

    long long degree() const;
    bool is_polynomial() const;
    bool is_one() const { return sign_ == 1 && q_exp_ == 0 && cyclo_.empty(); }

    /// Exact value at an integer point (rational when some exponent is
    /// negative).  q0 = 0 is rejected; cyclotomic values never vanish at
    /// |q0| >= 2.
    BigRational evaluate_at(long long q0) const;

    /// Dense ascending coefficient list; requires is_polynomial().
    std::vector<BigInt> expanded_coefficients() const;

    bool operator==(const FactoredQPoly&) const = default;

    /// "q^2 * Phi4 * Phi8 * Phi10"; the constant one renders "1".
    std::string to_string() const;

private:
    int sign_ = 1;
    long long q_exp_ = 0;
    std::map<int, int> cyclo_;  // d -> non-zero exponent
};

/// prod_{i=1..n} (q^i - (-1)^i); the part of |U_n(q)| prime to the
/// defining characteristic.  Degree n(n+1)/2.
FactoredQPoly unitary_group_order_prime_part(int n);

/// Character degree via the hook product:
///   q^{weighted_row_sum} * prod_{i<=n}(q^i - (-1)^i) / prod_hooks (q^h - (-1)^h).
FactoredQPoly dim_via_hooks(const Partition& p);

/// The shift-invariant factor f with dim = f * |U_n(q)|_{p'}, built from the
/// parity split of the beta-set:
///   Delta(even) Delta(odd) Xi(even, odd) / (Theta(even) Theta(odd) q^{C(m,3)}).
FactoredQPoly f_of_betaset(const BetaSet& x);

/// Character degree via f_of_betaset; equals dim_via_hooks exactly.
FactoredQPoly dim_via_betaset(const Partition& p);

}  // namespace howe
