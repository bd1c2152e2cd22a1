#include <doctest.h>

#include <random>

#include "howe/qpoly.hpp"
#include "oracle_helpers.hpp"

using namespace howe;

namespace {

oracle::DensePoly expand(const FactoredQPoly& p) {
    const auto coeffs = p.expanded_coefficients();
    oracle::DensePoly out(coeffs.begin(), coeffs.end());
    oracle::dense_trim(out);
    return out;
}

}  // namespace

TEST_CASE("cyclotomic factorizations") {
    CHECK(FactoredQPoly::q_pow_plus_one(2) == FactoredQPoly::cyclotomic(4));
    CHECK(FactoredQPoly::q_pow_minus_one(6) ==
          FactoredQPoly::cyclotomic(1) * FactoredQPoly::cyclotomic(2) *
              FactoredQPoly::cyclotomic(3) * FactoredQPoly::cyclotomic(6));
    CHECK(FactoredQPoly::q_pow_plus_one(5) ==
          FactoredQPoly::cyclotomic(2) * FactoredQPoly::cyclotomic(10));
}

TEST_CASE("expansion matches dense binomials") {
    for (int k = 1; k <= 24; ++k) {
        oracle::DensePoly minus(k + 1, BigInt(0));
        minus[0] = -1;
        minus[k] = 1;
        CHECK(expand(FactoredQPoly::q_pow_minus_one(k)) == minus);
        oracle::DensePoly plus(k + 1, BigInt(0));
        plus[0] = 1;
        plus[k] = 1;
        CHECK(expand(FactoredQPoly::q_pow_plus_one(k)) == plus);
    }
}

TEST_CASE("algebra of factored polynomials") {
    const FactoredQPoly x = FactoredQPoly::q_pow_minus_one(8);
    CHECK((x / x).is_one());
    CHECK((x / x).degree() == 0);
    CHECK(x.degree() == 8);
    CHECK(FactoredQPoly::q_pow_plus_one(3).evaluate_at(2) == 9);
    CHECK(FactoredQPoly::one().to_string() == "1");
    const FactoredQPoly rational = FactoredQPoly::one() / FactoredQPoly::q_pow_plus_one(1);
    CHECK_FALSE(rational.is_polynomial());
    CHECK(rational.evaluate_at(3) == BigRational(1, 4));
    CHECK(rational.degree() == -1);
}

TEST_CASE("unitary group order") {
    CHECK(unitary_group_order_prime_part(0).is_one());
    CHECK(unitary_group_order_prime_part(2) ==
          FactoredQPoly::q_pow_plus_one(1) * FactoredQPoly::q_pow_minus_one(2));
    CHECK(unitary_group_order_prime_part(2).degree() == 3);
    CHECK(unitary_group_order_prime_part(8).degree() == 36);
    for (int n = 0; n <= 12; ++n)
        CHECK(unitary_group_order_prime_part(n).degree() == n * (n + 1) / 2);
}

TEST_CASE("pinned character degrees") {
    CHECK(dim_via_hooks(Partition::parse("3")).is_one());
    for (int n = 1; n <= 10; ++n) CHECK(dim_via_hooks(Partition({n})).is_one());

    const FactoredQPoly cuspidal3 = dim_via_hooks(Partition::parse("2,1"));
    CHECK(cuspidal3.to_string() == "q * Phi1");
    CHECK(cuspidal3.evaluate_at(3) == 6);  // 3^2 - 3

    const FactoredQPoly d62 = dim_via_hooks(Partition::parse("6,2"));
    CHECK(d62 == FactoredQPoly::q_power(2) * FactoredQPoly::cyclotomic(4) *
                     FactoredQPoly::cyclotomic(8) * FactoredQPoly::cyclotomic(10));
    CHECK(d62.to_string() == "q^2 * Phi4 * Phi8 * Phi10");
    CHECK(d62.degree() == 12);
    // expanded: q^2 (q^4 - q^3 + q^2 - q + 1)(q^6 + q^4 + q^2 + 1)
    oracle::DensePoly byhand = oracle::dense_one();
    byhand = oracle::dense_mul(byhand, oracle::DensePoly{1, -1, 1, -1, 1});
    byhand = oracle::dense_mul(byhand, oracle::DensePoly{1, 0, 1, 0, 1, 0, 1});
    byhand = oracle::dense_mul(byhand, oracle::DensePoly{0, 0, 1});
    CHECK(expand(d62) == byhand);
}

TEST_CASE("dimension via beta-set equals dimension via hooks") {
    for (int n = 0; n <= 20; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(dim_via_hooks(p) == dim_via_betaset(p));
}

TEST_CASE("factored dimensions match a fully dense computation") {
    for (int n = 0; n <= 10; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(expand(dim_via_hooks(p)) == oracle::dense_dim(p));
}

TEST_CASE("degree of the dimension equals the degree functional") {
    for (int n = 0; n <= 20; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(dim_via_hooks(p).degree() == dim_degree(BetaSet::of_partition(p)));
}

TEST_CASE("cuspidal closed form") {
    for (int d = 0; d <= 5; ++d) {
        const Partition sc = staircase(d);
        FactoredQPoly expected = FactoredQPoly::q_power(sc.weighted_row_sum());
        expected *= unitary_group_order_prime_part(sc.weight());
        for (int i = 1; i <= d; ++i)
            expected /= FactoredQPoly::q_pow_plus_one(2 * i - 1).pow(d + 1 - i);
        CHECK(dim_via_hooks(sc) == expected);
    }
    CHECK(dim_via_hooks(staircase(2)).evaluate_at(2) == 2);   // q^2 - q at 2
    CHECK(dim_via_hooks(staircase(2)).evaluate_at(3) == 6);
}

TEST_CASE("shift invariance of the beta-set factor") {
    CHECK(f_of_betaset(BetaSet({0})).is_one());
    CHECK(f_of_betaset(BetaSet({8, 3, 0})) == f_of_betaset(BetaSet({7, 2})));
    CHECK(f_of_betaset(BetaSet({7, 2})) * unitary_group_order_prime_part(8) ==
          dim_via_hooks(Partition::parse("6,2")));
    std::mt19937 rng(77001);
    for (int trial = 0; trial < 1000; ++trial) {
        const BetaSet x = oracle::random_beta_set(rng, 7, 60);
        CHECK(f_of_betaset(x.shifted_up()) == f_of_betaset(x));
    }
}

TEST_CASE("values at small prime powers are positive integers") {
    for (int n = 0; n <= 20; ++n)
        for (const Partition& p : partitions_of(n)) {
            const FactoredQPoly dim = dim_via_hooks(p);
            CHECK(dim.is_polynomial());
            for (long long q0 : {2LL, 3LL}) {
                const BigRational v = dim.evaluate_at(q0);
                CHECK(denominator(v) == 1);
                CHECK(v > 0);
            }
        }
}
