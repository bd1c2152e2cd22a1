#include "howe/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace howe {

int euler_phi(int d) {
    int result = d;
    for (int p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            result -= result / p;
            while (d % p == 0) d /= p;
        }
    }
    if (d > 1) result -= result / d;
    return result;
}

const std::vector<long long>& cyclotomic_coefficients(int d) {
    static std::map<int, std::vector<long long>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    // Phi_d = (q^d - 1) / prod_{e | d, e < d} Phi_e, by exact long division.
    std::vector<long long> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        const auto& div = cyclotomic_coefficients(e);
        std::vector<long long> quot(num.size() - div.size() + 1, 0);
        for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
            const long long c = num[i + div.size() - 1];
            quot[i] = c;  // divisor is monic
            for (size_t j = 0; j < div.size(); ++j) num[i + j] -= c * div[j];
        }
        num = std::move(quot);
    }
    return cache.emplace(d, std::move(num)).first->second;
}

FactoredQPoly FactoredQPoly::q_power(long long e) {
    FactoredQPoly p;
    p.q_exp_ = e;
    return p;
}

FactoredQPoly FactoredQPoly::cyclotomic(int d, int exponent) {
    FactoredQPoly p;
    if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
    if (exponent != 0) p.cyclo_[d] = exponent;
    return p;
}

FactoredQPoly FactoredQPoly::q_pow_minus_one(int k) {
    if (k < 1) throw std::invalid_argument("q^k - 1 requires k >= 1");
    FactoredQPoly p;
    for (int d = 1; d <= k; ++d)
        if (k % d == 0) p.cyclo_[d] = 1;
    return p;
}

FactoredQPoly FactoredQPoly::q_pow_plus_one(int k) {
    if (k < 1) throw std::invalid_argument("q^k + 1 requires k >= 1");
    FactoredQPoly p;
    for (int d = 1; d <= 2 * k; ++d)
        if ((2 * k) % d == 0 && k % d != 0) p.cyclo_[d] = 1;
    return p;
}

FactoredQPoly FactoredQPoly::q_pow_minus_sign(int k) {
    return k % 2 == 0 ? q_pow_minus_one(k) : q_pow_plus_one(k);
}

FactoredQPoly& FactoredQPoly::operator*=(const FactoredQPoly& o) {
    sign_ *= o.sign_;
    q_exp_ += o.q_exp_;
    for (const auto& [d, e] : o.cyclo_) {
        const int m = (cyclo_[d] += e);
        if (m == 0) cyclo_.erase(d);
    }
    return *this;
}

FactoredQPoly& FactoredQPoly::operator/=(const FactoredQPoly& o) {
    sign_ *= o.sign_;
    q_exp_ -= o.q_exp_;
    for (const auto& [d, e] : o.cyclo_) {
        const int m = (cyclo_[d] -= e);
        if (m == 0) cyclo_.erase(d);
    }
    return *this;
}

FactoredQPoly FactoredQPoly::negated() const {
    FactoredQPoly p = *this;
    p.sign_ = -p.sign_;
    return p;
}

FactoredQPoly FactoredQPoly::pow(int e) const {
    FactoredQPoly p;
    p.sign_ = (e % 2 == 0 || sign_ == 1) ? 1 : -1;
    p.q_exp_ = q_exp_ * e;
    if (e != 0)
        for (const auto& [d, m] : cyclo_) p.cyclo_[d] = m * e;
    return p;
}

long long FactoredQPoly::degree() const {
    long long deg = q_exp_;
    for (const auto& [d, m] : cyclo_) deg += static_cast<long long>(m) * euler_phi(d);
    return deg;
}

bool FactoredQPoly::is_polynomial() const {
    if (q_exp_ < 0) return false;
    for (const auto& [d, m] : cyclo_)
        if (m < 0) return false;
    return true;
}

BigRational FactoredQPoly::evaluate_at(long long q0) const {
    if (q0 == 0) throw std::invalid_argument("evaluation point must be non-zero");
    BigRational value(sign_);
    const BigInt q(q0);
    if (q_exp_ >= 0)
        value *= BigRational(boost::multiprecision::pow(q, static_cast<unsigned>(q_exp_)));
    else
        value /= BigRational(boost::multiprecision::pow(q, static_cast<unsigned>(-q_exp_)));
    for (const auto& [d, m] : cyclo_) {
        const auto& coeffs = cyclotomic_coefficients(d);
        BigInt phi = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) phi = phi * q0 + *it;
        if (m >= 0)
            value *= BigRational(boost::multiprecision::pow(phi, static_cast<unsigned>(m)));
        else
            value /= BigRational(boost::multiprecision::pow(phi, static_cast<unsigned>(-m)));
    }
    return value;
}

std::vector<BigInt> FactoredQPoly::expanded_coefficients() const {
    if (!is_polynomial())
        throw std::domain_error("expansion requires a polynomial (all exponents >= 0)");
    std::vector<BigInt> poly{BigInt(sign_)};
    for (const auto& [d, m] : cyclo_) {
        const auto& phi = cyclotomic_coefficients(d);
        for (int rep = 0; rep < m; ++rep) {
            std::vector<BigInt> next(poly.size() + phi.size() - 1, BigInt(0));
            for (size_t i = 0; i < poly.size(); ++i)
                for (size_t j = 0; j < phi.size(); ++j) next[i + j] += poly[i] * phi[j];
            poly = std::move(next);
        }
    }
    poly.insert(poly.begin(), static_cast<size_t>(q_exp_), BigInt(0));
    return poly;
}

std::string FactoredQPoly::to_string() const {
    std::ostringstream os;
    if (sign_ < 0) os << "-";
    bool first = true;
    auto sep = [&] {
        if (!first) os << " * ";
        first = false;
    };
    if (q_exp_ != 0) {
        sep();
        os << "q";
        if (q_exp_ != 1) os << "^" << q_exp_;
    }
    for (const auto& [d, m] : cyclo_) {
        sep();
        os << "Phi" << d;
        if (m != 1) os << "^" << m;
    }
    if (first) os << "1";
    return os.str();
}

FactoredQPoly unitary_group_order_prime_part(int n) {
    FactoredQPoly p;
    for (int i = 1; i <= n; ++i) p *= FactoredQPoly::q_pow_minus_sign(i);
    return p;
}

FactoredQPoly dim_via_hooks(const Partition& p) {
    FactoredQPoly dim = FactoredQPoly::q_power(p.weighted_row_sum());
    dim *= unitary_group_order_prime_part(p.weight());
    for (int h : p.hook_lengths()) dim /= FactoredQPoly::q_pow_minus_sign(h);
    return dim;
}

namespace {

/// Delta(A) = prod_{a > a'} (q^a - q^a') = prod q^a' (q^{a-a'} - 1).
FactoredQPoly vandermonde_factor(const BetaSet& a) {
    FactoredQPoly p;
    const auto& e = a.entries();
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j) {
            p *= FactoredQPoly::q_power(e[j]);
            p *= FactoredQPoly::q_pow_minus_one(e[i] - e[j]);
        }
    return p;
}

/// Theta(A) = prod_{a in A} prod_{h=1..a} (q^h - (-1)^h).
FactoredQPoly tower_order_factor(const BetaSet& a) {
    FactoredQPoly p;
    for (int x : a.entries()) p *= unitary_group_order_prime_part(x);
    return p;
}

/// Xi(A,B) = prod_{a in A, b in B} (q^a + q^b); rows of opposite parity
/// never collide, so every factor is q^min (q^{|a-b|} + 1).
FactoredQPoly cross_factor(const BetaSet& a, const BetaSet& b) {
    FactoredQPoly p;
    for (int x : a.entries())
        for (int y : b.entries()) {
            p *= FactoredQPoly::q_power(std::min(x, y));
            p *= FactoredQPoly::q_pow_plus_one(x > y ? x - y : y - x);
        }
    return p;
}

}  // namespace

FactoredQPoly f_of_betaset(const BetaSet& x) {
    const ParitySplit ps = parity_split(x);
    const long long m = x.size();
    FactoredQPoly f = vandermonde_factor(ps.even);
    f *= vandermonde_factor(ps.odd);
    f *= cross_factor(ps.even, ps.odd);
    f /= tower_order_factor(ps.even);
    f /= tower_order_factor(ps.odd);
    f /= FactoredQPoly::q_power(m * (m - 1) * (m - 2) / 6);
    return f;
}

FactoredQPoly dim_via_betaset(const Partition& p) {
    return f_of_betaset(BetaSet::of_partition(p)) *
           unitary_group_order_prime_part(p.weight());
}

}  // namespace howe
