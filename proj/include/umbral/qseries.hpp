#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

// Truncated Laurent series in q^{1/den} with exact rational coefficients.
// Exponents are numerators over den: coefficient i of c is the coefficient
// of q^{(val+i)/den}.  Exponents >= trunc/den are unknown; everything below
// is known exactly (absent = zero).  Leading zeros are trimmed on
// normalisation so val is the true valuation whenever the series is nonzero.
class QSeries {
  public:
    QSeries() = default;
    QSeries(long den, long val, long trunc, std::vector<Rational> coeffs);

    // the zero series, known up to (not including) q^{trunc/den}
    static QSeries zero(long den, long trunc);
    // c * q^{num/den}, known up to q^{trunc/den}
    static QSeries monomial(const Rational& c, long num, long den, long trunc);

    long den() const { return den_; }
    long val() const { return val_; }
    long trunc() const { return trunc_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_known_zero() const { return c_.empty(); }
    // valuation as exponent numerator over den; nullopt if zero to trunc
    std::optional<long> valuation() const;
    Rational leading() const;

    // coefficient of q^{num/d}; throws if the exponent is not representable
    // or lies at/above the truncation
    const Rational& at(long num, long d) const;
    // coefficient by numerator over den()
    const Rational& at_num(long num) const;
    // true if the exponent lies below the truncation
    bool knows(long num, long d) const;

    QSeries rebased(long newden) const;
    QSeries truncated(long new_trunc) const;  // new_trunc over den()

    QSeries operator-() const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
    QSeries operator*(const Rational& s) const;

    // 1/this; requires a nonzero leading coefficient
    QSeries inverse() const;
    QSeries pow(long k) const;

    // q d/dq: multiplies the coefficient of q^e by e
    QSeries q_derivative() const;
    // q -> q^{knum/kden}; exponents scale by knum/kden
    QSeries dilated(long knum, long kden = 1) const;
    // multiply by q^{num/d}
    QSeries shifted(long num, long d) const;
    // q -> -q; requires integer exponents on the den-grid
    QSeries negated_q() const;
    // the odd part in q^{1/den}: terms with odd exponent numerator
    QSeries odd_part() const;

    bool operator==(const QSeries& o) const;
    // equality of all coefficients below min(trunc, o.trunc)
    bool agrees(const QSeries& o) const;

    std::string str(int max_terms = 12) const;

  private:
    void normalize();

    long den_ = 1;
    long val_ = 0;
    long trunc_ = 0;
    std::vector<Rational> c_;
};

// ---- classical building blocks ------------------------------------------

struct FramePart {
    long n;  // argument scale: eta(n tau)
    long k;  // power (may be negative)
};
using FrameShape = std::vector<FramePart>;

// q^{1/24} prod_{n>=1} (1 - q^n), exact to q-order `order` (den = 24)
QSeries dedekind_eta(long order);

// prod_i eta(n_i tau)^{k_i}
QSeries eta_product(const FrameShape& frame, long order);

// lambda_N = (N-1)/24 + sum_{k>0} sigma(k) (q^k - N q^{Nk}); lambda_1 = 0
QSeries lambda_eisenstein(long N, long order);

// sum_i k_i lambda_{n_i}
QSeries lambda_sum(const FrameShape& frame, long order);

// (q d/dq) log a = (q da/dq) / a
QSeries q_log_derivative(const QSeries& a);

// prod_{k=0}^{count-1} (1 - sign q^{alpha + k step}); count < 0 means the
// infinite product (requires a positive step and, when alpha = 0, sign = -1
// would give factor 2 but sign=+1 alpha=0 gives a zero factor -> rejected)
QSeries pochhammer(int sign, const Rational& alpha, const Rational& step,
                   long count, long order);

Integer divisor_sigma(long k);

}  // namespace umbral
