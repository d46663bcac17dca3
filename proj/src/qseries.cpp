#include "umbral/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace umbral {

namespace {
long lcm_den(long a, long b) { return a / std::gcd(a, b) * b; }
}  // namespace

QSeries::QSeries(long den, long val, long trunc, std::vector<Rational> coeffs)
    : den_(den), val_(val), trunc_(trunc), c_(std::move(coeffs)) {
    if (den_ <= 0) throw std::invalid_argument("QSeries: den must be positive");
    if (trunc_ < val_) throw std::invalid_argument("QSeries: trunc < val");
    c_.resize(static_cast<size_t>(trunc_ - val_));
    normalize();
}

QSeries QSeries::zero(long den, long trunc) { return QSeries(den, trunc, trunc, {}); }

QSeries QSeries::monomial(const Rational& c, long num, long den, long trunc) {
    if (num >= trunc || c == 0) return zero(den, trunc);
    std::vector<Rational> v(static_cast<size_t>(trunc - num));
    v[0] = c;
    return QSeries(den, num, trunc, std::move(v));
}

void QSeries::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        val_ += static_cast<long>(lead);
    }
    if (c_.empty()) val_ = trunc_;
}

std::optional<long> QSeries::valuation() const {
    if (c_.empty()) return std::nullopt;
    return val_;
}

Rational QSeries::leading() const {
    if (c_.empty()) throw std::logic_error("leading(): series is zero to truncation");
    return c_.front();
}

bool QSeries::knows(long num, long d) const {
    long g = std::gcd(den_, d);
    if ((num * (den_ / g)) % (d / g) != 0) return true;  // off-grid: known zero
    return num * (den_ / g) / (d / g) < trunc_;
}

const Rational& QSeries::at(long num, long d) const {
    static const Rational kZero(0);
    long g = std::gcd(den_, d);
    if ((num * (den_ / g)) % (d / g) != 0) return kZero;  // off-grid exponent
    return at_num(num * (den_ / g) / (d / g));
}

const Rational& QSeries::at_num(long num) const {
    static const Rational kZero(0);
    if (num >= trunc_)
        throw std::out_of_range("QSeries::at: exponent beyond truncation");
    if (num < val_) return kZero;
    return c_[static_cast<size_t>(num - val_)];
}

QSeries QSeries::rebased(long newden) const {
    if (newden == den_) return *this;
    if (newden % den_ != 0)
        throw std::invalid_argument("rebased: new den must be a multiple");
    long f = newden / den_;
    // knowledge is preserved exactly: off-grid exponents below trunc are
    // known zeros, so the new truncation is trunc * f
    std::vector<Rational> v(static_cast<size_t>((trunc_ - val_) * f));
    for (size_t i = 0; i < c_.size(); ++i) v[i * f] = c_[i];
    return QSeries(newden, val_ * f, trunc_ * f, std::move(v));
}

QSeries QSeries::truncated(long new_trunc) const {
    if (new_trunc > trunc_)
        throw std::invalid_argument("truncated: cannot extend knowledge");
    long nv = std::min(val_, new_trunc);
    std::vector<Rational> v(c_.begin(),
                            c_.begin() + std::max<long>(0, new_trunc - val_));
    return QSeries(den_, nv, new_trunc, std::move(v));
}

QSeries QSeries::operator-() const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x = -x;
    return QSeries(den_, val_, trunc_, std::move(v));
}

QSeries QSeries::operator+(const QSeries& o) const {
    long den = lcm_den(den_, o.den_);
    if (den != den_ || den != o.den_) return rebased(den) + o.rebased(den);
    long trunc = std::min(trunc_, o.trunc_);
    long val = std::min({val_, o.val_, trunc});
    std::vector<Rational> v(static_cast<size_t>(trunc - val));
    auto acc = [&](const QSeries& s) {
        long hi = std::min(s.trunc_, trunc);
        for (long e = s.val_; e < hi; ++e)
            v[static_cast<size_t>(e - val)] += s.c_[static_cast<size_t>(e - s.val_)];
    };
    acc(*this);
    acc(o);
    return QSeries(den, val, trunc, std::move(v));
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
    long den = lcm_den(den_, o.den_);
    if (den != den_ || den != o.den_) return rebased(den) * o.rebased(den);
    // the coefficient of q^e in the product is complete for e below
    // min(val + o.trunc, o.val + trunc): truncation never silently gains
    long trunc = std::min(val_ + o.trunc_, o.val_ + trunc_);
    long val = std::min(val_ + o.val_, trunc);
    std::vector<Rational> v(static_cast<size_t>(trunc - val));
    Rational tmp;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        long base = val_ + static_cast<long>(i) + o.val_;
        if (base >= trunc) break;
        size_t jmax = std::min(o.c_.size(), static_cast<size_t>(trunc - base));
        for (size_t j = 0; j < jmax; ++j) {
            if (o.c_[j] == 0) continue;
            tmp = c_[i] * o.c_[j];
            v[static_cast<size_t>(base - val) + j] += tmp;
        }
    }
    return QSeries(den, val, trunc, std::move(v));
}

QSeries QSeries::operator*(const Rational& s) const {
    if (s == 0) return zero(den_, trunc_);
    std::vector<Rational> v(c_);
    for (auto& x : v) x *= s;
    return QSeries(den_, val_, trunc_, std::move(v));
}

QSeries QSeries::inverse() const {
    if (c_.empty() || c_.front() == 0)
        throw std::domain_error("inverse: zero leading coefficient");
    long len = trunc_ - val_;
    std::vector<Rational> b(static_cast<size_t>(len));
    b[0] = 1 / c_[0];
    for (long n = 1; n < len; ++n) {
        Rational s(0);
        for (long k = 1; k <= n; ++k)
            if (c_[static_cast<size_t>(k)] != 0)
                s += c_[static_cast<size_t>(k)] * b[static_cast<size_t>(n - k)];
        b[static_cast<size_t>(n)] = -s / c_[0];
    }
    return QSeries(den_, -val_, -val_ + len, std::move(b));
}

QSeries QSeries::pow(long k) const {
    if (k == 0) return monomial(1, 0, den_, trunc_ - std::min(val_, long(0)));
    if (k < 0) return inverse().pow(-k);
    QSeries result = *this;
    --k;
    QSeries base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

QSeries QSeries::q_derivative() const {
    std::vector<Rational> v(c_);
    for (size_t i = 0; i < v.size(); ++i)
        v[i] *= Rational(val_ + static_cast<long>(i), den_);
    return QSeries(den_, val_, trunc_, std::move(v));
}

QSeries QSeries::dilated(long knum, long kden) const {
    if (knum <= 0 || kden <= 0) throw std::invalid_argument("dilated: k <= 0");
    long g = std::gcd(knum, kden);
    knum /= g;
    kden /= g;
    long nd = den_ * kden;
    long ntrunc = trunc_ * knum - (knum - 1);
    if (c_.empty()) return zero(nd, ntrunc);
    long nval = val_ * knum;
    std::vector<Rational> v(static_cast<size_t>(ntrunc - nval));
    for (size_t i = 0; i < c_.size(); ++i) v[i * knum] = c_[i];
    return QSeries(nd, nval, ntrunc, std::move(v));
}

QSeries QSeries::shifted(long num, long d) const {
    long den = lcm_den(den_, d);
    if (den != den_) return rebased(den).shifted(num, d);
    long s = num * (den_ / d);
    return QSeries(den_, val_ + s, trunc_ + s, c_);
}

QSeries QSeries::negated_q() const {
    std::vector<Rational> v(c_);
    for (size_t i = 0; i < v.size(); ++i) {
        long e = val_ + static_cast<long>(i);
        if (e % den_ != 0)
            throw std::domain_error("negated_q: non-integer exponent");
        if ((e / den_) % 2 != 0) v[i] = -v[i];
    }
    return QSeries(den_, val_, trunc_, std::move(v));
}

QSeries QSeries::odd_part() const {
    std::vector<Rational> v(c_);
    for (size_t i = 0; i < v.size(); ++i) {
        long e = val_ + static_cast<long>(i);
        if (((e % 2) + 2) % 2 == 0) v[i] = 0;
    }
    return QSeries(den_, val_, trunc_, std::move(v));
}

bool QSeries::operator==(const QSeries& o) const {
    long den = lcm_den(den_, o.den_);
    if (den != den_ || den != o.den_) return rebased(den) == o.rebased(den);
    return trunc_ == o.trunc_ && val_ == o.val_ && c_ == o.c_;
}

bool QSeries::agrees(const QSeries& o) const {
    long den = lcm_den(den_, o.den_);
    if (den != den_ || den != o.den_) return rebased(den).agrees(o.rebased(den));
    long hi = std::min(trunc_, o.trunc_);
    long lo = std::min(val_, o.val_);
    for (long e = lo; e < hi; ++e) {
        const Rational& a = (e >= val_) ? c_[static_cast<size_t>(e - val_)] : Rational(0);
        const Rational& b = (e >= o.val_) ? o.c_[static_cast<size_t>(e - o.val_)] : Rational(0);
        if (a != b) return false;
    }
    return true;
}

std::string QSeries::str(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    bool first = true;
    for (size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
        if (c_[i] == 0) continue;
        long e = val_ + static_cast<long>(i);
        if (!first) os << " + ";
        os << c_[i].get_str() << "*q^(" << e << "/" << den_ << ")";
        first = false;
        ++shown;
    }
    if (first) os << "0";
    os << " + O(q^(" << trunc_ << "/" << den_ << "))";
    return os.str();
}

// ---- classical building blocks ------------------------------------------

Integer divisor_sigma(long k) {
    Integer s = 0;
    for (long d = 1; d * d <= k; ++d) {
        if (k % d == 0) {
            s += d;
            if (d != k / d) s += k / d;
        }
    }
    return s;
}

QSeries dedekind_eta(long order) {
    QSeries p = pochhammer(+1, 1, 1, -1, order);
    return p.rebased(24).shifted(1, 24);
}

QSeries eta_product(const FrameShape& frame, long order) {
    if (frame.empty()) throw std::invalid_argument("eta_product: empty frame");
    long valsum_num = 0;  // total valuation, over 24
    for (const auto& p : frame) valsum_num += p.n * p.k;
    long depth = order + std::abs(valsum_num) / 24 + 2;
    QSeries eta = dedekind_eta(depth);
    QSeries out = QSeries::monomial(1, 0, 24, depth * 24);
    for (const auto& p : frame) {
        if (p.n <= 0) throw std::invalid_argument("eta_product: n <= 0");
        out = out * eta.dilated(p.n).pow(p.k);
    }
    return out;
}

QSeries lambda_eisenstein(long N, long order) {
    if (N < 1) throw std::invalid_argument("lambda_eisenstein: N < 1");
    long trunc = order + 1;
    if (N == 1) return QSeries::zero(1, trunc);
    std::vector<Rational> v(static_cast<size_t>(trunc));
    v[0] = Rational(N - 1, 24);
    for (long k = 1; k < trunc; ++k) {
        Rational s(divisor_sigma(k));
        v[static_cast<size_t>(k)] += s;
        if (N * k < trunc) v[static_cast<size_t>(N * k)] -= Rational(N) * s;
    }
    return QSeries(1, 0, trunc, std::move(v));
}

QSeries lambda_sum(const FrameShape& frame, long order) {
    QSeries out = QSeries::zero(1, order + 1);
    for (const auto& p : frame)
        out += lambda_eisenstein(p.n, order) * Rational(p.k);
    return out;
}

QSeries q_log_derivative(const QSeries& a) {
    return a.q_derivative() * a.inverse();
}

QSeries pochhammer(int sign, const Rational& alpha, const Rational& step,
                   long count, long order) {
    if (alpha < 0) throw std::invalid_argument("pochhammer: negative exponent");
    if (count != 0 && alpha == 0 && sign == +1)
        throw std::invalid_argument("pochhammer: zero factor 1 - q^0");
    if (count < 0 && step <= 0)
        throw std::invalid_argument("pochhammer: infinite product needs step > 0");
    long den = lcm_den(alpha.get_den().get_si(), step.get_den().get_si());
    long trunc = order * den + 1;
    QSeries out = QSeries::monomial(1, 0, den, trunc);
    for (long k = 0; count < 0 || k < count; ++k) {
        Rational e = (alpha + step * k) * den;
        long enum_ = static_cast<long>(e.get_num().get_si());
        if (enum_ >= trunc) {
            if (step > 0) break;
            continue;
        }
        out = out * (QSeries::monomial(1, 0, den, trunc) -
                     QSeries::monomial(sign, enum_, den, trunc));
    }
    return out;
}

}  // namespace umbral
