#include "qinv/root_scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "qinv/errors.hpp"

namespace qinv
{

using Int = RootScalar::Int;
using Rational = boost::multiprecision::cpp_rational;

Mode parse_mode(const std::string& text)
{
    if (text == "exact")
        return Mode::exact;
    if (text == "float")
        return Mode::floating;
    throw std::invalid_argument("mode must be exact or float, got '" + text + "'");
}

const char* to_string(Mode mode) noexcept
{
    return mode == Mode::exact ? "exact" : "float";
}

RootContext::RootContext(int level_, Mode mode_, double tolerance_)
    : level(level_), mode(mode_), tolerance(tolerance_)
{
    if (level < 0)
        throw std::invalid_argument("level must be nonnegative");
    if (mode == Mode::floating && !(tolerance > 0.0))
        throw std::invalid_argument("float mode needs a positive tolerance");
}

int RootContext::degree() const
{
    return static_cast<int>(cyclotomic_polynomial(order()).size()) - 1;
}

std::complex<double> RootContext::root() const
{
    return std::polar(1.0, std::numbers::pi / (2.0 * rank()));
}

RootContext RootContext::with_mode(Mode m) const
{
    RootContext c = *this;
    c.mode = m;
    return c;
}

namespace
{

std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den)
{
    // Both monic-ish integer polynomials, constant term first; den has leading coefficient 1.
    std::vector<std::int64_t> q(num.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        const std::int64_t c = num[i + den.size() - 1];
        q[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[i + j] -= c * den[j];
    }
    return q;
}

std::vector<std::int64_t> compute_cyclotomic(int n)
{
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            p = poly_divide_exact(p, cyclotomic_polynomial(d));
    return p;
}

} // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n)
{
    if (n < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    static std::mutex mutex;
    static std::map<int, std::vector<std::int64_t>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end())
            return it->second;
    }
    auto poly = compute_cyclotomic(n);
    std::lock_guard lock(mutex);
    return cache.try_emplace(n, std::move(poly)).first->second;
}

namespace
{

/// Reduce an integer polynomial in z modulo the monic Phi (constant first).
void reduce_mod(std::vector<Int>& p, const std::vector<std::int64_t>& phi)
{
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > d;) {
        if (p[i] == 0)
            continue;
        const Int c = p[i];
        for (std::size_t j = 0; j <= d; ++j)
            p[i - d + j] -= c * phi[j];
    }
    p.resize(d, Int(0));
}

using RatPoly = std::vector<Rational>;

void strip(RatPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

RatPoly rat_sub(const RatPoly& a, const RatPoly& b)
{
    RatPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    strip(out);
    return out;
}

RatPoly rat_mul(const RatPoly& a, const RatPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    RatPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    strip(out);
    return out;
}

void rat_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r)
{
    r = a;
    q.clear();
    if (r.size() < b.size())
        return;
    q.assign(r.size() - b.size() + 1, Rational(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        const Rational c = r[i + b.size() - 1] / b.back();
        q[i] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] -= c * b[j];
    }
    strip(r);
    strip(q);
}

/// s with a*s == 1 mod phi, by the extended Euclidean algorithm over Q.
RatPoly inverse_mod(const RatPoly& a, const RatPoly& phi)
{
    RatPoly r0 = phi, r1 = a;
    RatPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
        RatPoly q, r;
        rat_divmod(r0, r1, q, r);
        RatPoly s = rat_sub(s0, rat_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant because phi is irreducible and a != 0 mod phi.
    if (r0.size() != 1)
        throw std::logic_error("cyclotomic inverse: element is a zero divisor");
    for (auto& c : s0)
        c /= r0[0];
    RatPoly q, rem;
    rat_divmod(s0, phi, q, rem);
    return rem;
}

std::complex<double> evaluate_basis(std::span<const Int> coeffs, const Int& den, const RootContext& ctx)
{
    std::complex<long double> acc{0.0L, 0.0L};
    const long double step = std::numbers::pi_v<long double> / (2.0L * ctx.rank());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0)
            continue;
        const long double c = static_cast<long double>(coeffs[i]);
        acc += c * std::polar(1.0L, step * static_cast<long double>(i));
    }
    acc /= static_cast<long double>(den);
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

} // namespace

RootScalar::RootScalar(const RootContext& ctx) : ctx_(ctx)
{
    if (ctx_.mode == Mode::exact)
        num_.assign(static_cast<std::size_t>(ctx_.degree()), Int(0));
}

RootScalar RootScalar::from_int(std::int64_t value, const RootContext& ctx)
{
    RootScalar s(ctx);
    if (ctx.mode == Mode::exact) {
        s.num_[0] = value;
        s.normalize();
    } else {
        s.approx_ = {static_cast<double>(value), 0.0};
    }
    return s;
}

RootScalar RootScalar::from_poly(const LaurentPoly& p, const RootContext& ctx)
{
    const int n = ctx.order();
    if (ctx.mode == Mode::floating) {
        std::complex<long double> acc{0.0L, 0.0L};
        const long double step = std::numbers::pi_v<long double> / (2.0L * ctx.rank());
        for (const auto& [e, c] : p.terms()) {
            const int k = ((e % n) + n) % n;
            acc += static_cast<long double>(c) * std::polar(1.0L, step * k);
        }
        return from_complex({static_cast<double>(acc.real()), static_cast<double>(acc.imag())}, ctx);
    }
    std::vector<Int> coeffs(static_cast<std::size_t>(n), Int(0));
    for (const auto& [e, c] : p.terms())
        coeffs[static_cast<std::size_t>(((e % n) + n) % n)] += c;
    return from_exact(std::move(coeffs), Int(1), ctx);
}

RootScalar RootScalar::from_exact(std::vector<Int> coefficients, Int denominator, const RootContext& ctx)
{
    if (ctx.mode != Mode::exact)
        throw std::invalid_argument("from_exact needs an exact context");
    if (denominator == 0)
        throw std::domain_error("zero denominator");
    RootScalar s(ctx);
    const auto& phi = cyclotomic_polynomial(ctx.order());
    reduce_mod(coefficients, phi);
    s.num_ = std::move(coefficients);
    s.den_ = std::move(denominator);
    s.normalize();
    return s;
}

RootScalar RootScalar::from_complex(std::complex<double> value, const RootContext& ctx)
{
    RootScalar s(ctx.with_mode(Mode::floating));
    s.approx_ = value;
    return s;
}

bool RootScalar::is_zero() const
{
    if (ctx_.mode == Mode::floating)
        return std::abs(approx_) <= ctx_.tolerance;
    for (const auto& c : num_)
        if (c != 0)
            return false;
    return true;
}

RootScalar RootScalar::to_float() const
{
    return from_complex(approx_, ctx_);
}

void RootScalar::normalize()
{
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_)
            c = -c;
    }
    Int g = den_;
    for (const auto& c : num_) {
        if (c != 0)
            g = boost::multiprecision::gcd(g, c);
        if (g == 1)
            break;
    }
    bool all_zero = true;
    for (const auto& c : num_)
        all_zero = all_zero && c == 0;
    if (all_zero) {
        den_ = 1;
    } else if (g > 1) {
        for (auto& c : num_)
            c /= g;
        den_ /= g;
    }
    refresh_approx();
}

void RootScalar::refresh_approx()
{
    approx_ = evaluate_basis(num_, den_, ctx_);
}

void RootScalar::require_compatible(const RootScalar& o) const
{
    if (ctx_.level != o.ctx_.level || ctx_.mode != o.ctx_.mode)
        throw std::invalid_argument("RootScalar operands from different contexts");
}

RootScalar& RootScalar::operator+=(const RootScalar& o)
{
    require_compatible(o);
    if (ctx_.mode == Mode::floating) {
        approx_ += o.approx_;
        return *this;
    }
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i)
            num_[i] += o.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i)
            num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

RootScalar& RootScalar::operator-=(const RootScalar& o)
{
    return *this += -o;
}

RootScalar RootScalar::operator-() const
{
    RootScalar out = *this;
    if (ctx_.mode == Mode::floating) {
        out.approx_ = -approx_;
        return out;
    }
    for (auto& c : out.num_)
        c = -c;
    out.approx_ = -approx_;
    return out;
}

RootScalar& RootScalar::operator*=(const RootScalar& o)
{
    require_compatible(o);
    if (ctx_.mode == Mode::floating) {
        approx_ *= o.approx_;
        return *this;
    }
    const std::size_t d = num_.size();
    std::vector<Int> prod(2 * d - 1, Int(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (num_[i] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j)
            if (o.num_[j] != 0)
                prod[i + j] += num_[i] * o.num_[j];
    }
    reduce_mod(prod, cyclotomic_polynomial(ctx_.order()));
    num_ = std::move(prod);
    den_ *= o.den_;
    normalize();
    return *this;
}

RootScalar RootScalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    if (ctx_.mode == Mode::floating)
        return from_complex(1.0 / approx_, ctx_);
    const auto& phi_i = cyclotomic_polynomial(ctx_.order());
    RatPoly phi(phi_i.begin(), phi_i.end());
    RatPoly a(num_.begin(), num_.end());
    strip(a);
    RatPoly s = inverse_mod(a, phi);
    // (num/den)^-1 = den * s.
    Int common = 1;
    for (const auto& c : s)
        common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(c));
    std::vector<Int> coeffs(s.size(), Int(0));
    for (std::size_t i = 0; i < s.size(); ++i)
        coeffs[i] = boost::multiprecision::numerator(s[i]) * (common / boost::multiprecision::denominator(s[i])) * den_;
    return from_exact(std::move(coeffs), common, ctx_);
}

RootScalar& RootScalar::operator/=(const RootScalar& o)
{
    require_compatible(o);
    return *this *= o.inverse();
}

bool operator==(const RootScalar& a, const RootScalar& b)
{
    a.require_compatible(b);
    if (a.ctx_.mode == Mode::floating)
        return std::abs(a.approx_ - b.approx_) <= a.ctx_.tolerance;
    return a.den_ == b.den_ && a.num_ == b.num_;
}

bool approx_equal(const RootScalar& a, const RootScalar& b, double tol)
{
    return std::abs(a.to_complex() - b.to_complex()) <= tol;
}

std::string format_complex(std::complex<double> z)
{
    auto clean = [](double v) { return std::abs(v) < 5e-13 ? 0.0 : v; };
    const double re = clean(z.real());
    const double im = clean(z.imag());
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12f%c%.12f*i", re, im < 0 ? '-' : '+', std::abs(im));
    return buf;
}

std::string RootScalar::to_string() const
{
    return format_complex(approx_);
}

std::string RootScalar::exact_string() const
{
    if (ctx_.mode == Mode::floating)
        return to_string();
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << num_[i];
        if (i > 0)
            os << "*z^" << i;
    }
    if (first)
        os << "0";
    os << ")/" << den_;
    return os.str();
}

namespace
{

using Cplx = std::complex<double>;

/// Solve M x = b in place by Gaussian elimination with partial pivoting.
bool solve_complex(std::vector<std::vector<Cplx>> m, std::vector<Cplx>& b)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col]))
                piv = r;
        if (std::abs(m[piv][col]) < 1e-14)
            return false;
        std::swap(m[piv], m[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Cplx f = m[r][col] / m[col][col];
            if (f == Cplx(0.0))
                continue;
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= f * m[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        Cplx acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c)
            acc -= m[i][c] * b[c];
        b[i] = acc / m[i][i];
    }
    return true;
}

Cplx principal_sqrt(Cplx z)
{
    // Treat a value numerically on the negative real axis as lying on it (arg = pi).
    if (z.real() < 0 && std::abs(z.imag()) <= 1e-12 * std::abs(z))
        return {0.0, std::sqrt(-z.real())};
    return std::sqrt(z);
}

} // namespace

std::optional<RootScalar> exact_sqrt(const RootScalar& x)
{
    const RootContext& ctx = x.context();
    if (!x.is_exact())
        throw std::invalid_argument("exact_sqrt needs an exact scalar");
    if (x.is_zero())
        return x;
    // sqrt(num/den) = sqrt(num*den)/den, and num*den is an algebraic integer,
    // so any square root in the field lies in Z[z].
    const int n = ctx.order();
    const std::size_t d = static_cast<std::size_t>(ctx.degree());
    std::vector<Int> target(x.numerator().begin(), x.numerator().end());
    for (auto& c : target)
        c *= x.denominator();

    std::vector<int> units;
    for (int j = 1; j < n; ++j)
        if (std::gcd(j, n) == 1)
            units.push_back(j);
    // Embedding z -> z^j; conjugate pairs j, n-j. Representatives j < n/2.
    std::vector<int> reps;
    for (int j : units)
        if (j < n - j)
            reps.push_back(j);

    const long double step = 2.0L * std::numbers::pi_v<long double> / n;
    auto embed = [&](int j) {
        std::complex<long double> acc{0.0L, 0.0L};
        for (std::size_t i = 0; i < d; ++i)
            if (target[i] != 0)
                acc += static_cast<long double>(target[i]) * std::polar(1.0L, step * ((static_cast<long long>(i) * j) % n));
        return Cplx{static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    };

    std::vector<Cplx> roots;
    for (int j : reps)
        roots.push_back(principal_sqrt(embed(j)));

    std::vector<std::vector<Cplx>> vander(units.size(), std::vector<Cplx>(d));
    for (std::size_t row = 0; row < units.size(); ++row)
        for (std::size_t i = 0; i < d; ++i)
            vander[row][i] = std::polar(1.0, static_cast<double>(step * ((static_cast<long long>(i) * units[row]) % n)));

    const std::size_t free_signs = reps.size() - 1; // the identity embedding keeps the principal root
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_signs); ++mask) {
        std::vector<Cplx> rhs(units.size());
        for (std::size_t row = 0; row < units.size(); ++row) {
            const int j = units[row];
            const int rep = std::min(j, n - j);
            const std::size_t ri = static_cast<std::size_t>(std::find(reps.begin(), reps.end(), rep) - reps.begin());
            Cplx y = roots[ri];
            if (ri > 0 && ((mask >> (ri - 1)) & 1u))
                y = -y;
            rhs[row] = (j == rep) ? y : std::conj(y);
        }
        if (!solve_complex(vander, rhs))
            return std::nullopt;
        std::vector<Int> cand(d);
        bool integral = true;
        for (std::size_t i = 0; i < d && integral; ++i) {
            const double re = rhs[i].real();
            const double rounded = std::round(re);
            if (std::abs(re - rounded) > 1e-6 * std::max(1.0, std::abs(re)) || std::abs(rhs[i].imag()) > 1e-6 * std::max(1.0, std::abs(re)))
                integral = false;
            else
                cand[i] = Int(static_cast<long long>(rounded));
        }
        if (!integral)
            continue;
        RootScalar y = RootScalar::from_exact(cand, Int(1), ctx);
        RootScalar t = RootScalar::from_exact(target, Int(1), ctx);
        if (y * y == t)
            return RootScalar::from_exact(std::move(cand), x.denominator(), ctx);
    }
    return std::nullopt;
}

RootScalar scalar_power(const RootScalar& x, int numerator, int denominator)
{
    if (denominator != 1 && denominator != 2)
        throw std::invalid_argument("exponent denominator must be 1 or 2");
    if (denominator == 2 && numerator % 2 == 0) {
        numerator /= 2;
        denominator = 1;
    }
    if (numerator < 0 && x.is_zero())
        throw ZeroToNegativePower("zero raised to a negative power");
    const RootContext& ctx = x.context();
    auto int_power = [&](RootScalar base, int e) {
        if (e < 0) {
            base = base.inverse();
            e = -e;
        }
        RootScalar result = RootScalar::from_int(1, base.context());
        while (e > 0) {
            if (e & 1)
                result *= base;
            e >>= 1;
            if (e > 0)
                base *= base;
        }
        return result;
    };
    if (denominator == 1)
        return int_power(x, numerator);
    if (x.is_exact()) {
        auto root = exact_sqrt(x);
        if (!root)
            throw InexactHalfPower("no square root of " + x.exact_string() + " in Q(zeta_" + std::to_string(ctx.order()) + ")");
        return int_power(*root, numerator);
    }
    return int_power(RootScalar::from_complex(principal_sqrt(x.to_complex()), ctx), numerator);
}

RootScalar poly_eval_at_root(const LaurentPoly& p, const RootContext& ctx)
{
    return RootScalar::from_poly(p, ctx);
}

RootScalar quantum_integer(int m, const RootContext& ctx)
{
    return RootScalar::from_poly(quantum_integer(m), ctx);
}

} // namespace qinv
