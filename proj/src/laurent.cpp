#include "qinv/laurent.hpp"

#include <numeric>
#include <sstream>

#include "qinv/errors.hpp"

namespace qinv
{

namespace checked
{
std::int64_t add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("Laurent coefficient overflow in addition");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("Laurent coefficient overflow in multiplication");
    return r;
}
} // namespace checked

LaurentPoly::LaurentPoly(Coeff constant)
{
    if (constant != 0)
        coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent)
{
    LaurentPoly p;
    if (c != 0) {
        p.low_ = exponent;
        p.coeffs_.push_back(c);
    }
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Coeff>>& terms)
{
    LaurentPoly p;
    for (const auto& [e, c] : terms)
        p += monomial(c, e);
    return p;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const noexcept
{
    if (coeffs_.empty() || exponent < low_ || exponent > max_exponent())
        return 0;
    return coeffs_[exponent - low_];
}

std::size_t LaurentPoly::term_count() const noexcept
{
    std::size_t n = 0;
    for (auto c : coeffs_)
        n += (c != 0);
    return n;
}

std::vector<std::pair<int, LaurentPoly::Coeff>> LaurentPoly::terms() const
{
    std::vector<std::pair<int, Coeff>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
}

void LaurentPoly::trim()
{
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0)
        ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0)
        --last;
    if (first > 0 || last < coeffs_.size()) {
        coeffs_ = std::vector<Coeff>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                     coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
        low_ += static_cast<int>(first);
    }
}

void LaurentPoly::add_scaled(const LaurentPoly& other, Coeff c, int shift)
{
    if (other.is_zero() || c == 0)
        return;
    const int olow = other.low_ + shift;
    const int ohigh = other.max_exponent() + shift;
    if (is_zero()) {
        low_ = olow;
        coeffs_.assign(other.coeffs_.size(), 0);
    } else {
        const int high = std::max(max_exponent(), ohigh);
        const int low = std::min(low_, olow);
        if (low < low_)
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - low), 0);
        low_ = low;
        coeffs_.resize(static_cast<std::size_t>(high - low_ + 1), 0);
    }
    const std::size_t off = static_cast<std::size_t>(olow - low_);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[off + i] = checked::add(coeffs_[off + i], checked::mul(c, other.coeffs_[i]));
    trim();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other)
{
    add_scaled(other, 1, 0);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other)
{
    add_scaled(other, -1, 0);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out;
    if (a.is_zero() || b.is_zero())
        return out;
    if (a.coeffs_.size() == 1 || b.coeffs_.size() == 1) {
        // monomial times polynomial: a shift and a scale
        const LaurentPoly& mono = a.coeffs_.size() == 1 ? a : b;
        const LaurentPoly& other = a.coeffs_.size() == 1 ? b : a;
        out.low_ = a.low_ + b.low_;
        out.coeffs_.reserve(other.coeffs_.size());
        for (auto c : other.coeffs_)
            out.coeffs_.push_back(checked::mul(c, mono.coeffs_[0]));
        return out;
    }
    out.low_ = a.low_ + b.low_;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out.coeffs_[i + j] =
                checked::add(out.coeffs_[i + j], checked::mul(a.coeffs_[i], b.coeffs_[j]));
    }
    out.trim();
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other)
{
    *this = *this * other;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out = *this;
    for (auto& c : out.coeffs_)
        c = checked::mul(c, -1);
    return out;
}

LaurentPoly LaurentPoly::shifted(int e) const
{
    LaurentPoly out = *this;
    if (!out.is_zero())
        out.low_ += e;
    return out;
}

LaurentPoly LaurentPoly::inverted_variable() const
{
    LaurentPoly out;
    if (is_zero())
        return out;
    out.low_ = -max_exponent();
    out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const
{
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1u)
            result *= base;
        e >>= 1u;
        if (e > 0)
            base *= base;
    }
    return result;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const
{
    if (divisor.is_zero())
        return std::nullopt;
    if (is_zero())
        return LaurentPoly();
    // Long division from the top: both are ordinary polynomials after shifting.
    std::vector<Coeff> rem = coeffs_;
    const auto& d = divisor.coeffs_;
    const Coeff lead = d.back();
    if (rem.size() < d.size())
        return std::nullopt;
    std::vector<Coeff> quot(rem.size() - d.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Coeff top = rem[i + d.size() - 1];
        if (top == 0)
            continue;
        if (top % lead != 0)
            return std::nullopt;
        const Coeff q = top / lead;
        quot[i] = q;
        for (std::size_t j = 0; j < d.size(); ++j)
            rem[i + j] = checked::add(rem[i + j], checked::mul(-q, d[j]));
    }
    for (auto c : rem)
        if (c != 0)
            return std::nullopt;
    LaurentPoly out;
    out.low_ = low_ - divisor.low_;
    out.coeffs_ = std::move(quot);
    out.trim();
    return out;
}

std::string LaurentPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        if (!first)
            os << " + ";
        first = false;
        if (e == 0)
            os << c;
        else
            os << c << "*A^" << e;
    }
    return os.str();
}

std::string LaurentPoly::to_t_string() const
{
    if (is_zero())
        return "0";
    // A^e = t^(-e/4); list by ascending power of t.
    auto ts = terms();
    std::ostringstream os;
    bool first = true;
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        const int num = -it->first;
        const int g = std::gcd(num < 0 ? -num : num, 4);
        const int n = num / (g == 0 ? 1 : g);
        const int d = 4 / (g == 0 ? 1 : g);
        if (!first)
            os << " + ";
        first = false;
        if (num == 0)
            os << it->second;
        else if (d == 1)
            os << it->second << "*t^" << n;
        else
            os << it->second << "*t^(" << n << "/" << d << ")";
    }
    return os.str();
}

LaurentPoly loop_value()
{
    return LaurentPoly::from_terms({{-2, -1}, {2, -1}});
}

LaurentPoly quantum_integer(int m)
{
    LaurentPoly out;
    if (m == 0)
        return out;
    const int sign = m < 0 ? -1 : 1;
    const int n = m < 0 ? -m : m;
    for (int j = 0; j < n; ++j)
        out += LaurentPoly::monomial(sign, 2 * (n - 1) - 4 * j);
    return out;
}

} // namespace qinv
