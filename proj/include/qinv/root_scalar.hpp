#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qinv/laurent.hpp"

namespace qinv
{

enum class Mode
{
    exact,
    floating
};

Mode parse_mode(const std::string& text);
const char* to_string(Mode mode) noexcept;

/**
 * Level-k evaluation point: A = exp(i*pi/(2r)), r = k + 2, a primitive
 * 4r-th root of unity.
 */
struct RootContext
{
    int level = 1;
    Mode mode = Mode::exact;
    double tolerance = 1e-9;

    RootContext() = default;
    RootContext(int level_, Mode mode_ = Mode::exact, double tolerance_ = 1e-9);

    int rank() const noexcept { return level + 2; }
    int order() const noexcept { return 4 * rank(); }
    /// Degree of the 4r-th cyclotomic polynomial.
    int degree() const;
    std::complex<double> root() const;

    RootContext with_mode(Mode m) const;

    friend bool operator==(const RootContext& a, const RootContext& b) noexcept
    {
        return a.level == b.level && a.mode == b.mode;
    }
};

/// Coefficients of the n-th cyclotomic polynomial, constant term first. Cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

/**
 * Element of Q(zeta_{4r}) at a fixed level.
 *
 * Exact mode keeps an integer coefficient vector over the power basis
 * 1, z, ..., z^{d-1} (d = deg Phi_{4r}) reduced modulo Phi_{4r}, plus a
 * positive integer denominator coprime to the content; the representation is
 * canonical, so == is exact equality. Float mode keeps only a complex double.
 */
class RootScalar
{
  public:
    using Int = boost::multiprecision::cpp_int;

    explicit RootScalar(const RootContext& ctx);

    static RootScalar from_int(std::int64_t value, const RootContext& ctx);
    static RootScalar from_poly(const LaurentPoly& p, const RootContext& ctx);
    /// `coefficients` are over 1, z, z^2, ... of any length; reduced here.
    static RootScalar from_exact(std::vector<Int> coefficients, Int denominator, const RootContext& ctx);
    static RootScalar from_complex(std::complex<double> value, const RootContext& ctx);

    const RootContext& context() const noexcept { return ctx_; }
    bool is_exact() const noexcept { return ctx_.mode == Mode::exact; }
    bool is_zero() const;

    std::complex<double> to_complex() const noexcept { return approx_; }
    /// Same value in float mode.
    RootScalar to_float() const;

    std::span<const Int> numerator() const noexcept { return num_; }
    const Int& denominator() const noexcept { return den_; }

    RootScalar& operator+=(const RootScalar& o);
    RootScalar& operator-=(const RootScalar& o);
    RootScalar& operator*=(const RootScalar& o);
    RootScalar& operator/=(const RootScalar& o);
    friend RootScalar operator+(RootScalar a, const RootScalar& b) { return a += b; }
    friend RootScalar operator-(RootScalar a, const RootScalar& b) { return a -= b; }
    friend RootScalar operator*(RootScalar a, const RootScalar& b) { return a *= b; }
    friend RootScalar operator/(RootScalar a, const RootScalar& b) { return a /= b; }
    RootScalar operator-() const;

    /// Throws std::domain_error on zero.
    RootScalar inverse() const;

    /// Exact mode: identical canonical forms. Float mode: |a-b| <= tolerance.
    friend bool operator==(const RootScalar& a, const RootScalar& b);

    /// `re+im*i` with 12 digits after the point.
    std::string to_string() const;
    /// `(c0 + c1*z + ...)/den` over z = exp(i*pi/(2r)); float mode falls back to to_string().
    std::string exact_string() const;

  private:
    void normalize();
    void refresh_approx();
    void require_compatible(const RootScalar& o) const;

    RootContext ctx_;
    std::vector<Int> num_;
    Int den_ = 1;
    std::complex<double> approx_{0.0, 0.0};
};

bool approx_equal(const RootScalar& a, const RootScalar& b, double tol);

/// Square root in Z[z]/Q(z) whose value is the principal complex square root, if one exists.
std::optional<RootScalar> exact_sqrt(const RootScalar& x);

/**
 * x^(numerator/denominator) with denominator 1 or 2.
 * Integer powers are exact in exact mode. Half powers use the principal branch;
 * in exact mode they succeed only when x is a square in the field.
 * Throws ZeroToNegativePower, InexactHalfPower.
 */
RootScalar scalar_power(const RootScalar& x, int numerator, int denominator = 1);

/// [m] as a polynomial.
inline LaurentPoly quantum_integer_poly(int m) { return quantum_integer(m); }
/// [m] evaluated at the level root.
RootScalar quantum_integer(int m, const RootContext& ctx);
RootScalar poly_eval_at_root(const LaurentPoly& p, const RootContext& ctx);

/// Complex text form shared by every printed scalar.
std::string format_complex(std::complex<double> z);

inline std::ostream& operator<<(std::ostream& os, const RootScalar& x) { return os << x.to_string(); }

} // namespace qinv
