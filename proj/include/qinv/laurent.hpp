#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qinv
{

/**
 * Integer Laurent polynomial in the bracket variable A.
 *
 * Stored densely as a lowest exponent plus a coefficient run with no zero
 * coefficient at either end, so two equal polynomials have identical storage.
 * Coefficient arithmetic is overflow-checked and throws ArithmeticOverflow.
 */
class LaurentPoly
{
  public:
    using Coeff = std::int64_t;

    LaurentPoly() = default;
    LaurentPoly(Coeff constant); // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(Coeff c, int exponent);
    /// A^e.
    static LaurentPoly A(int exponent = 1) { return monomial(1, exponent); }
    static LaurentPoly from_terms(const std::vector<std::pair<int, Coeff>>& terms);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int min_exponent() const noexcept { return low_; }
    int max_exponent() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    Coeff coeff(int exponent) const noexcept;
    std::size_t term_count() const noexcept;
    /// Nonzero terms sorted by ascending exponent.
    std::vector<std::pair<int, Coeff>> terms() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    /// this += c * A^shift * other, without building the temporary.
    void add_scaled(const LaurentPoly& other, Coeff c, int shift);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Multiply by A^e.
    LaurentPoly shifted(int e) const;
    /// p(A) -> p(A^-1).
    LaurentPoly inverted_variable() const;
    LaurentPoly pow(unsigned e) const;

    /// Quotient when `divisor` divides exactly in Z[A, A^-1], otherwise nullopt.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

    /// `c*A^e` terms joined by " + "; the zero polynomial renders as "0".
    std::string to_string() const;
    /// Same polynomial under A = t^(-1/4); exponents of t printed as reduced fractions.
    std::string to_t_string() const;

    /// Coefficient run from min_exponent(); empty for zero.
    const std::vector<Coeff>& dense() const noexcept { return coeffs_; }

  private:
    void trim();

    int low_ = 0;
    std::vector<Coeff> coeffs_;
};

/// Loop value -A^2 - A^-2.
LaurentPoly loop_value();

/// [m] = (A^{2m} - A^{-2m}) / (A^2 - A^{-2}); [0] = 0.
LaurentPoly quantum_integer(int m);

namespace checked
{
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
} // namespace checked

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

} // namespace qinv
