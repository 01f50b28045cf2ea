#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "elastsym/errors.hpp"

namespace elastsym {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Hard cap on jet variables; the collar problem needs n + (n-1) <= 7.
inline constexpr int kMaxJetVars = 8;

using Exponents = std::array<std::uint8_t, kMaxJetVars>;

/// Dense indexing tables for truncated multivariate Taylor coefficients:
/// all multi-indices of total degree <= order in n_vars variables, ranked
/// in graded lexicographic order. Shapes are immutable and canonical, so
/// two jets agree in shape iff they hold the same pointer.
class JetShape {
public:
    struct MulTriple {
        std::int32_t a, b, out;
    };

    static std::shared_ptr<const JetShape> get(int n_vars, int order);

    int n_vars() const noexcept { return n_vars_; }
    int order() const noexcept { return order_; }
    int size() const noexcept { return static_cast<int>(exponents_.size()); }

    const Exponents& exponents(int rank) const { return exponents_[rank]; }
    int degree(int rank) const { return degree_[rank]; }

    /// Rank of a multi-index, or -1 when it exceeds the order.
    int rank_of(const Exponents& e) const;

    std::span<const MulTriple> mul_table() const { return mul_table_; }

private:
    JetShape(int n_vars, int order);

    static std::uint64_t pack(const Exponents& e);

    int n_vars_ = 0;
    int order_ = 0;
    std::vector<Exponents> exponents_;
    std::vector<int> degree_;
    std::unordered_map<std::uint64_t, int> rank_by_key_;
    std::vector<MulTriple> mul_table_;
};

using JetShapePtr = std::shared_ptr<const JetShape>;

/// Truncated multivariate Taylor expansion around a base point, with complex
/// coefficients, in the offsets from that base point. Arithmetic is exact up
/// to the truncation order. Every jet tracks how many of its coefficient
/// degrees are still trustworthy (`valid_order`); taking a partial derivative
/// consumes one degree, and binary operations propagate the minimum.
class Jet {
public:
    Jet() = default;

    static Jet zeros(JetShapePtr shape);
    static Jet constant(JetShapePtr shape, Complex value);
    /// The coordinate function of variable `var`: base value plus unit offset.
    static Jet coordinate(JetShapePtr shape, int var, double base_value);

    bool is_null() const noexcept { return !shape_; }
    const JetShapePtr& shape() const noexcept { return shape_; }
    int n_vars() const noexcept { return shape_ ? shape_->n_vars() : 0; }
    int order() const noexcept { return shape_ ? shape_->order() : -1; }
    int valid_order() const noexcept { return valid_order_; }

    /// Value at the base point (zero multi-index coefficient).
    Complex value() const;

    Complex coeff(std::span<const int> exps) const;
    void set_coeff(std::span<const int> exps, Complex v);

    Jet operator-() const;
    Jet& operator+=(const Jet& rhs);
    Jet& operator-=(const Jet& rhs);
    Jet& operator*=(Complex s);

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, Complex s) { return a *= s; }
    friend Jet operator*(Complex s, Jet a) { return a *= s; }
    friend Jet operator*(Jet a, double s) { return a *= Complex(s); }
    friend Jet operator*(double s, Jet a) { return a *= Complex(s); }
    friend Jet operator*(const Jet& a, const Jet& b) { return mul(a, b); }

    static Jet mul(const Jet& a, const Jet& b);

    /// d/d(var); the result's usable order drops by one.
    Jet partial(int var) const;

    /// Multiplicative inverse; requires a nonzero constant term.
    /// `what` names the quantity for the singularity diagnostic.
    Jet inverse(std::string_view what = "jet") const;

    /// Square root; requires a positive real constant term.
    Jet sqrt(std::string_view what = "jet") const;

    /// Complex conjugate (coefficient-wise; variables are real).
    Jet conj() const;

    /// Re-expansion around base + delta, treating the stored coefficients as
    /// an exact polynomial. `deltas` has one entry per variable.
    Jet shifted(std::span<const double> deltas) const;

    /// Same coefficients on a (usually smaller) storage order.
    Jet reshaped(int new_order) const;

    /// Lower the usable order (coefficients above it are zeroed).
    Jet truncated(int new_valid_order) const;

    /// Max coefficient magnitude over the usable degrees.
    double max_abs() const;

    /// True when every usable coefficient is below tol * scale.
    bool near_zero(double tol, double scale) const;

    std::span<const Complex> raw() const noexcept { return coeffs_; }

private:
    explicit Jet(JetShapePtr shape);

    void require_same_shape(const Jet& other) const;
    void zero_above_valid();

    JetShapePtr shape_;
    int valid_order_ = -1;
    std::vector<Complex> coeffs_;
};

/// Default relative tolerance for "this jet is zero".
inline constexpr double kJetZeroTol = 1e-12;

} // namespace elastsym
