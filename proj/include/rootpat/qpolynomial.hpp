#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rootpat {

/// Integer-coefficient polynomial in a single formal variable.  The
/// variable tag keeps counting polynomials (variable t) apart from the
/// order/degree polynomials in the field-size parameter q.
class QPolynomial {
public:
    enum class Var { q, t };

    QPolynomial() : var_(Var::q) {}
    explicit QPolynomial(Var v) : var_(v) {}
    QPolynomial(Var v, std::vector<long long> ascending_coeffs)
        : var_(v), c_(std::move(ascending_coeffs)) {
        trim();
    }

    /// c * x^e
    static QPolynomial monomial(Var v, int e, long long c = 1);
    /// q^e * (q - 1), the standard shape of the midafi counts.
    static QPolynomial count_polynomial(int e);

    Var var() const { return var_; }
    int degree() const { return int(c_.size()) - 1; }  // -1 for zero polynomial
    long long coeff(int e) const {
        return (e >= 0 && e < int(c_.size())) ? c_[e] : 0;
    }
    const std::vector<long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    bool operator==(const QPolynomial& o) const = default;

    /// Ascending rendering, e.g. "1 + 24t + 55t^2 + 24t^3 + t^4".
    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    Var var_;
    std::vector<long long> c_;  // ascending, no trailing zeros
};

/// Compact table renderings: "q^8(q-1)" and "q^23".
std::string format_count(int exponent);
std::string format_power(int exponent);

}  // namespace rootpat
