#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tubings {

/// Integer polynomial in t, coefficients in ascending degree, no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coefficients);
    static IntPolynomial monomial(std::int64_t c, std::size_t degree);

    const std::vector<std::int64_t>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::int64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    IntPolynomial& operator+=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    /// Multiplies by t^k.
    IntPolynomial shifted(std::size_t k) const;

    /// "1 + 3t + 2t^2"; "0" for the zero polynomial.
    std::string to_string() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<std::int64_t> c_;
};

}  // namespace tubings
