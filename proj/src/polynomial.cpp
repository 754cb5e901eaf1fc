#include "tubings/polynomial.hpp"

namespace tubings {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::monomial(std::int64_t c, std::size_t degree) {
    std::vector<std::int64_t> v(degree + 1, 0);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<std::int64_t> r(k, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        std::int64_t v = c_[i];
        if (v == 0) continue;
        if (!out.empty()) {
            out += v < 0 ? " - " : " + ";
            if (v < 0) v = -v;
        } else if (v < 0) {
            out += "-";
            v = -v;
        }
        if (i == 0 || v != 1) out += std::to_string(v);
        if (i >= 1) out += "t";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace tubings
