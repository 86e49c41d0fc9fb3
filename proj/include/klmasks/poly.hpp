#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace klmasks {

// Integer Laurent polynomial with dense storage from the lowest nonzero
// exponent. The meaning of the variable is up to the caller: Hecke
// coefficients use v = q^{1/2}, Kazhdan-Lusztig polynomials use q.
class LPoly {
public:
    LPoly() = default;
    LPoly(std::int64_t c);  // NOLINT: constants convert implicitly
    static LPoly monomial(std::int64_t coeff, int exponent);

    bool is_zero() const { return coeffs_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t operator[](int e) const;
    // Exponents with nonzero coefficient, ascending.
    std::vector<std::pair<int, std::int64_t>> terms() const;

    LPoly& operator+=(const LPoly& o);
    LPoly& operator-=(const LPoly& o);
    LPoly operator-() const;
    friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
    friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
    friend LPoly operator*(const LPoly& a, const LPoly& b);
    friend bool operator==(const LPoly& a, const LPoly& b) = default;

    // this += c * x^shift * o, without temporaries.
    void add_scaled(const LPoly& o, std::int64_t c, int shift);
    LPoly shifted(int k) const;
    // x -> x^{-1}.
    LPoly conj() const;
    // Substitute x -> x^k for k > 0 (e.g. q -> v^2).
    LPoly dilate(int k) const;
    // Inverse of dilate; throws if some exponent is not divisible by k.
    LPoly contract(int k) const;
    bool nonneg() const;
    std::int64_t eval_at_one() const;

    // "1+2q+q^2" style, variable name given.
    std::string str(const std::string& var = "q") const;
    // Render a polynomial in v = q^{1/2} using powers of q (half-integral
    // exponents as q^(k/2)).
    std::string str_half_q() const;

private:
    void normalize();
    int low_ = 0;
    std::vector<std::int64_t> coeffs_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace klmasks
