#include "klmasks/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace klmasks {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("LPoly coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("LPoly coefficient overflow");
    return r;
}

LPoly::LPoly(std::int64_t c)
{
    if (c != 0)
        coeffs_.push_back(c);
}

LPoly LPoly::monomial(std::int64_t coeff, int exponent)
{
    LPoly p(coeff);
    if (!p.is_zero())
        p.low_ = exponent;
    return p;
}

std::int64_t LPoly::operator[](int e) const
{
    if (coeffs_.empty() || e < low_ || e > high())
        return 0;
    return coeffs_[e - low_];
}

std::vector<std::pair<int, std::int64_t>> LPoly::terms() const
{
    std::vector<std::pair<int, std::int64_t>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
}

void LPoly::normalize()
{
    std::size_t a = 0;
    while (a < coeffs_.size() && coeffs_[a] == 0)
        ++a;
    if (a == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    std::size_t b = coeffs_.size();
    while (coeffs_[b - 1] == 0)
        --b;
    if (a > 0 || b < coeffs_.size()) {
        coeffs_ = std::vector<std::int64_t>(coeffs_.begin() + a, coeffs_.begin() + b);
        low_ += static_cast<int>(a);
    }
}

void LPoly::add_scaled(const LPoly& o, std::int64_t c, int shift)
{
    if (o.is_zero() || c == 0)
        return;
    if (&o == this) {
        LPoly copy = o;
        add_scaled(copy, c, shift);
        return;
    }
    int olow = o.low_ + shift;
    int ohigh = o.high() + shift;
    if (is_zero()) {
        low_ = olow;
        coeffs_.assign(o.coeffs_.size(), 0);
    } else if (olow < low_ || ohigh > high()) {
        int nl = std::min(low_, olow);
        int nh = std::max(high(), ohigh);
        std::vector<std::int64_t> nc(nh - nl + 1, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            nc[low_ - nl + i] = coeffs_[i];
        coeffs_ = std::move(nc);
        low_ = nl;
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        auto& slot = coeffs_[olow - low_ + i];
        slot = checked_add(slot, checked_mul(c, o.coeffs_[i]));
    }
    normalize();
}

LPoly& LPoly::operator+=(const LPoly& o)
{
    add_scaled(o, 1, 0);
    return *this;
}

LPoly& LPoly::operator-=(const LPoly& o)
{
    add_scaled(o, -1, 0);
    return *this;
}

LPoly LPoly::operator-() const
{
    LPoly r;
    r.add_scaled(*this, -1, 0);
    return r;
}

LPoly operator*(const LPoly& a, const LPoly& b)
{
    LPoly r;
    if (a.is_zero() || b.is_zero())
        return r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    r.normalize();
    return r;
}

LPoly LPoly::shifted(int k) const
{
    LPoly r = *this;
    if (!r.is_zero())
        r.low_ += k;
    return r;
}

LPoly LPoly::conj() const
{
    LPoly r;
    if (is_zero())
        return r;
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    r.low_ = -high();
    return r;
}

LPoly LPoly::dilate(int k) const
{
    if (k <= 0)
        throw std::invalid_argument("dilate: factor must be positive");
    LPoly r;
    for (auto [e, c] : terms())
        r.add_scaled(LPoly(c), 1, e * k);
    return r;
}

LPoly LPoly::contract(int k) const
{
    if (k <= 0)
        throw std::invalid_argument("contract: factor must be positive");
    LPoly r;
    for (auto [e, c] : terms()) {
        if (e % k != 0)
            throw std::domain_error("contract: exponent not divisible");
        r.add_scaled(LPoly(c), 1, e / k);
    }
    return r;
}

bool LPoly::nonneg() const
{
    for (auto c : coeffs_)
        if (c < 0)
            return false;
    return true;
}

std::int64_t LPoly::eval_at_one() const
{
    std::int64_t s = 0;
    for (auto c : coeffs_)
        s = checked_add(s, c);
    return s;
}

namespace {

std::string render(const LPoly& p, const std::string& var, int denom)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (auto [e, c] : p.terms()) {
        std::string mono;
        if (e != 0) {
            mono = var;
            if (e % denom == 0) {
                int k = e / denom;
                if (k != 1)
                    mono += "^" + (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
            } else {
                mono += "^(" + std::to_string(e) + "/" + std::to_string(denom) + ")";
            }
        }
        std::int64_t a = c < 0 ? -c : c;
        std::string term = mono.empty() ? std::to_string(a) : (a == 1 ? mono : std::to_string(a) + mono);
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? "-" : "+") + term;
    }
    return out;
}

}  // namespace

std::string LPoly::str(const std::string& var) const { return render(*this, var, 1); }

std::string LPoly::str_half_q() const { return render(*this, "q", 2); }

}  // namespace klmasks
