#pragma once

#include <map>
#include <vector>

#include "klmasks/perm.hpp"
#include "klmasks/poly.hpp"

namespace klmasks {

// Element of the Hecke algebra of S_n written in the T basis. Coefficients
// are Laurent polynomials in v = q^{1/2}.
class Hecke {
public:
    Hecke() = default;
    explicit Hecke(int n) : n_(n) {}
    static Hecke t(const Perm& w);

    int n() const { return n_; }
    const std::map<Perm, LPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LPoly coeff(const Perm& w) const;
    void add(const Perm& w, const LPoly& c);
    // Terms ordered by length, then lexicographically.
    std::vector<std::pair<Perm, LPoly>> sorted_terms() const;

    Hecke& operator+=(const Hecke& o);
    Hecke& operator-=(const Hecke& o);
    Hecke& operator*=(const LPoly& c);
    friend Hecke operator+(Hecke a, const Hecke& b) { return a += b; }
    friend Hecke operator-(Hecke a, const Hecke& b) { return a -= b; }
    friend Hecke operator*(Hecke a, const LPoly& c) { return a *= c; }
    friend Hecke operator*(const Hecke& a, const Hecke& b);
    friend bool operator==(const Hecke& a, const Hecke& b) = default;

private:
    int n_ = 0;
    std::map<Perm, LPoly> terms_;
};

Hecke t_mul_generator(const Hecke& h, int i, Side side);
Hecke t_element(const Perm& w);
// Product T_{w_1}...T_{w_p}; rejects non-reduced words.
Hecke t_word(int n, const Word& word);
Hecke bar(const Hecke& h);

// P_{x,w}(q), exponents in q.
LPoly kl_polynomial(const Perm& x, const Perm& w);
// mu(x,w): coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}, zero when the
// length difference is even.
std::int64_t kl_mu(const Perm& x, const Perm& w);

Hecke cprime_element(const Perm& w);
Hecke bprime_element(const Perm& w);
// Coefficients of h in the B' basis.
std::map<Perm, LPoly> expand_in_bprime(const Hecke& h);
Hecke from_bprime(int n, const std::map<Perm, LPoly>& coeffs);

}  // namespace klmasks
