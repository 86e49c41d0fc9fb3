#include "klmasks/hecke.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace klmasks {

namespace {

const LPoly kQ = LPoly::monomial(1, 2);
const LPoly kQm1 = LPoly::monomial(1, 2) - LPoly(1);

void check_rank(const Hecke& a, const Hecke& b)
{
    if (a.n() != b.n())
        throw std::invalid_argument("Hecke elements of different rank");
}

}  // namespace

Hecke Hecke::t(const Perm& w)
{
    Hecke h(w.n());
    h.add(w, LPoly(1));
    return h;
}

LPoly Hecke::coeff(const Perm& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? LPoly() : it->second;
}

void Hecke::add(const Perm& w, const LPoly& c)
{
    if (w.n() != n_)
        throw std::invalid_argument("permutation rank differs from Hecke rank");
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

std::vector<std::pair<Perm, LPoly>> Hecke::sorted_terms() const
{
    std::vector<std::pair<Perm, LPoly>> out(terms_.begin(), terms_.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.first.length() < b.first.length(); });
    return out;
}

Hecke& Hecke::operator+=(const Hecke& o)
{
    check_rank(*this, o);
    for (const auto& [w, c] : o.terms_)
        add(w, c);
    return *this;
}

Hecke& Hecke::operator-=(const Hecke& o)
{
    check_rank(*this, o);
    for (const auto& [w, c] : o.terms_)
        add(w, -c);
    return *this;
}

Hecke& Hecke::operator*=(const LPoly& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, p] : terms_)
        p = p * c;
    return *this;
}

Hecke t_mul_generator(const Hecke& h, int i, Side side)
{
    Hecke out(h.n());
    for (const auto& [x, c] : h.terms()) {
        Perm y = side == Side::right ? x.times_s(i) : x.s_times(i);
        bool up = side == Side::right ? !x.right_descent(i) : !x.left_descent(i);
        if (up) {
            out.add(y, c);
        } else {
            out.add(x, c * kQm1);
            out.add(y, c * kQ);
        }
    }
    return out;
}

Hecke operator*(const Hecke& a, const Hecke& b)
{
    check_rank(a, b);
    Hecke out(a.n());
    for (const auto& [y, c] : b.terms()) {
        Hecke part = a;
        for (int i : reduced_word(y))
            part = t_mul_generator(part, i, Side::right);
        out += part * c;
    }
    return out;
}

Hecke t_element(const Perm& w) { return Hecke::t(w); }

Hecke t_word(int n, const Word& word)
{
    if (!is_reduced(n, word))
        throw std::invalid_argument("t_word: word is not reduced");
    return Hecke::t(Perm::from_word(n, word));
}

namespace {

class BarCache {
public:
    const Hecke& get(const Perm& x)
    {
        std::lock_guard lock(mu_);
        return get_locked(x);
    }

private:
    const Hecke& get_locked(const Perm& x)
    {
        auto it = cache_.find(x);
        if (it != cache_.end())
            return it->second;
        Hecke val(x.n());
        if (x.length() == 0) {
            val = Hecke::t(x);
        } else {
            int s = descents(x, Side::right).front();
            Hecke prev = get_locked(x.times_s(s));
            // bar(T_s) = q^{-1} T_s + (q^{-1} - 1) T_1
            val = t_mul_generator(prev, s, Side::right) * LPoly::monomial(1, -2);
            val += prev * (LPoly::monomial(1, -2) - LPoly(1));
        }
        return cache_.emplace(x, std::move(val)).first->second;
    }

    std::mutex mu_;
    std::map<Perm, Hecke> cache_;
};

BarCache& bar_cache()
{
    static BarCache c;
    return c;
}

}  // namespace

Hecke bar(const Hecke& h)
{
    Hecke out(h.n());
    for (const auto& [x, c] : h.terms()) {
        const Hecke& bx = bar_cache().get(x);
        LPoly cc = c.conj();
        for (const auto& [y, d] : bx.terms())
            out.add(y, cc * d);
    }
    return out;
}

namespace {

// Kazhdan-Lusztig polynomials of S_n by the standard recursion on a right
// descent, memoized per w.
class KLTable {
public:
    explicit KLTable(int n) : n_(n), elems_(all_perms(n))
    {
        int N = static_cast<int>(elems_.size());
        fact_.assign(n + 1, 1);
        for (int i = 1; i <= n; ++i)
            fact_[i] = fact_[i - 1] * i;
        pos_.assign(N, 0);
        len_.resize(N);
        for (int k = 0; k < N; ++k) {
            pos_[lehmer(elems_[k])] = k;
            len_[k] = elems_[k].length();
        }
        rmul_.assign(n, std::vector<int>(N));
        for (int s = 1; s < n; ++s)
            for (int k = 0; k < N; ++k)
                rmul_[s][k] = index(elems_[k].times_s(s));
        cols_.resize(N);
        mus_.resize(N);
    }

    int index(const Perm& p) const { return pos_[lehmer(p)]; }

    const std::vector<LPoly>& column(int w)
    {
        std::lock_guard lock(mu_);
        return column_locked(w);
    }

private:
    int lehmer(const Perm& p) const
    {
        int code = 0;
        for (int i = 1; i <= n_; ++i) {
            int c = 0;
            for (int j = i + 1; j <= n_; ++j)
                c += p(j) < p(i);
            code += c * fact_[n_ - i];
        }
        return code;
    }

    const std::vector<LPoly>& column_locked(int w)
    {
        if (cols_[w])
            return *cols_[w];
        int N = static_cast<int>(elems_.size());
        auto col = std::make_unique<std::vector<LPoly>>(N);
        const Perm& W = elems_[w];
        if (len_[w] == 0) {
            (*col)[w] = LPoly(1);
        } else {
            int s = descents(W, Side::right).front();
            int v = rmul_[s][w];
            const auto& Pv = column_locked(v);
            std::vector<std::pair<int, std::int64_t>> mu_terms;
            for (auto [z, m] : mus_of_locked(v))
                if (elems_[z].right_descent(s))
                    mu_terms.emplace_back(z, m);
            std::vector<const std::vector<LPoly>*> Pz;
            for (auto [z, m] : mu_terms)
                Pz.push_back(&column_locked(z));
            for (int x = 0; x < N; ++x) {
                if (len_[x] > len_[w] || !bruhat_leq(elems_[x], W))
                    continue;
                int xs = rmul_[s][x];
                bool c = elems_[x].right_descent(s);
                LPoly r;
                r.add_scaled(Pv[xs], 1, c ? 0 : 1);
                r.add_scaled(Pv[x], 1, c ? 1 : 0);
                for (std::size_t k = 0; k < mu_terms.size(); ++k) {
                    auto [z, m] = mu_terms[k];
                    r.add_scaled((*Pz[k])[x], -m, (len_[w] - len_[z]) / 2);
                }
                (*col)[x] = std::move(r);
            }
        }
        cols_[w] = std::move(col);
        return *cols_[w];
    }

    const std::vector<std::pair<int, std::int64_t>>& mus_of_locked(int w)
    {
        const auto& col = column_locked(w);
        if (mus_[w])
            return *mus_[w];
        auto m = std::make_unique<std::vector<std::pair<int, std::int64_t>>>();
        for (int z = 0; z < static_cast<int>(col.size()); ++z) {
            int d = len_[w] - len_[z];
            if (d > 0 && d % 2 == 1) {
                std::int64_t c = col[z][(d - 1) / 2];
                if (c != 0)
                    m->emplace_back(z, c);
            }
        }
        mus_[w] = std::move(m);
        return *mus_[w];
    }

    int n_;
    const std::vector<Perm>& elems_;
    std::vector<int> fact_, pos_, len_;
    std::vector<std::vector<int>> rmul_;
    std::vector<std::unique_ptr<std::vector<LPoly>>> cols_;
    std::vector<std::unique_ptr<std::vector<std::pair<int, std::int64_t>>>> mus_;
    std::recursive_mutex mu_;
};

KLTable& kl_table(int n)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<KLTable>> tables;
    if (n > 8)
        throw std::invalid_argument("kl_polynomial supports n <= 8");
    std::lock_guard lock(mu);
    auto& t = tables[n];
    if (!t)
        t = std::make_unique<KLTable>(n);
    return *t;
}

}  // namespace

LPoly kl_polynomial(const Perm& x, const Perm& w)
{
    if (x.n() != w.n())
        throw std::invalid_argument("rank mismatch in kl_polynomial");
    KLTable& t = kl_table(w.n());
    return t.column(t.index(w))[t.index(x)];
}

std::int64_t kl_mu(const Perm& x, const Perm& w)
{
    int d = w.length() - x.length();
    if (d <= 0 || d % 2 == 0)
        return 0;
    return kl_polynomial(x, w)[(d - 1) / 2];
}

Hecke cprime_element(const Perm& w)
{
    Hecke h(w.n());
    int l = w.length();
    for (const Perm& x : bruhat_interval_below(w))
        h.add(x, kl_polynomial(x, w).dilate(2).shifted(-l));
    return h;
}

Hecke bprime_element(const Perm& w)
{
    Hecke h(w.n());
    LPoly c = LPoly::monomial(1, -w.length());
    for (const Perm& x : bruhat_interval_below(w))
        h.add(x, c);
    return h;
}

std::map<Perm, LPoly> expand_in_bprime(const Hecke& h)
{
    // Peel off the B' element of a maximal-length term; its leading T
    // coefficient is v^{-l(w)}.
    std::map<Perm, LPoly> out;
    Hecke rest = h;
    while (!rest.is_zero()) {
        auto top = std::max_element(rest.terms().begin(), rest.terms().end(), [](const auto& a, const auto& b) {
            int la = a.first.length(), lb = b.first.length();
            return la != lb ? la < lb : a.first > b.first;
        });
        Perm w = top->first;
        LPoly c = top->second.shifted(w.length());
        out[w] += c;
        rest -= bprime_element(w) * c;
    }
    return out;
}

Hecke from_bprime(int n, const std::map<Perm, LPoly>& coeffs)
{
    Hecke h(n);
    for (const auto& [w, c] : coeffs)
        h += bprime_element(w) * c;
    return h;
}

}  // namespace klmasks
