#include "klmasks/perm.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klmasks {

Perm::Perm(int n)
{
    if (n < 1 || n > kMaxRank)
        throw std::invalid_argument("rank out of range: " + std::to_string(n));
    n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i)
        w_[i] = static_cast<std::uint8_t>(i + 1);
}

Perm Perm::from_oneline(const std::vector<int>& w)
{
    int n = static_cast<int>(w.size());
    Perm p(n);
    std::vector<bool> seen(n + 1, false);
    for (int i = 0; i < n; ++i) {
        if (w[i] < 1 || w[i] > n || seen[w[i]])
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
        seen[w[i]] = true;
        p.w_[i] = static_cast<std::uint8_t>(w[i]);
    }
    return p;
}

Perm Perm::from_word(int n, const Word& word)
{
    Perm p(n);
    for (int i : word) {
        if (i < 1 || i >= n)
            throw std::invalid_argument("generator s_" + std::to_string(i) + " not in S_" + std::to_string(n));
        std::swap(p.w_[i - 1], p.w_[i]);
    }
    return p;
}

Perm Perm::generator(int n, int i) { return from_word(n, {i}); }

std::vector<int> Perm::oneline() const { return {w_.begin(), w_.begin() + n_}; }

int Perm::length() const
{
    int inv = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            inv += w_[i] > w_[j];
    return inv;
}

Perm Perm::inverse() const
{
    Perm r(n_);
    for (int i = 0; i < n_; ++i)
        r.w_[w_[i] - 1] = static_cast<std::uint8_t>(i + 1);
    return r;
}

Perm Perm::times_s(int i) const
{
    if (i < 1 || i >= n_)
        throw std::invalid_argument("generator index out of range");
    Perm r = *this;
    std::swap(r.w_[i - 1], r.w_[i]);
    return r;
}

Perm Perm::s_times(int i) const
{
    if (i < 1 || i >= n_)
        throw std::invalid_argument("generator index out of range");
    Perm r = *this;
    for (int k = 0; k < n_; ++k) {
        if (r.w_[k] == i)
            r.w_[k] = static_cast<std::uint8_t>(i + 1);
        else if (r.w_[k] == i + 1)
            r.w_[k] = static_cast<std::uint8_t>(i);
    }
    return r;
}

bool Perm::left_descent(int i) const
{
    // i+1 appears before i in the one-line word.
    for (int k = 0; k < n_; ++k) {
        if (w_[k] == i)
            return false;
        if (w_[k] == i + 1)
            return true;
    }
    return false;
}

Perm operator*(const Perm& a, const Perm& b)
{
    if (a.n_ != b.n_)
        throw std::invalid_argument("rank mismatch in multiply");
    Perm r(a.n_);
    for (int i = 0; i < a.n_; ++i)
        r.w_[i] = a.w_[b.w_[i] - 1];
    return r;
}

std::string Perm::str() const
{
    std::string s;
    for (int i = 0; i < n_; ++i) {
        if (n_ >= 10 && i > 0)
            s += ',';
        s += std::to_string(w_[i]);
    }
    return s;
}

bool PermLengthLess::operator()(const Perm& a, const Perm& b) const
{
    int la = a.length(), lb = b.length();
    if (la != lb)
        return la < lb;
    return a < b;
}

namespace {

std::vector<int> parse_ints(const std::string& s)
{
    std::vector<int> out;
    std::string tok;
    std::stringstream ss(s);
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' ' || c == '[' || c == ']'; }),
                  tok.end());
        if (tok.empty())
            continue;
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument("bad integer: " + tok);
        out.push_back(v);
    }
    return out;
}

}  // namespace

Perm parse_perm(const std::string& s)
{
    if (s.find(',') == std::string::npos) {
        std::vector<int> w;
        for (char c : s) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("bad permutation: " + s);
            w.push_back(c - '0');
        }
        return Perm::from_oneline(w);
    }
    return Perm::from_oneline(parse_ints(s));
}

Word parse_word(const std::string& s) { return parse_ints(s); }

std::string word_str(const Word& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

std::vector<int> descents(const Perm& w, Side side)
{
    std::vector<int> out;
    for (int i = 1; i < w.n(); ++i)
        if (side == Side::right ? w.right_descent(i) : w.left_descent(i))
            out.push_back(i);
    return out;
}

std::vector<int> ascents(const Perm& w, Side side)
{
    std::vector<int> out;
    for (int i = 1; i < w.n(); ++i)
        if (!(side == Side::right ? w.right_descent(i) : w.left_descent(i)))
            out.push_back(i);
    return out;
}

std::vector<std::vector<int>> rank_matrix(const Perm& w)
{
    int n = w.n();
    std::vector<std::vector<int>> r(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            r[i][j] = r[i][j - 1] + (w(j) <= i ? 1 : 0);
    return r;
}

bool bruhat_leq(const Perm& x, const Perm& w)
{
    if (x.n() != w.n())
        throw std::invalid_argument("rank mismatch in bruhat_leq");
    int n = w.n();
    // Running column counts avoid materializing both matrices.
    std::array<int, kMaxRank + 1> cx{}, cw{};
    for (int j = 1; j <= n; ++j) {
        for (int i = x(j); i <= n; ++i)
            ++cx[i];
        for (int i = w(j); i <= n; ++i)
            ++cw[i];
        for (int i = 1; i <= n; ++i)
            if (cx[i] < cw[i])
                return false;
    }
    return true;
}

namespace {

void collect_words(const Perm& w, Word& suffix, std::vector<Word>& out)
{
    if (w.length() == 0) {
        out.emplace_back(suffix.rbegin(), suffix.rend());
        return;
    }
    for (int i = 1; i < w.n(); ++i) {
        if (!w.right_descent(i))
            continue;
        suffix.push_back(i);
        collect_words(w.times_s(i), suffix, out);
        suffix.pop_back();
    }
}

}  // namespace

std::vector<Word> reduced_words(const Perm& w)
{
    std::vector<Word> out;
    Word suffix;
    collect_words(w, suffix, out);
    std::sort(out.begin(), out.end());
    return out;
}

Word reduced_word(const Perm& w)
{
    // Greedy from the left: the smallest left descent starts the lex-first word.
    Word out;
    Perm cur = w;
    while (cur.length() > 0) {
        for (int i = 1; i < cur.n(); ++i) {
            if (cur.left_descent(i)) {
                out.push_back(i);
                cur = cur.s_times(i);
                break;
            }
        }
    }
    return out;
}

bool is_reduced(int n, const Word& word)
{
    Perm p(n);
    for (int i : word) {
        if (i < 1 || i >= n || p.right_descent(i))
            return false;
        p = p.times_s(i);
    }
    return true;
}

bool lifting_check(const Perm& x, const Perm& w, int i)
{
    if (x == w || !bruhat_leq(x, w) || !w.right_descent(i) || x.right_descent(i))
        throw std::invalid_argument("lifting_check: preconditions violated");
    return bruhat_leq(x.times_s(i), w) && bruhat_leq(x, w.times_s(i));
}

std::pair<Perm, Perm> parabolic_decompose(const Perm& w, const std::vector<int>& J)
{
    Perm v = w;
    Word u_rev;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i : J) {
            if (v.right_descent(i)) {
                v = v.times_s(i);
                u_rev.push_back(i);
                changed = true;
                break;
            }
        }
    }
    Word u_word(u_rev.rbegin(), u_rev.rend());
    return {v, Perm::from_word(w.n(), u_word)};
}

Perm parabolic_longest(const std::vector<int>& J, int n)
{
    std::vector<bool> in(n, false);
    for (int i : J) {
        if (i < 1 || i >= n)
            throw std::invalid_argument("generator out of range");
        in[i] = true;
    }
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    // Maximal runs of consecutive generators s_a..s_b reverse positions a..b+1.
    int i = 1;
    while (i < n) {
        if (!in[i]) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 < n && in[j + 1])
            ++j;
        std::reverse(w.begin() + (i - 1), w.begin() + (j + 1));
        i = j + 1;
    }
    return Perm::from_oneline(w);
}

std::vector<int> complement_generators(int n, const std::vector<int>& J)
{
    std::vector<int> out;
    for (int i = 1; i < n; ++i)
        if (std::find(J.begin(), J.end(), i) == J.end())
            out.push_back(i);
    return out;
}

bool is_cograssmannian(const Perm& w) { return ascents(w, Side::right).size() <= 1; }

bool is_grassmannian(const Perm& w) { return descents(w, Side::right).size() <= 1; }

bool is_covexillary(const Perm& w)
{
    int n = w.n();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (w(a) >= w(b))
                continue;
            for (int c = b + 1; c <= n; ++c) {
                if (w(c) >= w(a))
                    continue;
                for (int d = c + 1; d <= n; ++d)
                    if (w(c) < w(d) && w(d) < w(a))
                        return false;
            }
        }
    return true;
}

const std::vector<Perm>& all_perms(int n)
{
    static std::mutex mu;
    static std::map<int, std::vector<Perm>> cache;
    if (n < 1 || n > 9)
        throw std::invalid_argument("all_perms supports 1 <= n <= 9");
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_oneline(w));
    } while (std::next_permutation(w.begin(), w.end()));
    std::stable_sort(out.begin(), out.end(),
                     [](const Perm& a, const Perm& b) { return a.length() < b.length(); });
    return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Perm> bruhat_interval_below(const Perm& w)
{
    std::vector<Perm> out;
    for (const Perm& x : all_perms(w.n()))
        if (bruhat_leq(x, w))
            out.push_back(x);
    return out;
}

}  // namespace klmasks
