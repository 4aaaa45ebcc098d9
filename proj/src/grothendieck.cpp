#include "kgrass/grothendieck.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "kgrass/svt.hpp"

namespace kgrass {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in addition");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in multiplication");
    return r;
}

} // namespace

void SparsePolynomial::add_term(const Exponent& e, long long c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != vars_)
        throw PreconditionError("exponent vector has wrong variable count");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    if (vars_ != o.vars_) throw PreconditionError("variable count mismatch");
    SparsePolynomial r(vars_);
    Exponent e(vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, checked_mul(ca, cb));
        }
    }
    return r;
}

bool SparsePolynomial::is_symmetric() const {
    for (int i = 0; i + 1 < vars_; ++i) {
        for (const auto& [e, c] : terms_) {
            Exponent s = e;
            std::swap(s[i], s[i + 1]);
            auto it = terms_.find(s);
            if (it == terms_.end() || it->second != c) return false;
        }
    }
    return true;
}

SparsePolynomial SparsePolynomial::component(int degree) const {
    SparsePolynomial r(vars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == degree) r.add_term(e, c);
    return r;
}

int SparsePolynomial::lowest_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c);
        for (int i = 0; i < vars_; ++i)
            if (e[i]) s += " x" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
    }
    return s;
}

namespace {

// Walks all semistandard (set-valued) fillings of the straight shape λ with
// entries ≤ m, box by box in row order, visiting each monomial x^T once.
// No lattice-word condition here; this is the raw g_λ / s_λ sum.
void visit_fillings(const Partition& lambda, int m, bool set_valued,
                    const std::function<void(const std::vector<int>&, int)>& emit) {
    int n = lambda.length();
    if (n == 0) {
        std::vector<int> e(m, 0);
        emit(e, 0);
        return;
    }
    if (n > m && !set_valued) return;
    // Grid of chosen sets, walked in row-major order left to right; the right
    // neighbor is unconstrained until chosen, so constraints look left/up.
    std::vector<std::vector<ValueSet>> grid(n);
    for (int i = 0; i < n; ++i) grid[i].resize(lambda.part(i + 1));
    std::vector<int> expo(m, 0);
    int weight = 0;

    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == n) {
            emit(expo, weight);
            return;
        }
        int ni = i, nj = j + 1;
        if (nj == lambda.part(i + 1)) {
            ni = i + 1;
            nj = 0;
        }
        // Only the minimum of the current set is constrained by the already
        // filled left/up neighbors; any nonempty subset of [lo..m] is valid.
        int lo = 1;
        if (j > 0) lo = std::max(lo, grid[i][j - 1].max());     // weak along rows
        if (i > 0) lo = std::max(lo, grid[i - 1][j].max() + 1); // strict down columns
        if (lo > m) return;

        ValueSet chosen;
        std::function<void(int)> grow = [&](int v) {
            if (!chosen.empty()) {
                grid[i][j] = chosen;
                rec(ni, nj);
            }
            for (int u = v; u <= m; ++u) {
                if (!set_valued && !chosen.empty()) break;
                chosen.insert(u);
                expo[u - 1]++;
                weight++;
                grow(u + 1);
                chosen.erase(u);
                expo[u - 1]--;
                weight--;
            }
        };
        grow(lo);
        grid[i][j] = ValueSet{};
    };
    rec(0, 0);
}

} // namespace

SparsePolynomial expand_g(const Partition& lambda, int m) {
    if (m < 1) throw PreconditionError("variable count must be at least 1");
    SparsePolynomial p(m);
    int base = lambda.size();
    visit_fillings(lambda, m, true, [&](const std::vector<int>& e, int w) {
        p.add_term(e, ((w - base) % 2 == 0) ? 1 : -1);
    });
    return p;
}

SparsePolynomial expand_s(const Partition& lambda, int m) {
    if (m < 1) throw PreconditionError("variable count must be at least 1");
    SparsePolynomial p(m);
    visit_fillings(lambda, m, false, [&](const std::vector<int>& e, int) { p.add_term(e, 1); });
    return p;
}

namespace {

// Lex-greatest exponent among the terms of lowest total degree.
SparsePolynomial::Exponent leading_low_monomial(const SparsePolynomial& p) {
    int low = p.lowest_degree();
    SparsePolynomial::Exponent best;
    for (const auto& [e, c] : p.terms()) {
        if (std::accumulate(e.begin(), e.end(), 0) != low) continue;
        if (best.empty() || e > best) best = e;
    }
    return best;
}

} // namespace

std::map<Partition, long long> to_g_basis(const SparsePolynomial& p) {
    if (!p.is_symmetric()) throw NotSymmetric("polynomial is not symmetric");
    std::map<Partition, long long> out;
    SparsePolynomial rest = p;
    std::map<Partition, SparsePolynomial> cache;
    size_t guard = 0;
    while (!rest.is_zero()) {
        if (++guard > 1000000) throw NotInSpan("elimination does not terminate");
        auto e = leading_low_monomial(rest);
        // The leading monomial of lowest degree must be x^ν for a partition ν.
        std::vector<int> parts = e;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1])
                throw NotInSpan("lowest-degree leading monomial is not a partition");
        Partition nu(parts);
        long long a = rest.terms().at(e);
        auto it = cache.find(nu);
        if (it == cache.end()) it = cache.emplace(nu, expand_g(nu, p.vars())).first;
        SparsePolynomial scaled(p.vars());
        for (const auto& [ee, cc] : it->second.terms()) scaled.add_term(ee, checked_mul(cc, a));
        rest = rest - scaled;
        out[nu] += a;
        if (out[nu] == 0) out.erase(nu);
    }
    return out;
}

GBasisExpansion buch_product(const Partition& lambda, const Partition& mu,
                             const AmbientBox& box) {
    GBasisExpansion ex;
    ex.lambda = lambda;
    ex.mu = mu;
    ex.box = box;
    int base = lambda.size() + mu.size();
    auto all = enumerate_buch_tableaux(lambda, mu, box);
    std::map<Partition, long long> counts;
    for (const auto& t : all) {
        Content c = content_of(t, true);
        counts[Partition(c.counts)] += 1;
    }
    for (const auto& [nu, n] : counts) {
        long long sign = ((nu.size() - base) % 2 == 0) ? 1 : -1;
        ex.coeffs[nu] = sign * n;
    }
    // Buch alternation: sign(c'(ν)) = (-1)^{|ν|-|λ|-|μ|}; asserted, not assumed.
    for (const auto& [nu, c] : ex.coeffs) {
        bool even = (nu.size() - base) % 2 == 0;
        if ((even && c < 0) || (!even && c > 0))
            throw Error("Buch sign alternation violated at " + nu.to_string());
    }
    return ex;
}

std::map<Partition, long long> lr_product(const Partition& lambda, const Partition& mu,
                                          const AmbientBox& box) {
    auto ex = buch_product(lambda, mu, box);
    std::map<Partition, long long> out;
    int base = lambda.size() + mu.size();
    for (const auto& [nu, c] : ex.coeffs)
        if (nu.size() == base) out[nu] = c;
    return out;
}

} // namespace kgrass
