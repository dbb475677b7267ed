#include "riordan/series.hpp"

#include <algorithm>
#include <sstream>

#include "riordan/errors.hpp"

namespace riordan {

std::string parity_str(Parity p) {
    switch (p) {
        case Parity::Even: return "even";
        case Parity::Odd: return "odd";
        default: return "none";
    }
}

Parity parity_from_str(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    if (s == "none") return Parity::None;
    throw Error("unknown parity tag: " + s);
}

static void validate_parity(const std::vector<Rational>& coeffs, Parity parity) {
    if (parity == Parity::None) return;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        bool must_vanish = (parity == Parity::Even) ? (k % 2 == 1) : (k % 2 == 0);
        if (must_vanish && coeffs[k] != 0)
            throw ParityError("coefficient of t^" + std::to_string(k) +
                              " violates " + parity_str(parity) + " tag");
    }
}

Series::Series(std::vector<Rational> coeffs, Parity parity)
    : coeffs_(std::move(coeffs)), parity_(parity) {
    if (coeffs_.empty()) throw TruncError("series needs at least the degree-0 coefficient");
    validate_parity(coeffs_, parity_);
}

Series Series::zero(int trunc, Parity parity) {
    if (trunc < 0) throw TruncError("negative truncation");
    return Series(std::vector<Rational>(trunc + 1), parity);
}

Series Series::constant(const Rational& c, int trunc) {
    std::vector<Rational> v(static_cast<std::size_t>(trunc) + 1);
    v[0] = c;
    return Series(std::move(v), Parity::Even);
}

Series Series::t(int trunc) { return monomial(1, 1, trunc); }

Series Series::monomial(const Rational& c, int degree, int trunc) {
    if (degree > trunc) throw TruncError("monomial degree exceeds truncation");
    std::vector<Rational> v(static_cast<std::size_t>(trunc) + 1);
    v[static_cast<std::size_t>(degree)] = c;
    return Series(std::move(v), degree % 2 == 0 ? Parity::Even : Parity::Odd);
}

const Rational& Series::coeff(int k) const {
    if (k < 0 || k > trunc())
        throw TruncError("coefficient t^" + std::to_string(k) +
                         " beyond certified truncation " + std::to_string(trunc()));
    return coeffs_[static_cast<std::size_t>(k)];
}

int Series::order() const {
    for (int k = 0; k <= trunc(); ++k)
        if (coeffs_[static_cast<std::size_t>(k)] != 0) return k;
    return trunc() + 1;
}

Series Series::restricted(int new_trunc) const {
    if (new_trunc > trunc())
        throw TruncError("cannot extend certified truncation from " +
                         std::to_string(trunc()) + " to " + std::to_string(new_trunc));
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + new_trunc + 1);
    return Series(std::move(c), parity_);
}

Series Series::retagged(Parity parity) const { return Series(coeffs_, parity); }

Series Series::with_inferred_parity() const {
    bool even_nonzero = false, odd_nonzero = false;
    for (int k = 0; k <= trunc(); ++k) {
        if (coeffs_[static_cast<std::size_t>(k)] == 0) continue;
        (k % 2 == 0 ? even_nonzero : odd_nonzero) = true;
    }
    Parity p = Parity::None;
    if (even_nonzero && !odd_nonzero) p = Parity::Even;
    if (odd_nonzero && !even_nonzero) p = Parity::Odd;
    return Series(coeffs_, p);
}

std::string Series::str() const {
    std::ostringstream os;
    for (int k = 0; k <= trunc(); ++k) {
        if (k) os << ", ";
        os << rat_str(coeffs_[static_cast<std::size_t>(k)]);
    }
    return os.str();
}

bool prefix_eq(const Series& a, const Series& b, int upto) {
    if (upto > a.trunc() || upto > b.trunc())
        throw TruncError("prefix comparison beyond certified truncation");
    for (int k = 0; k <= upto; ++k)
        if (a[k] != b[k]) return false;
    return true;
}

bool agree(const Series& a, const Series& b) {
    return prefix_eq(a, b, std::min(a.trunc(), b.trunc()));
}

static Parity combine_linear(Parity a, Parity b) {
    return a == b ? a : Parity::None;
}

static Parity combine_mul(Parity a, Parity b) {
    if (a == Parity::None || b == Parity::None) return Parity::None;
    return a == b ? Parity::Even : Parity::Odd;
}

Series add(const Series& a, const Series& b) {
    int T = std::min(a.trunc(), b.trunc());
    std::vector<Rational> c(T + 1);
    for (int k = 0; k <= T; ++k) c[static_cast<std::size_t>(k)] = a[k] + b[k];
    return Series(std::move(c), combine_linear(a.parity(), b.parity()));
}

Series sub(const Series& a, const Series& b) { return add(a, neg(b)); }

Series neg(const Series& a) {
    std::vector<Rational> c(a.coeffs());
    for (auto& x : c) x = -x;
    return Series(std::move(c), a.parity());
}

Series mul(const Series& a, const Series& b) {
    int T = std::min(a.trunc(), b.trunc());
    std::vector<Rational> c(T + 1);
    int oa = a.order(), ob = b.order();
    for (int i = oa; i <= T; ++i) {
        if (a[i] == 0) continue;
        for (int j = ob; i + j <= T; ++j) {
            if (b[j] == 0) continue;
            c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
        }
    }
    return Series(std::move(c), combine_mul(a.parity(), b.parity()));
}

Series mul_scalar(const Rational& c, const Series& a) {
    std::vector<Rational> out(a.coeffs());
    for (auto& x : out) x *= c;
    return Series(std::move(out), a.parity());
}

Series div(const Series& a, const Series& b) {
    int ob = b.order();
    if (ob > b.trunc()) throw ZeroDivisor("division by a series that is zero up to its truncation");
    if (ob > a.order() && !a.is_zero())
        throw OrderError("quotient is not a power series: divisor order " + std::to_string(ob) +
                         " exceeds dividend order " + std::to_string(a.order()));
    int T = std::min(a.trunc(), b.trunc()) - ob;
    if (T < 0) throw TruncError("no certified coefficients survive the division");
    // Shift both by ob, then long-divide by the unit part of b.
    std::vector<Rational> q(T + 1);
    const Rational& lead = b[ob];
    for (int m = 0; m <= T; ++m) {
        Rational acc = a[m + ob];
        for (int i = 0; i < m; ++i) {
            const Rational& bj = b[m - i + ob];
            if (bj != 0) acc -= q[static_cast<std::size_t>(i)] * bj;
        }
        q[static_cast<std::size_t>(m)] = acc / lead;
    }
    Parity p = Parity::None;
    if (a.parity() != Parity::None && b.parity() != Parity::None)
        p = (a.parity() == b.parity()) ? Parity::Even : Parity::Odd;
    return Series(std::move(q), p);
}

Series pow(const Series& a, unsigned k) {
    Series result = Series::one(a.trunc());
    Series base = a;
    while (k) {
        if (k & 1u) result = mul(result, base);
        base = (k >>= 1u) ? mul(base, base) : base;
    }
    return result;
}

static Parity compose_parity(Parity outer, Parity inner) {
    if (inner == Parity::Even) return Parity::Even;
    if (inner == Parity::Odd) return outer;
    return Parity::None;
}

Series compose(const Series& outer, const Series& inner) {
    if (inner.order() == 0)
        throw OrderError("composition needs an inner series of order >= 1");
    int T = std::min(outer.trunc(), inner.trunc());
    // Horner over the inner series; terms of outer beyond degree T only
    // touch degrees > T because order(inner) >= 1.
    Series inner_t = inner.restricted(T);
    Series acc = Series::constant(outer[T], T);
    for (int j = T - 1; j >= 0; --j) {
        acc = mul(acc, inner_t);
        acc = add(acc, Series::constant(outer[j], T));
    }
    return Series(acc.coeffs(), compose_parity(outer.parity(), inner.parity()));
}

Series comp_inverse(const Series& f) {
    if (f.order() != 1)
        throw OrderError("compositional inverse needs order exactly 1");
    int N = f.trunc();
    const Rational& f1 = f[1];
    // Solve f(g) = t degree by degree, keeping the table W[j][m] = [t^m] g^j.
    std::vector<std::vector<Rational>> W(static_cast<std::size_t>(N) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(N) + 1));
    std::vector<Rational> g(static_cast<std::size_t>(N) + 1);
    g[1] = Rational(1) / f1;
    W[1][1] = g[1];
    for (int n = 2; n <= N; ++n) {
        for (int j = 2; j <= n; ++j) {
            Rational acc = 0;
            for (int i = j - 1; i <= n - 1; ++i) {
                if (W[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)] == 0) continue;
                acc += W[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)] *
                       g[static_cast<std::size_t>(n - i)];
            }
            W[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] = acc;
        }
        Rational rhs = 0;
        for (int j = 2; j <= n; ++j)
            if (f[j] != 0)
                rhs += f[j] * W[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
        g[static_cast<std::size_t>(n)] = -rhs / f1;
        W[1][static_cast<std::size_t>(n)] = g[static_cast<std::size_t>(n)];
    }
    Parity p = (f.parity() == Parity::Odd) ? Parity::Odd : Parity::None;
    return Series(std::move(g), p);
}

// Resolves the working parity of s: the tag when present, otherwise a
// coefficient scan; mixed data raise ParityError.
static Parity effective_parity(const Series& s) {
    if (s.parity() != Parity::None) return s.parity();
    bool even_nonzero = false, odd_nonzero = false;
    for (int k = 0; k <= s.trunc(); ++k) {
        if (s[k] == 0) continue;
        (k % 2 == 0 ? even_nonzero : odd_nonzero) = true;
    }
    if (even_nonzero && odd_nonzero)
        throw ParityError("series mixes even and odd degrees; no hat reindexing exists");
    if (odd_nonzero) return Parity::Odd;
    return Parity::Even;  // pure even data, or identically zero
}

Series hat(const Series& s) {
    Parity p = effective_parity(s);
    if (p == Parity::Even) {
        int T = s.trunc() / 2;
        std::vector<Rational> c(static_cast<std::size_t>(T) + 1);
        for (int k = 0; k <= T; ++k) c[static_cast<std::size_t>(k)] = s[2 * k];
        return Series(std::move(c), Parity::None);
    }
    // odd: s_{2k+1} lands at degree k+1
    int T = (s.trunc() + 1) / 2;
    std::vector<Rational> c(static_cast<std::size_t>(T) + 1);
    for (int k = 0; 2 * k + 1 <= s.trunc(); ++k) c[static_cast<std::size_t>(k + 1)] = s[2 * k + 1];
    return Series(std::move(c), Parity::None);
}

Series unhat(const Series& s, Parity target) {
    if (target == Parity::Even) {
        // degree k -> degree 2k; 2T+1 is certified because the odd slots vanish
        int T = 2 * s.trunc() + 1;
        std::vector<Rational> c(static_cast<std::size_t>(T) + 1);
        for (int k = 0; k <= s.trunc(); ++k) c[static_cast<std::size_t>(2 * k)] = s[k];
        return Series(std::move(c), Parity::Even);
    }
    if (target != Parity::Odd) throw ParityError("unhat target must be even or odd");
    if (s.order() == 0)
        throw OrderError("odd unhat needs order >= 1 (coefficient slot t^{k+1} -> t^{2k+1})");
    int T = 2 * s.trunc();
    std::vector<Rational> c(static_cast<std::size_t>(T) + 1);
    for (int k = 1; k <= s.trunc(); ++k) c[static_cast<std::size_t>(2 * k - 1)] = s[k];
    return Series(std::move(c), Parity::Odd);
}

Series subst_sqrt_even(const Series& a_even, const Series& s) {
    if (effective_parity(a_even) != Parity::Even)
        throw ParityError("subst_sqrt_even needs an even series");
    if (s.order() < 1) throw OrderError("substituted series must have order >= 1");
    Series result = compose(hat(a_even), s);
    if (s.parity() == Parity::Even) return result.retagged(Parity::Even);
    return result;
}

Series twisted_odd_subst(const Series& h_odd, const Series& f_keep, const Series& s) {
    if (effective_parity(h_odd) != Parity::Odd)
        throw ParityError("twisted_odd_subst needs an odd series");
    if (s.order() < 2) throw OrderError("twisted substitution needs order(s) >= 2");
    if (f_keep.order() < 1) throw OrderError("twisted substitution needs order(f_keep) >= 1");
    // h = t*H(t^2)  =>  H = hat(h)/t, and the answer is f_keep * H(s).
    Series H = div(hat(h_odd), Series::t(hat(h_odd).trunc()));
    return mul(f_keep, compose(H, s));
}

QBundle qbar(const Series& f1, const Series& f2) {
    if (effective_parity(f1) != Parity::Odd || effective_parity(f2) != Parity::Odd)
        throw ParityError("qbar needs two odd series");
    if (f1.order() != 1 || f2.order() != 1)
        throw OrderError("qbar needs multiplier series of order exactly 1");
    Series h1 = hat(f1), h2 = hat(f2);
    Series s_hat = div(mul(h1, h2), Series::t(std::min(h1.trunc(), h2.trunc())));
    Series r = comp_inverse(s_hat);
    // q(t) = r(t^2): interleave with zeros, certified through 2*trunc(r)+1.
    Series q = unhat(r, Parity::Even);
    return QBundle{std::move(s_hat), std::move(r), std::move(q)};
}

}  // namespace riordan
