#pragma once

#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

enum class Parity { Even, Odd, None };

std::string parity_str(Parity p);
Parity parity_from_str(const std::string& s);

// Truncated formal power series over the rationals. A value carries its
// certified truncation degree: coefficient k is trusted for k <= trunc()
// and unknown beyond. Operations return the longest prefix they can
// certify and never pad silently.
//
// The parity tag is a structural invariant (validated at construction),
// not an inference: Even means every odd-degree coefficient is zero up
// to trunc, Odd the mirror statement, None promises nothing.
class Series {
  public:
    Series() : coeffs_(1), parity_(Parity::None) {}
    Series(std::vector<Rational> coeffs, Parity parity = Parity::None);

    static Series zero(int trunc, Parity parity = Parity::None);
    static Series constant(const Rational& c, int trunc);
    static Series one(int trunc) { return constant(1, trunc); }
    static Series t(int trunc);
    static Series monomial(const Rational& c, int degree, int trunc);

    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
    Parity parity() const { return parity_; }

    // Certified coefficient access; throws TruncError past trunc().
    const Rational& coeff(int k) const;
    const Rational& operator[](int k) const { return coeff(k); }

    // Least k with coeff(k) != 0, or trunc()+1 when zero on the prefix.
    int order() const;
    bool is_zero() const { return order() > trunc(); }

    // Restriction to a smaller truncation (never pads).
    Series restricted(int new_trunc) const;
    // Same coefficients with a (validated) parity tag.
    Series retagged(Parity parity) const;
    // Scans coefficients and assigns Even/Odd when the data are pure,
    // None when mixed or identically zero.
    Series with_inferred_parity() const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const Series& other) const = delete;  // use prefix_eq

    std::string str() const;  // "c0, c1, ..., cN" diagnostics form

  private:
    std::vector<Rational> coeffs_;  // size() == trunc()+1
    Parity parity_;
};

// True when a and b agree on coefficients 0..upto; both must certify upto.
bool prefix_eq(const Series& a, const Series& b, int upto);
// Agreement on the full shared prefix min(a.trunc, b.trunc).
bool agree(const Series& a, const Series& b);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series mul(const Series& a, const Series& b);
Series mul_scalar(const Rational& c, const Series& a);

// Power-series division a/b. Requires order(b) <= order(a) (OrderError)
// and b not identically zero (ZeroDivisor). Result certified to
// min(a.trunc, b.trunc) - order(b).
Series div(const Series& a, const Series& b);

Series pow(const Series& a, unsigned k);

// outer(inner) with order(inner) >= 1; certified to the shared prefix
// min(outer.trunc, inner.trunc).
Series compose(const Series& outer, const Series& inner);

// Compositional inverse of f (order 1, f[1] != 0): the unique fbar with
// f(fbar) = fbar(f) = t, computed by undetermined coefficients.
Series comp_inverse(const Series& f);

// Degree-halving reindexings.
//   even s = sum s_{2k} t^{2k}   ->  sum s_{2k} t^k
//   odd  s = sum s_{2k+1}t^{2k+1}->  sum s_{2k+1} t^{k+1}
// Accepts an untagged series when its coefficients are de-facto pure;
// throws ParityError on genuinely mixed input.
Series hat(const Series& s);
// Inverse reindexing toward the requested parity; for Parity::Odd the
// input must have order >= 1.
Series unhat(const Series& s, Parity target);

// a(sqrt(s)) for even a, evaluated without materializing the square
// root: sum_k a_{2k} s^k. Requires order(s) >= 1.
Series subst_sqrt_even(const Series& a_even, const Series& s);

// sqrt(f_keep^2/s)*h(sqrt(s)) for odd h = t*H(t^2), which collapses to
// the rational product f_keep * H(s). Requires order(s) >= 2 and
// order(f_keep) >= 1.
Series twisted_odd_subst(const Series& h_odd, const Series& f_keep, const Series& s);

// The rational kernel standing in for the compositional inverse of
// sqrt(f1*f2) when f1, f2 are odd of order 1:
//   s_hat = hat(f1)*hat(f2)/t                (order 1)
//   r     = compositional inverse of s_hat   (order 1)
//   q     = r(t^2)                           (even, order 2)
// q equals the square of that compositional inverse, and every formula
// in this library consumes it through r or q only.
struct QBundle {
    Series s_hat;
    Series r;
    Series q;
};

QBundle qbar(const Series& f1, const Series& f2);

}  // namespace riordan
