#pragma once

// The fundamental correlated integral of S-state three-body matrix
// elements, in interparticle coordinates:
//
//   Gamma(l,m,n; a,b,g) = Int_0^inf dr1 Int_0^inf dr2 Int_{|r1-r2|}^{r1+r2} dR
//                         r1^l r2^m R^n exp(-a r1 - b r2 - g R)
//
// The base case is Gamma(0,0,0) = 2 / ((a+b)(b+g)(g+a)), and every higher
// order follows from (-d/da)^l (-d/db)^m (-d/dg)^n applied to it.  A value
// is therefore a finite sum
//
//   Gamma = sum_k  c_k (a+b)^(-p_k) (b+g)^(-q_k) (g+a)^(-s_k)
//
// with positive integer coefficients, which this header builds once per
// (l,m,n) and evaluates for arbitrary complex exponents.  Convergence
// requires all three pair sums to have positive real part.
//
// Differentiation acts on the index triples as
//   -d/da : (p,q,s) -> p*(p+1,q,s) + s*(p,q,s+1)
//   -d/db : (p,q,s) -> p*(p+1,q,s) + q*(p,q+1,s)
//   -d/dg : (p,q,s) -> q*(p,q+1,s) + s*(p,q,s+1)
// since a appears in the first and third denominators, b in the first and
// second, g in the second and third.

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <vector>

#include "trion/dd.hpp"
#include "trion/errors.hpp"

namespace trion {

inline constexpr int kMaxGammaOrder = 6;

struct GammaTerm {
    int p, q, s;   // inverse powers of (a+b), (b+g), (g+a)
    double coeff;  // integer-valued, exact in double for orders <= 6
};

struct GammaTermSet {
    int l = 0, m = 0, n = 0;
    std::vector<GammaTerm> terms;
    int max_p = 0, max_q = 0, max_s = 0;
};

namespace detail {

enum class Axis { Alpha, Beta, Gamma };

inline std::vector<GammaTerm> differentiate(const std::vector<GammaTerm>& in, Axis axis) {
    std::vector<GammaTerm> out;
    out.reserve(in.size() * 2);
    for (const auto& t : in) {
        switch (axis) {
        case Axis::Alpha:
            out.push_back({t.p + 1, t.q, t.s, t.coeff * t.p});
            out.push_back({t.p, t.q, t.s + 1, t.coeff * t.s});
            break;
        case Axis::Beta:
            out.push_back({t.p + 1, t.q, t.s, t.coeff * t.p});
            out.push_back({t.p, t.q + 1, t.s, t.coeff * t.q});
            break;
        case Axis::Gamma:
            out.push_back({t.p, t.q + 1, t.s, t.coeff * t.q});
            out.push_back({t.p, t.q, t.s + 1, t.coeff * t.s});
            break;
        }
    }
    // merge duplicates
    std::sort(out.begin(), out.end(), [](const GammaTerm& x, const GammaTerm& y) {
        return std::tie(x.p, x.q, x.s) < std::tie(y.p, y.q, y.s);
    });
    std::vector<GammaTerm> merged;
    for (const auto& t : out) {
        if (!merged.empty() && merged.back().p == t.p && merged.back().q == t.q &&
            merged.back().s == t.s)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(t);
    }
    return merged;
}

} // namespace detail

// Term sets are built on demand and cached for the life of the process.
inline const GammaTermSet& gamma_term_set(int l, int m, int n) {
    if (l < 0 || m < 0 || n < 0 || l > kMaxGammaOrder || m > kMaxGammaOrder ||
        n > kMaxGammaOrder)
        throw UnsupportedOrderError("Gamma(l,m,n) supports orders 0..6, got (" +
                                    std::to_string(l) + "," + std::to_string(m) + "," +
                                    std::to_string(n) + ")");
    static std::map<std::array<int, 3>, GammaTermSet> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::array<int, 3>{l, m, n};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<GammaTerm> terms{{1, 1, 1, 2.0}};
    for (int i = 0; i < l; ++i) terms = detail::differentiate(terms, detail::Axis::Alpha);
    for (int i = 0; i < m; ++i) terms = detail::differentiate(terms, detail::Axis::Beta);
    for (int i = 0; i < n; ++i) terms = detail::differentiate(terms, detail::Axis::Gamma);

    GammaTermSet set;
    set.l = l;
    set.m = m;
    set.n = n;
    set.terms = std::move(terms);
    for (const auto& t : set.terms) {
        set.max_p = std::max(set.max_p, t.p);
        set.max_q = std::max(set.max_q, t.q);
        set.max_s = std::max(set.max_s, t.s);
    }
    return cache.emplace(key, std::move(set)).first->second;
}

// Evaluates Gamma(l,m,n) for one triple of complex exponents, caching the
// inverse powers of the three pair sums so several (l,m,n) can be read off
// the same exponents cheaply.  R is double or DoubleDouble.
template <typename R>
class GammaEvaluator {
  public:
    GammaEvaluator(Cx<R> a, Cx<R> b, Cx<R> g) {
        pair_[0] = a + b;
        pair_[1] = b + g;
        pair_[2] = g + a;
        for (int k = 0; k < 3; ++k) {
            if (!(to_double(pair_[k].re) > 0.0))
                throw DivergentIntegralError(
                    "pair sum " + std::string(k == 0 ? "a+b" : k == 1 ? "b+g" : "g+a") +
                    " has non-positive real part; integral diverges");
            inv_pow_[k].push_back(Cx<R>(R(1.0)));
            inv_pow_[k].push_back(inverse(pair_[k]));
        }
    }

    Cx<R> value(int l, int m, int n) {
        const GammaTermSet& set = gamma_term_set(l, m, n);
        ensure(0, set.max_p);
        ensure(1, set.max_q);
        ensure(2, set.max_s);
        if constexpr (std::is_same_v<R, double>) {
            // Neumaier-compensated sums; adjacent terms can cancel strongly.
            double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
            auto add = [](double& sum, double& comp, double v) {
                double t = sum + v;
                if (std::abs(sum) >= std::abs(v))
                    comp += (sum - t) + v;
                else
                    comp += (v - t) + sum;
                sum = t;
            };
            for (const auto& t : set.terms) {
                Cx<R> term = inv_pow_[0][t.p] * inv_pow_[1][t.q] * inv_pow_[2][t.s];
                add(sr, cr, t.coeff * term.re);
                add(si, ci, t.coeff * term.im);
            }
            return {sr + cr, si + ci};
        } else {
            Cx<R> sum{};
            for (const auto& t : set.terms)
                sum += R(t.coeff) * (inv_pow_[0][t.p] * inv_pow_[1][t.q] * inv_pow_[2][t.s]);
            return sum;
        }
    }

  private:
    void ensure(int k, int up_to) {
        auto& v = inv_pow_[k];
        while (static_cast<int>(v.size()) <= up_to) v.push_back(v.back() * v[1]);
    }

    Cx<R> pair_[3];
    std::vector<Cx<R>> inv_pow_[3];
};

// One-shot evaluation for callers that need a single order.
inline std::complex<double> gamma_integral(int l, int m, int n, std::complex<double> a,
                                           std::complex<double> b, std::complex<double> g) {
    GammaEvaluator<double> eval({a.real(), a.imag()}, {b.real(), b.imag()},
                                {g.real(), g.imag()});
    Cx<double> v = eval.value(l, m, n);
    return {v.re, v.im};
}

} // namespace trion
