#ifndef HYPERCHROMA_BOUNDS_HPP
#define HYPERCHROMA_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <hyperchroma/two_phase.hpp>  // default_p

namespace hyperchroma {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_factorial(std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt big_binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt num = 1;
    for (std::size_t i = 0; i < k; ++i) {
        num *= static_cast<unsigned long>(n - i);
        num /= static_cast<unsigned long>(i + 1);  // exact at each step
    }
    return num;
}

inline double log_factorial(double n) { return std::lgamma(n + 1.0); }

inline double log_binomial(double n, double k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

inline double log_sum_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

/// The sharp coefficient constant of the main lower bound:
/// q'(r) = (r!)^{1/r} / (2^{1/r} (1 - 1/r)^{(r-1)/r} r^{(r-2)/r}).
/// q'(2) = sqrt(2), recovering the Radhakrishnan-Srinivasan constant.
inline double q_prime(std::size_t r) {
    if (r < 2) throw std::invalid_argument("q_prime requires r >= 2");
    const double rd = static_cast<double>(r);
    double log_q = log_factorial(rd) / rd - std::log(2.0) / rd -
                   ((rd - 1.0) / rd) * std::log1p(-1.0 / rd) -
                   ((rd - 2.0) / rd) * std::log(rd);
    return std::exp(log_q);
}

enum class BoundFormula { eq1, eq2, eq3, eq4, eq5, eq6 };

inline const char* to_string(BoundFormula f) {
    switch (f) {
        case BoundFormula::eq1: return "eq1";
        case BoundFormula::eq2: return "eq2";
        case BoundFormula::eq3: return "eq3";
        case BoundFormula::eq4: return "eq4";
        case BoundFormula::eq5: return "eq5";
        case BoundFormula::eq6: return "eq6";
    }
    return "?";
}

/// Natural log of the edge-count lower bounds. eq1 is the r=2 bound
/// q (n/ln n)^{1/2} 2^{n-1}; eq6 is the general q (n/ln n)^{(r-1)/r} r^{n-1}.
inline double evaluate_bound(BoundFormula which, std::size_t n, std::size_t r,
                             std::optional<double> q = std::nullopt) {
    if (n < 3 || r < 2)
        throw std::invalid_argument("bounds require n >= 3, r >= 2");
    const double nd = static_cast<double>(n);
    const double rd = static_cast<double>(r);
    const double log_n_over_ln = std::log(nd) - std::log(std::log(nd));
    switch (which) {
        case BoundFormula::eq1:
            if (r != 2) throw std::invalid_argument("eq1 applies only to r = 2");
            if (!q) throw std::invalid_argument("eq1 requires q");
            return std::log(*q) + 0.5 * log_n_over_ln + (nd - 1.0) * std::log(2.0);
        case BoundFormula::eq2:
            return std::log(std::sqrt(3.0) - 1.0) + 0.5 * log_n_over_ln +
                   (nd - 1.0) * std::log(rd);
        case BoundFormula::eq3: {
            const double a = std::floor(std::log2(rd));
            return -4.0 * rd * rd + (a / (a + 1.0)) * log_n_over_ln + nd * std::log(rd);
        }
        case BoundFormula::eq4:
            return std::log(0.25) + 0.5 * std::log(nd) + (nd - 1.0) * std::log(rd);
        case BoundFormula::eq5:
            return std::log(M_PI) / rd - 1.0 / (12.0 * (nd - 1.0)) - 1.0 -
                   0.5 * std::log(2.0 * M_PI) +
                   (0.5 - 0.5 / rd) * std::log(nd - 1.0) +
                   (nd + 2.0 / rd) * std::log(rd);
        case BoundFormula::eq6:
            if (!q) throw std::invalid_argument("eq6 requires q");
            return std::log(*q) + ((rd - 1.0) / rd) * log_n_over_ln +
                   (nd - 1.0) * std::log(rd);
    }
    throw std::logic_error("unreachable");
}

/// Truncated-cardinality profile (a_1..a_r) of a candidate chain.
struct ChainProfile {
    std::vector<std::size_t> a;

    std::size_t r() const { return a.size(); }
    std::size_t sum() const {
        std::size_t s = 0;
        for (std::size_t x : a) s += x;
        return s;
    }
    void check(std::size_t n = 0) const {
        if (a.size() < 2) throw std::invalid_argument("profile needs r >= 2");
        for (std::size_t x : a) {
            if (x < 2) throw std::invalid_argument("profile entries must be >= 2");
            if (n > 0 && x > n - 1)
                throw std::invalid_argument("profile entry exceeds n - 1");
        }
    }
};

/// M(a_1..a_r) = 2 (a_1-1)! (a_r-1)! prod_{i=2}^{r-1} (a_i-2)! / (sum a_i - r + 1)!
/// The probability coefficient that a fixed chain is ordered; the fixed-
/// direction enumeration yields M/2 (M charges both traversal directions).
inline Rational chain_ordered_prob_M(const ChainProfile& prof) {
    prof.check();
    const std::size_t r = prof.r();
    BigInt num = 2 * big_factorial(prof.a.front() - 1) * big_factorial(prof.a.back() - 1);
    for (std::size_t i = 1; i + 1 < r; ++i) num *= big_factorial(prof.a[i] - 2);
    return Rational(num, big_factorial(prof.sum() - r + 1));
}

inline double log_chain_ordered_prob_M(const ChainProfile& prof) {
    prof.check();
    const std::size_t r = prof.r();
    double lg = std::log(2.0) + log_factorial(static_cast<double>(prof.a.front() - 1)) +
                log_factorial(static_cast<double>(prof.a.back() - 1));
    for (std::size_t i = 1; i + 1 < r; ++i)
        lg += log_factorial(static_cast<double>(prof.a[i] - 2));
    return lg - log_factorial(static_cast<double>(prof.sum() - r + 1));
}

/// N(a_1..a_r): probability that a fixed chain of truncations is strong —
/// shared vertices colorless, each edge with the prescribed colorless count
/// and its colored part monochromatic in its own label.
inline Rational chain_strong_prob_N(std::size_t n, const ChainProfile& prof,
                                    const Rational& p) {
    prof.check(n);
    if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie in (0,1)");
    const std::size_t r = prof.r();
    const Rational cp = (1 - p) / static_cast<int>(r);  // one fixed color
    auto pow_r = [](const Rational& x, std::size_t e) {
        Rational y = 1;
        for (std::size_t i = 0; i < e; ++i) y *= x;
        return y;
    };
    Rational result = pow_r(p, r - 1);
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t ai = prof.a[i];
        const bool boundary = (i == 0 || i + 1 == r);
        const std::size_t free_colorless = ai - (boundary ? 1 : 2);
        const std::size_t slots = n - (boundary ? 1 : 2);
        result *= pow_r(p, free_colorless) * pow_r(cp, n - ai) *
                  Rational(big_binomial(slots, free_colorless));
    }
    return result;
}

inline double log_chain_strong_prob_N(std::size_t n, const ChainProfile& prof, double p) {
    prof.check(n);
    const std::size_t r = prof.r();
    const double log_p = std::log(p);
    const double log_cp = std::log1p(-p) - std::log(static_cast<double>(r));
    double lg = (static_cast<double>(r) - 1.0) * log_p;
    for (std::size_t i = 0; i < r; ++i) {
        const double ai = static_cast<double>(prof.a[i]);
        const bool boundary = (i == 0 || i + 1 == r);
        const double anchors = boundary ? 1.0 : 2.0;
        lg += (ai - anchors) * log_p + (static_cast<double>(n) - ai) * log_cp +
              log_binomial(static_cast<double>(n) - anchors, ai - anchors);
    }
    return lg;
}

/// Upper bound on the failure probability of one attempt: the three
/// phase-1 union-bound terms plus the chain series
/// (2|E|^r/r!) sum_t t^{r-1} p^{t+r-1} n^t ((1-p)/r)^{nr-t-2r+2} / (t+r-1)!.
/// Takes ln|E| so astronomically large edge counts stay representable.
inline double failure_probability_upper_logm(std::size_t n, std::size_t r,
                                             double log_m, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
    if (n < 2 || r < 2) throw std::invalid_argument("need n >= 2, r >= 2");
    const double nd = static_cast<double>(n);
    const double rd = static_cast<double>(r);
    const double log_p = std::log(p);
    const double log_cp = std::log1p(-p) - std::log(rd);  // ln((1-p)/r)

    double log_total = log_m + std::log(rd) + nd * log_cp;  // monochromatic
    log_total = log_sum_exp(log_total, log_m + std::log(rd * nd * p) + (nd - 1.0) * log_cp);
    log_total = log_sum_exp(log_total, log_m + nd * log_p);  // fully colorless

    // chain series; the ratio of consecutive terms tends to 0, so summing
    // until the certified tail bound drops below 1e-15 of the partial sum
    const double log_prefix = std::log(2.0) + rd * log_m - log_factorial(rd);
    double log_series = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 1;; ++t) {
        const double td = static_cast<double>(t);
        const double log_term = (rd - 1.0) * std::log(td) + (td + rd - 1.0) * log_p +
                                td * std::log(nd) +
                                (nd * rd - td - 2.0 * rd + 2.0) * log_cp -
                                log_factorial(td + rd - 1.0);
        log_series = log_sum_exp(log_series, log_term);
        // term ratio bound: terms shrink at least geometrically once
        // ratio < 1, giving tail <= term * ratio / (1 - ratio)
        const double ratio = std::exp(std::log(p * nd) - log_cp +
                                      (rd - 1.0) * std::log1p(1.0 / td) -
                                      std::log(td + rd));
        if (ratio < 1.0) {
            const double log_tail = log_term + std::log(ratio) - std::log1p(-ratio);
            if (log_tail < log_series + std::log(1e-15)) break;
        }
        if (t > 1000000)
            throw std::runtime_error("chain series failed to converge");
    }
    log_total = log_sum_exp(log_total, log_prefix + log_series);
    return std::exp(log_total);
}

inline double failure_probability_upper(std::size_t n, std::size_t r, double m,
                                        double p) {
    if (!(m >= 1.0)) throw std::invalid_argument("need edge count m >= 1");
    return failure_probability_upper_logm(n, r, std::log(m), p);
}

namespace detail {

// log of max over admissible profiles of M * N: direct scan when the grid
// is small, coordinate-wise ascent (profiles are unimodal per coordinate)
// otherwise.
inline double log_max_chain_event_prob(std::size_t n, std::size_t r, double p) {
    if (n < 3) return -std::numeric_limits<double>::infinity();
    auto value = [&](const ChainProfile& prof) {
        return log_chain_ordered_prob_M(prof) + log_chain_strong_prob_N(n, prof, p);
    };
    const std::size_t span = n - 2;  // a_i in {2..n-1}
    double direct_size = std::pow(static_cast<double>(span), static_cast<double>(r));
    if (r <= 4 && direct_size <= 2e6) {
        ChainProfile prof;
        prof.a.assign(r, 2);
        double best = -std::numeric_limits<double>::infinity();
        while (true) {
            best = std::max(best, value(prof));
            std::size_t i = 0;
            while (i < r && prof.a[i] == n - 1) prof.a[i++] = 2;
            if (i == r) break;
            ++prof.a[i];
        }
        return best;
    }
    ChainProfile prof;
    prof.a.assign(r, 2);
    double best = value(prof);
    for (bool improved = true; improved;) {
        improved = false;
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t ai = 2; ai <= n - 1; ++ai) {
                std::size_t old = prof.a[i];
                prof.a[i] = ai;
                double v = value(prof);
                if (v > best) { best = v; improved = true; }
                else prof.a[i] = old;
            }
        }
    }
    return best;
}

}  // namespace detail

struct LllOptions {
    std::size_t grid_points = 64;
};

/// Searches for (x, y) satisfying the local-lemma inequalities
///   P1 <= x (1-x)^D (1-y)^{D^r},  P2 <= y (1-x)^{rD} (1-y)^{r D^r},
/// where P1 covers the three bad kinds for one edge and P2 is the maximal
/// single-chain event probability. Grids are log-spaced over fixed absolute
/// ranges so the found-region is downward closed in D; the first hit in
/// scan order (x-major) wins.
inline std::optional<std::pair<double, double>> lll_check(
    std::size_t n, std::size_t r, double D, double p, LllOptions opts = {}) {
    if (D < 1.0) throw std::invalid_argument("need D >= 1");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
    const double nd = static_cast<double>(n);
    const double rd = static_cast<double>(r);
    const double log_cp = std::log1p(-p) - std::log(rd);
    double log_p1 = std::log(rd) + nd * log_cp;
    log_p1 = log_sum_exp(log_p1, std::log(rd * nd * p) + (nd - 1.0) * log_cp);
    log_p1 = log_sum_exp(log_p1, nd * std::log(p));
    const double log_p2 = detail::log_max_chain_event_prob(n, r, p);

    const double d_pow_r = std::pow(D, rd);
    auto grid = [&](double lo, double hi, std::size_t i) {
        const double t = static_cast<double>(i) / static_cast<double>(opts.grid_points - 1);
        return std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
    };
    for (std::size_t ix = 0; ix < opts.grid_points; ++ix) {
        const double x = grid(1e-12, 0.5, ix);
        for (std::size_t iy = 0; iy < opts.grid_points; ++iy) {
            const double y = grid(1e-18, 0.5, iy);
            const double rhs1 = std::log(x) + D * std::log1p(-x) + d_pow_r * std::log1p(-y);
            const double rhs2 =
                std::log(y) + rd * D * std::log1p(-x) + rd * d_pow_r * std::log1p(-y);
            if (log_p1 <= rhs1 && log_p2 <= rhs2) return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

}  // namespace hyperchroma

#endif
