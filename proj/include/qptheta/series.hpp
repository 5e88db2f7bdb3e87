#ifndef QPTHETA_SERIES_HPP
#define QPTHETA_SERIES_HPP

#include "qptheta/core.hpp"

#include <cmath>
#include <string>

namespace qptheta
{

struct SeriesResult
{
    Complex value;
    int terms = 0;           // number of indices summed
    double tail_bound = 0.0; // geometric bound on the discarded tails
};

namespace detail
{

/// Sums term(n) over all integers n, symmetrically outward from `center`.
///
/// Stops once the newest term on each side is below 0.1 * tol and has
/// shrunk by at least a factor 2 relative to its predecessor; for
/// Gaussian-decaying summands the ratios keep falling, so each tail is
/// bounded by t r / (1 - r).
template <typename Term>
SeriesResult sum_outward(long long center, Term &&term, const TruncationBudget &budget, const char *what)
{
    budget.validate();
    auto checked = [&](long long n) {
        const Complex t = term(n);
        if (!is_finite(t)) {
            throw RangeError(std::string(what) + ": series term " + std::to_string(n) + " is not finite");
        }
        return t;
    };

    Complex total = checked(center);
    double prev_plus = std::abs(total);
    double prev_minus = prev_plus;
    const double small = 0.1 * budget.tol;
    for (int j = 1; j <= budget.max_terms; ++j) {
        const Complex tp = checked(center + j);
        const Complex tm = checked(center - j);
        total += tp + tm;
        const double ap = std::abs(tp);
        const double am = std::abs(tm);
        const double rp = prev_plus > 0.0 ? ap / prev_plus : 0.0;
        const double rm = prev_minus > 0.0 ? am / prev_minus : 0.0;
        prev_plus = ap;
        prev_minus = am;
        if (ap < small && am < small && rp < 0.5 && rm < 0.5) {
            const double bound = ap * rp / (1.0 - rp) + am * rm / (1.0 - rm);
            if (bound < budget.tol) {
                if (!is_finite(total)) {
                    throw RangeError(std::string(what) + ": sum is not finite");
                }
                return {total, 2 * j + 1, bound};
            }
        }
    }
    throw TruncationError(std::string(what) + ": tail bound above tol after " + std::to_string(budget.max_terms) +
                              " terms per side",
                          prev_plus + prev_minus);
}

/// Rounds to the nearest integer index, clamped away from overflow.
inline long long center_index(double x)
{
    constexpr double limit = 1e15;
    if (!std::isfinite(x)) {
        return 0;
    }
    return static_cast<long long>(std::llround(std::fmax(-limit, std::fmin(limit, x))));
}

} // namespace detail

} // namespace qptheta

#endif
