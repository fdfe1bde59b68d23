#ifndef OCHRO_BOUNDS_HPP
#define OCHRO_BOUNDS_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ochro/graph.hpp"

namespace ochro {

// All logarithms here are binary.

// Root of t + log2(t) = rhs. The left side is strictly increasing on
// (0, inf) with full real range, so the root exists and is unique.
struct TSolution {
    double rhs = 0.0;
    double t = 0.0;
    double residual = 0.0;
};

inline TSolution solve_t_equation(double rhs)
{
    const auto f = [](double t) { return t + std::log2(t); };

    // For rhs >= 1 the root lies in [1, rhs]; otherwise it is below 1 and
    // f(2) = 3 > rhs. Grow the lower end downward until the sign flips.
    double hi = std::max(2.0, rhs + 1.0);
    double lo = 1.0;
    while (f(lo) > rhs)
        lo /= 2.0;

    for (int iter = 0; iter < 200 && (hi - lo) > 1e-13 * hi; ++iter) {
        const double mid = lo + (hi - lo) / 2.0;
        if (f(mid) < rhs)
            lo = mid;
        else
            hi = mid;
    }

    // a few Newton polish steps; f'(t) = 1 + 1/(t ln 2)
    double t = lo + (hi - lo) / 2.0;
    for (int iter = 0; iter < 4; ++iter) {
        const double derivative = 1.0 + 1.0 / (t * std::numbers::ln2);
        const double next = t - (f(t) - rhs) / derivative;
        if (next > 0.0 && std::isfinite(next))
            t = next;
    }

    return {rhs, t, f(t) - rhs};
}

inline double avg_degree(long long n, long long m) { return 2.0 * static_cast<double>(m) / static_cast<double>(n); }

inline TSolution solve_t(long long n, long long m)
{
    if (n < 1)
        throw std::invalid_argument("solve_t needs n >= 1");
    return solve_t_equation(avg_degree(n, m) - std::log2(static_cast<double>(n)));
}

// sqrt of the root at rhs = 0; the 0.8007... constant. Computed, not pinned.
inline double sqrt_t_at_zero()
{
    static const double value = std::sqrt(solve_t_equation(0.0).t);
    return value;
}

// Least k >= 1 with C(k,2) + n*log2(k) >= m. Counting argument over the 2^m
// orientations: k^n colourings each serve at most 2^C(k,2) of them, so any
// graph's oriented chromatic number is at least this k.
inline int ksz_lower(long long n, long long m)
{
    if (n < 1 || m < 0)
        throw std::invalid_argument("ksz_lower needs n >= 1, m >= 0");
    int k = 1;
    while (static_cast<double>(k) * (k - 1) / 2.0
            + static_cast<double>(n) * std::log2(static_cast<double>(k))
        < static_cast<double>(m))
        ++k;
    return k;
}

inline double lemma3_lower(long long n, long long m) { return std::sqrt(static_cast<double>(n) * solve_t(n, m).t); }

// sqrt(t0)*sqrt(n), applicable when the average degree reaches log2(n).
inline std::optional<double> lemma4_lower(long long n, long long m)
{
    if (avg_degree(n, m) < std::log2(static_cast<double>(n)))
        return std::nullopt;
    return sqrt_t_at_zero() * std::sqrt(static_cast<double>(n));
}

struct Lemma5Result {
    std::optional<double> value;
    std::string reason; // why absent, when absent
    bool sufficient_condition = false; // delta >= (2+eps)*log2(n)
    double t = 0.0;
};

// sqrt(eps/(1+eps) * (2m - n log2 n)) under delta >= log2 n + (1+eps) log2 t.
// Degenerate at delta <= log2 n, where the radicand is not positive.
inline Lemma5Result lemma5_lower(long long n, long long m, double eps)
{
    if (eps <= 0.0)
        throw std::invalid_argument("lemma5_lower needs eps > 0, got " + std::to_string(eps));
    Lemma5Result result;
    const double delta = avg_degree(n, m);
    const double log_n = std::log2(static_cast<double>(n));
    result.t = solve_t(n, m).t;
    result.sufficient_condition = delta >= (2.0 + eps) * log_n;
    if (delta <= log_n) {
        result.reason = "bound degenerate: average degree <= log2(n)";
        return result;
    }
    if (delta < log_n + (1.0 + eps) * std::log2(result.t)) {
        result.reason = "hypothesis fails: average degree < log2(n) + (1+eps)*log2(t)";
        return result;
    }
    result.value = std::sqrt(eps / (1.0 + eps) * (2.0 * static_cast<double>(m) - static_cast<double>(n) * log_n));
    return result;
}

// 2*Delta*sqrt(n-1); callers cap it at the trivial n.
inline double upper_mx(long long n, int max_degree)
{
    if (n < 1)
        throw std::invalid_argument("upper_mx needs n >= 1");
    return 2.0 * max_degree * std::sqrt(static_cast<double>(n - 1));
}

struct DegreeBounds {
    double lower; // 2^(Delta/2); only for regular graphs with enough vertices
    double upper; // 2*Delta^2*2^Delta; vacuous at Delta = 0
};

inline DegreeBounds degree_bounds(int max_degree)
{
    if (max_degree < 0)
        throw std::invalid_argument("degree_bounds needs Delta >= 0");
    const double d = max_degree;
    return {std::exp2(d / 2.0), 2.0 * d * d * std::exp2(d)};
}

inline int ceil_log2(long long n) { return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(n - 1))); }

struct FnBracket {
    double lower; // (n/2)*log2(n/2)
    double upper; // n*ceil(log2 n)
};

// Numeric bracket on the least arc count of an n-vertex digraph of
// pair-diameter 2; endpoints only, no construction.
inline FnBracket fn_bracket(long long n)
{
    if (n < 2)
        throw std::invalid_argument("fn_bracket needs n >= 2, got " + std::to_string(n));
    const double half = static_cast<double>(n) / 2.0;
    return {half * std::log2(half), static_cast<double>(n) * ceil_log2(n)};
}

struct HypercubeBracket {
    int d;
    double lower; // sqrt(t0) * sqrt(2^d)
    double upper; // min(2d sqrt(2^d - 1), 2^d)
    double mx_value; // the uncapped 2d sqrt(2^d - 1)
    double gap_factor; // 5d/2, the ratio the bracket leaves open
};

inline HypercubeBracket hypercube_bracket(int d)
{
    if (d < 1)
        throw std::invalid_argument("hypercube_bracket needs d >= 1");
    const double n = std::exp2(d);
    const double mx = 2.0 * d * std::sqrt(n - 1.0);
    return {d, sqrt_t_at_zero() * std::sqrt(n), std::min(mx, n), mx, 2.5 * d};
}

// integerization guards: values within 1e-9 of an integer are not bumped
inline int ceil_guarded(double x)
{
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9)
        return static_cast<int>(nearest);
    return static_cast<int>(std::ceil(x));
}

inline long long floor_guarded(double x)
{
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9)
        return static_cast<long long>(nearest);
    return static_cast<long long>(std::floor(x));
}

struct BoundsReport {
    int n = 0;
    long long m = 0;
    int max_degree = 0;
    double avg_degree = 0.0;
    double epsilon = 1.0;
    double t = 0.0;

    int ksz = 1;
    double lemma3 = 0.0;
    bool lemma3_in_regime = true; // false when avg degree < log2 n
    std::optional<double> lemma4;
    std::optional<double> lemma5;
    double degree_lb = 0.0; // informational; excluded from the bracket

    double mx = 0.0;
    double degree_ub = 0.0;
    int trivial = 0;

    int bracket_lo = 1;
    int bracket_hi = 1;
    std::vector<std::string> flags;
};

// Assemble every applicable bound for one graph. The certified bracket joins
// the valid-for-all-graphs lower bounds with the capped upper bounds; the
// regular-only degree lower bound stays out of it. For regular graphs dense
// enough for the chained regular-graph bounds, each inequality of the chain
// is checked numerically and any violation is recorded verbatim.
inline BoundsReport bounds_report(const UndirectedGraph& g, double eps = 1.0)
{
    BoundsReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.max_degree = g.max_degree();
    report.avg_degree = g.avg_degree();
    report.epsilon = eps;

    const double log_n = std::log2(static_cast<double>(report.n));
    const TSolution ts = solve_t(report.n, report.m);
    report.t = ts.t;

    report.ksz = ksz_lower(report.n, report.m);
    report.lemma3 = lemma3_lower(report.n, report.m);
    report.lemma3_in_regime = report.avg_degree >= log_n;
    if (!report.lemma3_in_regime)
        report.flags.push_back("lemma3: average degree below log2(n), outside the regime of interest");
    report.lemma4 = lemma4_lower(report.n, report.m);
    if (!report.lemma4)
        report.flags.push_back("lemma4 inapplicable: average degree < log2(n)");
    const Lemma5Result l5 = lemma5_lower(report.n, report.m, eps);
    report.lemma5 = l5.value;
    if (!l5.value)
        report.flags.push_back("lemma5 inapplicable: " + l5.reason);

    const DegreeBounds db = degree_bounds(report.max_degree);
    report.degree_lb = db.lower;
    report.degree_ub = db.upper;
    report.flags.push_back("degree_lb requires a regular graph with sufficiently many vertices; not in bracket");
    if (report.max_degree == 0)
        report.flags.push_back("degree_ub and mx vacuous at max degree 0; not in bracket");

    report.mx = upper_mx(report.n, report.max_degree);
    report.trivial = report.n;

    int lo = std::max(1, report.ksz);
    lo = std::max(lo, ceil_guarded(report.lemma3));
    if (report.lemma4)
        lo = std::max(lo, ceil_guarded(*report.lemma4));
    if (report.lemma5)
        lo = std::max(lo, ceil_guarded(*report.lemma5));

    long long hi = report.trivial;
    if (report.max_degree >= 1) {
        hi = std::min(hi, floor_guarded(report.mx));
        hi = std::min(hi, floor_guarded(report.degree_ub));
    }
    report.bracket_lo = lo;
    report.bracket_hi = static_cast<int>(hi);

    // chained bounds for regular graphs: sqrt(eps/(2+eps)*Delta*n)
    // <= sqrt(eps/(1+eps)*(Delta-log2 n)*n) <= chromatic value <= mx
    bool regular = true;
    for (int v = 0; v < report.n; ++v)
        if (g.degree(v) != report.max_degree) {
            regular = false;
            break;
        }
    if (regular && report.max_degree >= (2.0 + eps) * log_n) {
        const double first = std::sqrt(eps / (2.0 + eps) * report.max_degree * report.n);
        const double second = std::sqrt(eps / (1.0 + eps) * (report.max_degree - log_n) * report.n);
        const double tol = 1e-9 * std::max(1.0, std::max(first, second));
        if (first <= second + tol && second <= report.mx + tol)
            report.flags.push_back("regular chain verified: " + std::to_string(first)
                + " <= " + std::to_string(second) + " <= " + std::to_string(report.mx));
        else
            report.flags.push_back("regular chain VIOLATION: first=" + std::to_string(first)
                + " second=" + std::to_string(second) + " mx=" + std::to_string(report.mx));
    } else if (regular) {
        report.flags.push_back("regular chain skipped: max degree < (2+eps)*log2(n)");
    }

    return report;
}

} // namespace ochro

#endif // OCHRO_BOUNDS_HPP
