#include "glaisher/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "glaisher/errors.hpp"
#include "glaisher/summation.hpp"

namespace glaisher {

std::string_view to_string(IntegrandId id) noexcept {
    switch (id) {
        case IntegrandId::classical: return "classical";
        case IntegrandId::binet_form12: return "binet_form12";
        case IntegrandId::binet_form13: return "binet_form13";
        case IntegrandId::malmsten_form18: return "malmsten_form18";
        case IntegrandId::malmsten_form19: return "malmsten_form19";
        case IntegrandId::lngamma_direct: return "lngamma_direct";
        case IntegrandId::custom: return "custom";
    }
    return "custom";
}

std::string_view to_string(TruncationMode mode) noexcept {
    switch (mode) {
        case TruncationMode::truncate: return "truncate";
        case TruncationMode::compactify: return "compactify";
        case TruncationMode::automatic: return "auto";
    }
    return "auto";
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights for kNodes[1], [3], [5], [7].
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};
constexpr int kPointsPerPanel = 15;

struct Piece {
    Evaluator g;
    double a;
    double b;
};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    std::size_t piece;
};

double checked_eval(const Evaluator& g, double x) {
    const double y = g(x);
    if (!std::isfinite(y)) {
        throw EvaluationError("integrand returned a non-finite value at x = " + std::to_string(x), x);
    }
    return y;
}

Panel gauss_kronrod(const Evaluator& g, double a, double b, std::size_t piece) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = checked_eval(g, center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    double absolute = std::fabs(kronrod);

    for (int j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        const double f1 = checked_eval(g, center - dx);
        const double f2 = checked_eval(g, center + dx);
        kronrod += kKronrodWeights[j] * (f1 + f2);
        absolute += kKronrodWeights[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1) {
            gauss += kGaussWeights[j / 2] * (f1 + f2);
        }
    }

    kronrod *= half;
    gauss *= half;
    absolute *= std::fabs(half);

    // Rounding in the 15-term sum bounds how small the estimate can honestly get.
    constexpr double kRoundoff = 10.0 * std::numeric_limits<double>::epsilon();
    const double error = std::max(std::fabs(kronrod - gauss), kRoundoff * absolute);
    return {a, b, kronrod, error, piece};
}

struct ByError {
    bool operator()(const Panel& lhs, const Panel& rhs) const noexcept {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        if (lhs.piece != rhs.piece) return lhs.piece > rhs.piece;
        return lhs.a > rhs.a;
    }
};

// Global adaptive bisection across all pieces. The refinement sequence does
// not depend on tol; tol only decides where it stops, so a tighter tolerance
// never costs fewer evaluations.
QuadratureResult adaptive(const std::vector<Piece>& pieces, double tol, std::int64_t budget) {
    std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
    std::vector<Panel> finished;
    std::int64_t evaluations = 0;
    CompensatedSum running_error;

    for (std::size_t i = 0; i < pieces.size(); ++i) {
        Panel p = gauss_kronrod(pieces[i].g, pieces[i].a, pieces[i].b, i);
        evaluations += kPointsPerPanel;
        running_error += p.error;
        queue.push(p);
    }

    while (!queue.empty() && running_error.value() > tol) {
        if (evaluations + 2 * kPointsPerPanel > budget) break;
        Panel worst = queue.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Cannot be refined further in double precision.
            queue.pop();
            finished.push_back(worst);
            continue;
        }
        queue.pop();
        const Evaluator& g = pieces[worst.piece].g;
        Panel left = gauss_kronrod(g, worst.a, mid, worst.piece);
        Panel right = gauss_kronrod(g, mid, worst.b, worst.piece);
        evaluations += 2 * kPointsPerPanel;
        running_error -= worst.error;
        running_error += left.error;
        running_error += right.error;
        queue.push(left);
        queue.push(right);
    }

    while (!queue.empty()) {
        finished.push_back(queue.top());
        queue.pop();
    }
    std::sort(finished.begin(), finished.end(), [](const Panel& lhs, const Panel& rhs) {
        if (lhs.piece != rhs.piece) return lhs.piece < rhs.piece;
        return lhs.a < rhs.a;
    });

    CompensatedSum value;
    CompensatedSum error;
    for (const Panel& p : finished) {
        value += p.value;
        error += p.error;
    }

    QuadratureResult result;
    result.value = value.value();
    result.error_estimate = error.value();
    result.evaluations = evaluations;
    result.converged = result.error_estimate <= tol;
    return result;
}

void check_tolerance(double tol) {
    if (!(tol >= 1e-14 && tol <= 1e-2)) {
        throw DomainError("quadrature tolerance must lie in [1e-14, 1e-2], got " + std::to_string(tol));
    }
}

Piece make_piece(const Evaluator& f, double a, double b, EndpointFlag endpoint) {
    if (endpoint == EndpointFlag::log_singular_at_a) {
        const double width = b - a;
        return {[&f, a, width](double u) {
                    const double u2 = u * u;
                    return f(a + width * u2 * u) * 3.0 * width * u2;
                },
                0.0, 1.0};
    }
    return {[&f](double x) { return f(x); }, a, b};
}

}  // namespace

QuadratureResult integrate_finite(const Evaluator& f, double a, double b, double tol,
                                  EndpointFlag endpoint, const QuadratureOptions& options) {
    if (!(a < b)) {
        throw DomainError("integrate_finite requires a < b");
    }
    check_tolerance(tol);
    std::vector<Piece> pieces{make_piece(f, a, b, endpoint)};
    QuadratureResult result = adaptive(pieces, tol, options.max_evaluations);
    result.truncation_T = b;
    return result;
}

double choose_truncation_point(const std::function<double(double)>& tail_bound, double target) {
    if (!(target > 0.0)) {
        throw DomainError("tail target must be positive");
    }
    double lo = 1.0;
    if (tail_bound(lo) <= target) return lo;
    double hi = 2.0;
    while (tail_bound(hi) > target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) {
            throw PolicyInfeasibleError("no truncation point meets the tail target");
        }
    }
    while (hi - lo > 0.01 * lo) {
        const double mid = 0.5 * (lo + hi);
        if (tail_bound(mid) <= target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

QuadratureResult integrate_semi_infinite(const IntegrandSpec& spec, double tol,
                                         const TruncationPolicy& policy,
                                         const QuadratureOptions& options) {
    check_tolerance(tol);
    if (spec.tail_class.kind == TailKind::compact) {
        throw DomainError("integrand '" + std::string(to_string(spec.id)) +
                          "' has compact support; use integrate_finite");
    }

    TruncationMode mode = policy.mode;
    double T = policy.T;
    if (mode == TruncationMode::automatic) {
        // Algebraic tails are never cut; exponential ones are.
        mode = spec.tail_class.kind == TailKind::algebraic ? TruncationMode::compactify
                                                           : TruncationMode::truncate;
        T = 0.0;
    }
    if (T == 0.0) {
        T = mode == TruncationMode::compactify
                ? kDefaultCompactifyPoint
                : choose_truncation_point(spec.tail_bound, policy.tail_fraction * tol);
    }
    if (!(T > 0.0)) {
        throw DomainError("truncation point must be positive");
    }

    const EndpointFlag endpoint =
        spec.limit_at_zero.log_singular ? EndpointFlag::log_singular_at_a : EndpointFlag::none;
    std::vector<Piece> pieces{make_piece(spec.eval, 0.0, T, endpoint)};

    double tail = 0.0;
    double discretization_tol = tol;
    if (mode == TruncationMode::truncate) {
        tail = spec.tail_bound(T);
        if (tail > tol && !policy.allow_tail_excess) {
            if (spec.tail_class.kind == TailKind::algebraic) {
                throw PolicyInfeasibleError(
                    "truncating the algebraic tail of '" + std::string(to_string(spec.id)) +
                    "' at T = " + std::to_string(T) + " leaves a tail bound of " +
                    std::to_string(tail) + " > tol; compactify instead");
            }
        }
        if (!policy.allow_tail_excess) {
            discretization_tol = std::max(tol - tail, 0.9 * tol);
        }
    } else {
        const Evaluator& f = spec.eval;
        pieces.push_back({[&f](double u) { return f(1.0 / u) / (u * u); }, 0.0, 1.0 / T});
    }

    QuadratureResult result = adaptive(pieces, discretization_tol, options.max_evaluations);
    result.truncation_error = tail;
    result.truncation_T = T;
    result.truncation_mode = mode;
    result.converged = result.error_estimate <= discretization_tol &&
                       (policy.allow_tail_excess || result.total_error() <= tol);
    return result;
}

}  // namespace glaisher
