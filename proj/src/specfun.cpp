#include "qslbath/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace qslbath {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (positive abscissae).
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Interval {
    double a, b;
    double value;
    double error;
};

bool operator<(const Interval& lhs, const Interval& rhs) { return lhs.error < rhs.error; }

Interval gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = kKronrodWeights[7] * f(mid);
    double gauss = kGaussWeights[3] * f(mid);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double pair = f(mid - dx) + f(mid + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

QuadratureResult adapt(const std::function<double(double)>& f,
                       const std::vector<std::pair<double, double>>& seeds, double tolerance,
                       long max_evaluations) {
    std::priority_queue<Interval> queue;
    QuadratureResult result;
    double value = 0.0;
    double error = 0.0;
    for (const auto& [a, b] : seeds) {
        Interval iv = gauss_kronrod(f, a, b);
        result.evaluations += 15;
        value += iv.value;
        error += iv.error;
        queue.push(iv);
    }
    const auto goal = [&] { return std::max(tolerance, tolerance * std::abs(value)); };
    while (error > goal() && result.evaluations + 30 <= max_evaluations) {
        Interval worst = queue.top();
        if (worst.b - worst.a < 1e-14 * (std::abs(worst.a) + 1.0)) break;
        queue.pop();
        value -= worst.value;
        error -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        for (Interval iv : {gauss_kronrod(f, worst.a, mid), gauss_kronrod(f, mid, worst.b)}) {
            result.evaluations += 15;
            value += iv.value;
            error += iv.error;
            queue.push(iv);
        }
    }
    result.value = value;
    result.error_estimate = error;
    result.converged = std::isfinite(value) && error <= goal();
    return result;
}

}  // namespace

QuadratureResult quad_finite(const std::function<double(double)>& f, double a, double b,
                             double tolerance) {
    if (!(b >= a)) throw std::invalid_argument("quad_finite: b must be >= a");
    if (a == b) return {0.0, 0.0, 0, true};
    return adapt(f, {{a, b}}, tolerance, 200000);
}

QuadratureResult quad_semiinf(const std::function<double(double)>& f, double tolerance,
                              double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("quad_semiinf: scale must be positive");
    // Tail substitution x = scale / u maps [scale, inf) onto (0, 1].
    const auto tail = [&f, scale](double u) {
        const double x = scale / u;
        return f(x) * x / u;
    };
    QuadratureResult head = adapt(f, {{0.0, 0.5 * scale}, {0.5 * scale, scale}}, 0.5 * tolerance,
                                  100000);
    QuadratureResult back = adapt(tail, {{0.0, 0.5}, {0.5, 1.0}}, 0.5 * tolerance, 100000);
    QuadratureResult result;
    result.value = head.value + back.value;
    result.error_estimate = head.error_estimate + back.error_estimate;
    result.evaluations = head.evaluations + back.evaluations;
    result.converged = head.converged && back.converged;
    return result;
}

namespace {

// B_2 .. B_16
constexpr double kBernoulli[8] = {1.0 / 6.0,     -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
                                  5.0 / 66.0,    -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0};
constexpr double kAsymptoticThreshold = 12.0;

double trigamma_asymptotic(double z) {
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    double sum = inv + 0.5 * inv2;
    double power = inv2 * inv;  // 1/z^{2k+1} for k = 1
    for (double b2k : kBernoulli) {
        sum += b2k * power;
        power *= inv2;
    }
    return sum;
}

double pentagamma_asymptotic(double z) {
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    const double inv3 = inv2 * inv;
    double sum = 2.0 * inv3 + 3.0 * inv2 * inv2;
    double power = inv3 * inv2;  // 1/z^{2k+3} for k = 1
    for (int k = 1; k <= 8; ++k) {
        sum += (2 * k + 1) * (2 * k + 2) * kBernoulli[k - 1] * power;
        power *= inv2;
    }
    return sum;
}

}  // namespace

double polygamma(int order, double z) {
    if (order != 1 && order != 3) {
        throw std::invalid_argument("polygamma: only orders 1 and 3 are implemented");
    }
    if (!(z > 0.0)) {
        throw std::domain_error("polygamma: requires z > 0, got z = " + std::to_string(z));
    }
    double shifted = 0.0;
    while (z < kAsymptoticThreshold) {
        const double z2 = z * z;
        shifted += order == 1 ? 1.0 / z2 : 6.0 / (z2 * z2);
        z += 1.0;
    }
    return shifted + (order == 1 ? trigamma_asymptotic(z) : pentagamma_asymptotic(z));
}

}  // namespace qslbath
