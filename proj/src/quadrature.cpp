#include "conevol/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "conevol/errors.hpp"

namespace conevol::oracle {

namespace {

// Kronrod abscissae on [-1, 1] (positive half); odd indices are the Gauss nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double f_center = f(center);
  double kronrod = f_center * kKronrodWeights[7];
  double gauss = f_center * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double tol, long budget) {
  if (!(a <= b)) throw DomainError("integrate_adaptive: requires a <= b");
  if (!(tol > 0.0)) throw DomainError("integrate_adaptive: tol must be > 0");
  if (budget < 15) throw DomainError("integrate_adaptive: budget must be >= 15");

  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }

  std::priority_queue<Segment> heap;
  heap.push(gauss_kronrod_15(f, a, b));
  long evaluations = 15;
  double total_error = heap.top().error;

  bool resolvable = true;
  while (total_error > tol && evaluations + 30 <= budget) {
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    // Stop once bisection can no longer produce distinct nodes.
    const double width = worst.b - worst.a;
    if (width <= 64.0 * std::numeric_limits<double>::epsilon() *
                     std::max(std::abs(worst.a), std::abs(worst.b))) {
      resolvable = false;
      break;
    }
    heap.pop();
    const Segment left = gauss_kronrod_15(f, worst.a, mid);
    const Segment right = gauss_kronrod_15(f, mid, worst.b);
    evaluations += 30;
    heap.push(left);
    heap.push(right);
    total_error += left.error + right.error - worst.error;
  }

  // Re-sum from the segments to shed drift in the running totals.
  std::vector<Segment> segments;
  segments.reserve(heap.size());
  while (!heap.empty()) {
    segments.push_back(heap.top());
    heap.pop();
  }
  double value = 0.0;
  double error = 0.0;
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    value += it->value;
    error += it->error;
  }

  out.value = value;
  out.error_estimate = error;
  out.evaluations = evaluations;
  out.converged = resolvable && error <= tol;
  return out;
}

}  // namespace conevol::oracle
