#include "swarmplan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swarmplan/errors.hpp"

namespace swarmplan {

namespace {

// Index of the knot span containing u: largest s in [order-1, n] with
// u_s <= u, except that u at the domain end maps to the last nondegenerate
// span so the endpoint stays evaluable.
std::size_t find_span(const std::vector<double>& knots, int order, double u) {
    const std::size_t n = knots.size() - 1 - static_cast<std::size_t>(order); // last control index
    const std::size_t lo = static_cast<std::size_t>(order - 1);
    if (u >= knots[n + 1]) {
        std::size_t s = n;
        while (s > lo && knots[s] == knots[n + 1]) --s;
        return s;
    }
    std::size_t low = lo, high = n;
    while (low < high) {
        std::size_t mid = (low + high + 1) / 2;
        if (knots[mid] <= u) low = mid;
        else high = mid - 1;
    }
    return low;
}

// Nonzero basis values N_{span-degree+r, degree+1}(u) for r = 0..degree,
// by the standard triangular scheme.
void basis_row(const std::vector<double>& knots, int degree, std::size_t span, double u,
               double* out) {
    double left[16], right[16];
    out[0] = 1.0;
    for (int j = 1; j <= degree; ++j) {
        left[j] = u - knots[span + 1 - static_cast<std::size_t>(j)];
        right[j] = knots[span + static_cast<std::size_t>(j)] - u;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            const double temp = out[r] / (right[r + 1] + left[j - r]);
            out[r] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        out[j] = saved;
    }
}

constexpr int kMaxOrder = 16;

void check_domain(double u, double lo, double hi) {
    if (!(u >= lo && u <= hi))
        throw DomainError("parameter " + std::to_string(u) + " outside evaluation domain [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// Cox-de Boor recursion with the 0/0-as-0 convention. `u_end` is the
// evaluation-domain end; the order-1 interval whose right edge equals u_end
// is closed there.
double cox_de_boor(std::size_t i, int order, double u, const std::vector<double>& knots,
                   double u_end) {
    if (order == 1) {
        if (knots[i] <= u && u < knots[i + 1]) return 1.0;
        if (u == u_end && knots[i] < u_end && knots[i + 1] >= u_end) return 1.0;
        return 0.0;
    }
    const std::size_t k = static_cast<std::size_t>(order);
    double acc = 0.0;
    const double d1 = knots[i + k - 1] - knots[i];
    if (d1 > 0.0) acc += (u - knots[i]) / d1 * cox_de_boor(i, order - 1, u, knots, u_end);
    const double d2 = knots[i + k] - knots[i + 1];
    if (d2 > 0.0) acc += (knots[i + k] - u) / d2 * cox_de_boor(i + 1, order - 1, u, knots, u_end);
    return acc;
}

} // namespace

KnotVector::KnotVector(std::vector<double> knots) : knots_(std::move(knots)) {
    if (knots_.size() < 2) throw ConfigError("knot vector needs at least 2 knots");
    for (std::size_t j = 0; j + 1 < knots_.size(); ++j) {
        if (!std::isfinite(knots_[j]) || knots_[j] > knots_[j + 1])
            throw ConfigError("knot vector must be nondecreasing and finite");
    }
    if (!std::isfinite(knots_.back())) throw ConfigError("knot vector must be nondecreasing and finite");
}

KnotVector make_clamped_knots(int n_control, int order) {
    if (order < 2) throw ConfigError("spline order must be >= 2");
    if (n_control < order)
        throw ConfigError("need at least `order` control points (" + std::to_string(n_control) +
                          " < " + std::to_string(order) + ")");
    const int interior = n_control - order;
    std::vector<double> knots;
    knots.reserve(static_cast<std::size_t>(n_control + order));
    for (int j = 0; j < order; ++j) knots.push_back(0.0);
    for (int j = 1; j <= interior; ++j)
        knots.push_back(static_cast<double>(j) / static_cast<double>(interior + 1));
    for (int j = 0; j < order; ++j) knots.push_back(1.0);
    return KnotVector(std::move(knots));
}

double basis(std::size_t i, int order, double u, const KnotVector& knots) {
    if (order < 1) throw ConfigError("basis order must be >= 1");
    const std::size_t m = knots.size() - 1;
    if (i + static_cast<std::size_t>(order) > m)
        throw ConfigError("basis index out of range for knot vector");
    const double lo = knots[static_cast<std::size_t>(order - 1)];
    const double hi = knots[m - static_cast<std::size_t>(order) + 1];
    check_domain(u, lo, hi);
    return cox_de_boor(i, order, u, knots.values(), hi);
}

BSplineTrajectory::BSplineTrajectory(int order, std::vector<Vec3> control_points, KnotVector knots)
    : order_(order), control_(std::move(control_points)), knots_(std::move(knots)) {
    if (order_ < 2) throw ConfigError("spline order must be >= 2");
    if (order_ > kMaxOrder) throw ConfigError("spline order too large");
    if (control_.size() < static_cast<std::size_t>(order_))
        throw ConfigError("need at least `order` control points");
    if (knots_.size() != control_.size() + static_cast<std::size_t>(order_))
        throw ConfigError("knot count must equal control count + order");
    for (const Vec3& p : control_)
        if (!p.finite()) throw ConfigError("control points must be finite");
    if (!(domain_start() < domain_end()))
        throw ConfigError("evaluation domain is empty");

    // Derivative spline control points, order k-1 over the same knots with
    // indices shifted by one; zero-span differences fall back to 0.
    const int k = order_;
    deriv_control_.resize(control_.size() - 1);
    for (std::size_t i = 0; i + 1 < control_.size(); ++i) {
        const double span = knots_[i + static_cast<std::size_t>(k)] - knots_[i + 1];
        deriv_control_[i] = span > 0.0 ? (static_cast<double>(k - 1) / span) * (control_[i + 1] - control_[i])
                                       : Vec3{};
    }
}

BSplineTrajectory BSplineTrajectory::clamped(int order, std::vector<Vec3> control_points) {
    KnotVector knots = make_clamped_knots(static_cast<int>(control_points.size()), order);
    return BSplineTrajectory(order, std::move(control_points), std::move(knots));
}

double BSplineTrajectory::domain_start() const {
    return knots_[static_cast<std::size_t>(order_ - 1)];
}

double BSplineTrajectory::domain_end() const {
    return knots_[control_.size()];
}

Vec3 BSplineTrajectory::evaluate(double u) const {
    check_domain(u, domain_start(), domain_end());
    const std::vector<double>& knots = knots_.values();
    const int degree = order_ - 1;
    const std::size_t span = find_span(knots, order_, u);
    double row[kMaxOrder];
    basis_row(knots, degree, span, u, row);
    Vec3 point;
    for (int r = 0; r <= degree; ++r)
        point += row[r] * control_[span - static_cast<std::size_t>(degree) + static_cast<std::size_t>(r)];
    return point;
}

Vec3 BSplineTrajectory::velocity(double u) const {
    check_domain(u, domain_start(), domain_end());
    const std::vector<double>& knots = knots_.values();
    const int degree = order_ - 2; // derivative spline degree
    const std::size_t span = find_span(knots, order_, u);
    double row[kMaxOrder];
    // Basis of the derivative spline equals N_{i+1, k-1} over the original
    // knots; the span index carries over because the domain is shared.
    basis_row(knots, degree, span, u, row);
    Vec3 vel;
    for (int r = 0; r <= degree; ++r)
        vel += row[r] * deriv_control_[span - 1 - static_cast<std::size_t>(degree) + static_cast<std::size_t>(r)];
    return vel;
}

SampledPath BSplineTrajectory::sample(int n_samples, bool with_velocity) const {
    if (n_samples < 2) throw ConfigError("n_samples must be >= 2");
    const double lo = domain_start();
    const double hi = domain_end();
    const double step = (hi - lo) / static_cast<double>(n_samples - 1);
    SampledPath path;
    path.params.reserve(static_cast<std::size_t>(n_samples));
    path.positions.reserve(static_cast<std::size_t>(n_samples));
    if (with_velocity) path.velocities.reserve(static_cast<std::size_t>(n_samples));
    for (int s = 0; s < n_samples; ++s) {
        const double u = (s == n_samples - 1) ? hi : lo + step * static_cast<double>(s);
        path.params.push_back(u);
        path.positions.push_back(evaluate(u));
        if (with_velocity) path.velocities.push_back(velocity(u));
    }
    return path;
}

double arc_length(const SampledPath& path) {
    if (path.size() < 2) throw InputError("arc_length needs at least 2 samples");
    double total = 0.0;
    for (std::size_t s = 0; s + 1 < path.positions.size(); ++s)
        total += distance(path.positions[s], path.positions[s + 1]);
    return total;
}

} // namespace swarmplan
