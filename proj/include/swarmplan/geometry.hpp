#pragma once

#include <cstddef>
#include <vector>

#include "swarmplan/vec3.hpp"

namespace swarmplan {

// Nondecreasing knot sequence u_0..u_m. Construction validates monotonicity
// and finiteness; clamped form is produced by make_clamped_knots().
class KnotVector {
public:
    explicit KnotVector(std::vector<double> knots);

    const std::vector<double>& values() const { return knots_; }
    double operator[](std::size_t i) const { return knots_[i]; }
    std::size_t size() const { return knots_.size(); }

private:
    std::vector<double> knots_;
};

// Clamped uniform knot vector on [0, 1]: length n_control + order, first and
// last knot repeated `order` times, interior knots equally spaced.
// Requires n_control >= order >= 2.
KnotVector make_clamped_knots(int n_control, int order);

// B-spline basis N_{i,order}(u) by the Cox-de Boor recursion, with any 0/0
// term defined as 0. The evaluation domain is [u_{order-1}, u_{n+1}]; its
// right endpoint is included (the final half-open interval is closed there).
// Throws DomainError for u outside the domain.
double basis(std::size_t i, int order, double u, const KnotVector& knots);

// Discretized curve: positions at strictly increasing parameters, optionally
// paired with first-derivative vectors at the same parameters.
struct SampledPath {
    std::vector<double> params;
    std::vector<Vec3> positions;
    std::vector<Vec3> velocities; // empty unless sampled with velocities

    std::size_t size() const { return params.size(); }
    bool has_velocities() const { return !velocities.empty(); }
};

// Order-k clamped or general B-spline curve over 3D control points.
// Immutable after construction; all member calls are pure and thread-safe.
class BSplineTrajectory {
public:
    BSplineTrajectory(int order, std::vector<Vec3> control_points, KnotVector knots);

    // Convenience: clamped uniform knots derived from the control count.
    static BSplineTrajectory clamped(int order, std::vector<Vec3> control_points);

    int order() const { return order_; }
    const std::vector<Vec3>& control_points() const { return control_; }
    const KnotVector& knots() const { return knots_; }
    double domain_start() const;
    double domain_end() const;

    // Curve point C(u) = sum_i P_i N_{i,k}(u). Throws DomainError outside
    // [domain_start, domain_end].
    Vec3 evaluate(double u) const;

    // First derivative dC/du, computed from the derivative spline of scaled
    // control-point differences (exact, not finite differences).
    Vec3 velocity(double u) const;

    // n_samples points at equally spaced parameters spanning the full
    // domain, endpoints included. Requires n_samples >= 2.
    SampledPath sample(int n_samples, bool with_velocity = false) const;

private:
    int order_;
    std::vector<Vec3> control_;
    KnotVector knots_;
    std::vector<Vec3> deriv_control_; // Q_i = (k-1)(P_{i+1}-P_i)/(u_{i+k}-u_{i+1})
};

// Chord-length of a sampled path: sum of distances between consecutive samples.
double arc_length(const SampledPath& path);

} // namespace swarmplan
