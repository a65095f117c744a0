#include "risradar/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "risradar/errors.hpp"
#include "risradar/numerics.hpp"

namespace risradar {

namespace {
constexpr double kCoincidentEps = 1e-12; // meters
constexpr double kOrthoTol = 1e-9;
} // namespace

Vec3 normalized(const Vec3& v) {
    const double n = v.norm();
    if (n <= kCoincidentEps) {
        throw GeometryError("cannot normalize a near-zero vector");
    }
    return v * (1.0 / n);
}

PanelFrame make_panel_frame(const Vec3& origin, const Vec3& u_axis, const Vec3& v_axis) {
    const Vec3 u = normalized(u_axis);
    const Vec3 v = normalized(v_axis);
    if (std::abs(u.dot(v)) > kOrthoTol) {
        throw GeometryError("panel frame axes are not orthogonal");
    }
    return PanelFrame{origin, u, v, normalized(u.cross(v))};
}

Vec3 cell_center(const PanelFrame& frame, int j, int k, double rx_m, double ry_m) {
    if (j < 1 || k < 1) {
        throw std::invalid_argument("cell indices are 1-based");
    }
    if (rx_m <= 0.0 || ry_m <= 0.0) {
        throw std::invalid_argument("cell dimensions must be positive");
    }
    return frame.origin + (j - 0.5) * rx_m * frame.u_axis + (k - 0.5) * ry_m * frame.v_axis;
}

ElementGeometry element_geometry(const Vec3& from_cell, const Vec3& to_point, const PanelFrame& frame) {
    const Vec3 d = to_point - from_cell;
    const double dist = d.norm();
    if (dist <= kCoincidentEps) {
        throw GeometryError("coincident points: cannot derive link geometry");
    }
    const Vec3 u = d * (1.0 / dist);
    const double cos_theta = std::clamp(u.dot(frame.normal), -1.0, 1.0);
    double phi = std::atan2(u.dot(frame.v_axis), u.dot(frame.u_axis));
    if (phi == -kPi) {
        phi = kPi;
    }
    return ElementGeometry{dist, std::acos(cos_theta), phi};
}

double far_field_distance(int n_cells_max, double spacing_m, double wavelength_m) {
    if (n_cells_max < 1) {
        throw std::invalid_argument("far_field_distance: cell count must be >= 1");
    }
    if (spacing_m <= 0.0 || wavelength_m <= 0.0) {
        throw std::invalid_argument("far_field_distance: spacing and wavelength must be positive");
    }
    const double aperture = n_cells_max * spacing_m;
    return 2.0 * aperture * aperture / wavelength_m;
}

} // namespace risradar
