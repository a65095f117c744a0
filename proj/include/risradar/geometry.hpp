#pragma once

#include <cmath>

namespace risradar {

/// Cartesian position or direction in the shared world frame, meters.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& r) const { return {x + r.x, y + r.y, z + r.z}; }
    constexpr Vec3 operator-(const Vec3& r) const { return {x - r.x, y - r.y, z - r.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    friend constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

    constexpr double dot(const Vec3& r) const { return x * r.x + y * r.y + z * r.z; }

    constexpr Vec3 cross(const Vec3& r) const {
        return {y * r.z - z * r.y, z * r.x - x * r.z, x * r.y - y * r.x};
    }

    double norm() const { return std::sqrt(dot(*this)); }
};

/// Normalizes v. Throws GeometryError when |v| is too small to define a
/// direction.
Vec3 normalized(const Vec3& v);

/// Local coordinate system of a rectangular panel. The origin sits at the
/// panel corner; u_axis and v_axis span the cell grid; the outward normal
/// is u_axis x v_axis.
struct PanelFrame {
    Vec3 origin;
    Vec3 u_axis;
    Vec3 v_axis;
    Vec3 normal;
};

/// Builds a PanelFrame from a corner and two in-plane axes. The axes are
/// normalized here; they must be orthogonal within 1e-9 or a GeometryError
/// is thrown. The normal is derived as u x v.
PanelFrame make_panel_frame(const Vec3& origin, const Vec3& u_axis, const Vec3& v_axis);

/// Distance and direction of a point as seen from one cell, expressed in
/// the panel's local frame: theta is the polar angle off the outward
/// normal, phi the azimuth of the in-plane projection.
struct ElementGeometry {
    double distance = 0.0; ///< meters, > 0
    double theta = 0.0;    ///< radians, [0, pi]
    double phi = 0.0;      ///< radians, (-pi, pi]
};

/// Center position of the 1-based cell (j, k): origin + (j - 1/2) rx u + (k - 1/2) ry v.
Vec3 cell_center(const PanelFrame& frame, int j, int k, double rx_m, double ry_m);

/// Range and local-frame look angles from a cell (or any point on the
/// panel) to a world point. Throws GeometryError for coincident points.
ElementGeometry element_geometry(const Vec3& from_cell, const Vec3& to_point, const PanelFrame& frame);

/// Minimum range for the plane-wave approximation over an aperture of
/// n_cells_max * spacing: 2 D^2 / lambda.
double far_field_distance(int n_cells_max, double spacing_m, double wavelength_m);

/// Center-to-center link geometry of a two-panel scenario. Angles carry
/// the frame they are measured in: theta_r/phi_r at panel 1 toward the
/// radar, theta_t/phi_t at panel 2 toward the target, theta_ris/phi_ris at
/// panel 2 toward panel 1 (the pair compared against theta_t/phi_t for
/// alignment), and theta_ris_at_1/phi_ris_at_1 at panel 1 toward panel 2.
struct CenterGeometry {
    double r1 = 0.0;    ///< radar to panel-1 center, meters
    double r2 = 0.0;    ///< panel-2 center to target, meters
    double r_ris = 0.0; ///< panel-1 center to panel-2 center, meters
    double theta_r = 0.0;
    double phi_r = 0.0;
    double theta_t = 0.0;
    double phi_t = 0.0;
    double theta_ris = 0.0;
    double phi_ris = 0.0;
    double theta_ris_at_1 = 0.0;
    double phi_ris_at_1 = 0.0;
};

} // namespace risradar
