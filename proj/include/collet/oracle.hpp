#pragma once

// Planar Euler-Bernoulli frame model of a jaw, used as an independent check
// on the Castigliano step. Each node carries (u, v, rotation); straight
// two-node elements join consecutive nodes along the ellipse and node 0 is
// clamped.

#include <vector>

#include <Eigen/Core>

#include "collet/geometry.hpp"
#include "collet/mechanics.hpp"
#include "collet/solver.hpp"

namespace collet {

struct OracleElement {
    int i = 0;
    int j = 0;
    double I = 0;  ///< second moment [mm^4]
    double A = 0;  ///< area used for axial stiffness [mm^2]
    double E = 0;  ///< modulus [MPa]
};

struct OracleMesh {
    std::vector<Eigen::Vector2d> nodes;
    std::vector<double> theta;  ///< polar angle of each node (empty for ad-hoc meshes)
    std::vector<OracleElement> elements;
    int contact_node = 0;
    int tip_node = 0;
};

/// How element axial stiffness is chosen.
enum class AxialModel {
    /// E A = factor * 12 E I / L^2, i.e. axial stiffness `factor` times the
    /// element's transverse stiffness. Stretching is then negligible against
    /// bending, as in the analytical model.
    rigid_dominant,
    /// A = R_bar * alpha * t, the real arc section area.
    physical,
};

struct MeshOptions {
    AxialModel axial = AxialModel::rigid_dominant;
    double axial_factor = 1.0;
};

/// Frame element stiffness in global coordinates, DOF order (u_i, v_i, rz_i, u_j, v_j, rz_j).
template <typename Scalar>
Eigen::Matrix<Scalar, 6, 6> frame_element_stiffness(const Eigen::Matrix<Scalar, 2, 1>& p,
                                                    const Eigen::Matrix<Scalar, 2, 1>& q, Scalar E,
                                                    Scalar I, Scalar A) {
    const Eigen::Matrix<Scalar, 2, 1> d = q - p;
    const Scalar L = d.norm();
    const Scalar c = d.x() / L;
    const Scalar s = d.y() / L;
    const Scalar ea = E * A / L;
    const Scalar k1 = 12 * E * I / (L * L * L);
    const Scalar k2 = 6 * E * I / (L * L);
    const Scalar k3 = 4 * E * I / L;
    const Scalar k4 = 2 * E * I / L;

    Eigen::Matrix<Scalar, 6, 6> k;
    k << ea, 0, 0, -ea, 0, 0,
         0, k1, k2, 0, -k1, k2,
         0, k2, k3, 0, -k2, k4,
         -ea, 0, 0, ea, 0, 0,
         0, -k1, -k2, 0, k1, -k2,
         0, k2, k4, 0, -k2, k3;

    Eigen::Matrix<Scalar, 6, 6> T = Eigen::Matrix<Scalar, 6, 6>::Zero();
    Eigen::Matrix<Scalar, 3, 3> R;
    R << c, s, 0,
         -s, c, 0,
         0, 0, 1;
    T.template topLeftCorner<3, 3>() = R;
    T.template bottomRightCorner<3, 3>() = R;
    return T.transpose() * k * T;
}

/// Area giving an axial stiffness `factor` times the transverse stiffness 12 E I / L^3.
double rigid_axial_area(double I, double length, double factor = 1.0);

/// Mesh of the jaw on the current ellipse: n_elems elements at uniform theta
/// spacing on [gamma, pi/2], with the node nearest the contact angle moved
/// onto it. Element I is the centroidal section at the element's mid angle.
OracleMesh build_mesh(const ColletGeometry& geom, const EllipseState& state, int n_elems,
                      const MeshOptions& options = {});

/// Mesh through arbitrary nodes with uniform section properties.
OracleMesh polyline_mesh(std::vector<Eigen::Vector2d> nodes, double E, double I, double A);

struct NodalLoad {
    int node = 0;
    double fx = 0;
    double fy = 0;
    double moment = 0;
};

struct OracleResult {
    std::vector<Eigen::Vector3d> displacements;  ///< (u, v, rotation) per node
    double contact_v = 0;                        ///< downward deflection of the contact node
    double tip_v = 0;                            ///< downward deflection of the tip node
};

/// Linear static solve with the first node clamped.
OracleResult solve_static(const OracleMesh& mesh, const std::vector<NodalLoad>& loads);

/// Sum over elements of u_e^T K_e u_e / 2.
double internal_energy(const OracleMesh& mesh, const OracleResult& result);

/// Work of the applied loads through the computed displacements, halved.
double external_work(const std::vector<NodalLoad>& loads, const OracleResult& result);

struct StepValidation {
    double contact_err = 0;
    double tip_err = 0;
    bool absolute = false;  ///< errors are absolute (mm) because the gap was zero
    double contact_v = 0;
    double tip_v = 0;
};

inline constexpr int kDefaultOracleElements = 400;

/// Applies the step's contact forces (both pushing the jaw inward) at the
/// contact node and compares the frame's contact and tip deflections with the
/// imposed gap and the analytical tip increment.
StepValidation validate_step(const ColletGeometry& geom, const EllipseState& state,
                             const ContactSolution& solution, int n_elems = kDefaultOracleElements,
                             const MeshOptions& options = {});

struct StepCheck {
    int step = 0;
    double delta_cum = 0;
    double delta_tip_cum = 0;
    ContactSolution solution;
    StepValidation validation;
};

/// Re-solves each step of a march from its starting ellipse and validates it.
std::vector<StepCheck> validate_curve(const DeflectionCurve& curve, int n_elems = kDefaultOracleElements,
                                      const MeshOptions& options = {});

}  // namespace collet
