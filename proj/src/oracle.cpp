#include "collet/oracle.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "collet/section.hpp"

namespace collet {

double rigid_axial_area(double I, double length, double factor) {
    return factor * 12.0 * I / (length * length);
}

OracleMesh build_mesh(const ColletGeometry& geom, const EllipseState& state, int n_elems,
                      const MeshOptions& options) {
    if (n_elems < 16) {
        throw ValidationError("build_mesh: at least 16 elements required");
    }
    const double a = state.a;
    const double b = state.b;
    const double lo = geom.gamma;
    const double hi = std::numbers::pi / 2;
    const double beta = contact_angle(a, b, geom.d);

    OracleMesh mesh;
    mesh.theta.resize(n_elems + 1);
    for (int i = 0; i <= n_elems; ++i) {
        mesh.theta[i] = i == n_elems ? hi : lo + (hi - lo) * i / n_elems;
    }
    const double h = (hi - lo) / n_elems;
    int snap = static_cast<int>(std::lround((beta - lo) / h));
    snap = std::clamp(snap, 1, n_elems);
    mesh.theta[snap] = beta;
    mesh.contact_node = snap;
    mesh.tip_node = n_elems;

    mesh.nodes.reserve(n_elems + 1);
    for (double th : mesh.theta) {
        const double r = radius_at(a, b, th);
        mesh.nodes.emplace_back(r * std::cos(th), r * std::sin(th));
    }
    mesh.elements.reserve(n_elems);
    for (int e = 0; e < n_elems; ++e) {
        const double mid = (mesh.theta[e] + mesh.theta[e + 1]) / 2;
        const SectionProperties s = section_at(geom, state, mid);
        const double length = (mesh.nodes[e + 1] - mesh.nodes[e]).norm();
        const double area = options.axial == AxialModel::physical
                                ? s.area
                                : rigid_axial_area(s.I_c, length, options.axial_factor);
        mesh.elements.push_back({e, e + 1, s.I_c, area, geom.E});
    }
    return mesh;
}

OracleMesh polyline_mesh(std::vector<Eigen::Vector2d> nodes, double E, double I, double A) {
    if (nodes.size() < 2) {
        throw ValidationError("polyline_mesh: need at least two nodes");
    }
    OracleMesh mesh;
    mesh.nodes = std::move(nodes);
    const int n = static_cast<int>(mesh.nodes.size());
    for (int e = 0; e + 1 < n; ++e) {
        mesh.elements.push_back({e, e + 1, I, A, E});
    }
    mesh.contact_node = n - 1;
    mesh.tip_node = n - 1;
    return mesh;
}

namespace {

// A clamped chain of frame elements has a condition number growing like n^4,
// which costs most of double precision at a few hundred elements. Assembly,
// factorization and energies therefore run in extended precision.
using Real = long double;
using VectorL = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

Eigen::Matrix<Real, 6, 1> element_dofs(const OracleElement& el, const OracleResult& result) {
    Eigen::Matrix<Real, 6, 1> u;
    u << result.displacements[el.i].cast<Real>(), result.displacements[el.j].cast<Real>();
    return u;
}

Eigen::Matrix<Real, 6, 6> element_matrix(const OracleMesh& mesh, const OracleElement& el) {
    return frame_element_stiffness<Real>(mesh.nodes[el.i].cast<Real>(), mesh.nodes[el.j].cast<Real>(), el.E,
                                         el.I, el.A);
}

}  // namespace

OracleResult solve_static(const OracleMesh& mesh, const std::vector<NodalLoad>& loads) {
    const int n_nodes = static_cast<int>(mesh.nodes.size());
    const int n_free = 3 * (n_nodes - 1);
    if (n_free <= 0) {
        throw SingularSystem("solve_static: mesh has no free nodes");
    }

    // Node 0 is clamped; free DOF index = global index - 3.
    std::vector<Eigen::Triplet<Real>> triplets;
    triplets.reserve(mesh.elements.size() * 36);
    for (const auto& el : mesh.elements) {
        const Eigen::Matrix<Real, 6, 6> k = element_matrix(mesh, el);
        const int base[2] = {3 * el.i - 3, 3 * el.j - 3};
        for (int r = 0; r < 6; ++r) {
            const int gr = base[r / 3] + r % 3;
            if (gr < 0) continue;
            for (int c = 0; c < 6; ++c) {
                const int gc = base[c / 3] + c % 3;
                if (gc < 0) continue;
                triplets.emplace_back(gr, gc, k(r, c));
            }
        }
    }
    Eigen::SparseMatrix<Real> K(n_free, n_free);
    K.setFromTriplets(triplets.begin(), triplets.end());

    VectorL f = VectorL::Zero(n_free);
    for (const auto& load : loads) {
        if (load.node < 0 || load.node >= n_nodes) {
            throw ValidationError("solve_static: load applied to a node outside the mesh");
        }
        if (load.node == 0) continue;  // reacted by the clamp
        f(3 * load.node - 3) += load.fx;
        f(3 * load.node - 2) += load.fy;
        f(3 * load.node - 1) += load.moment;
    }

    Eigen::SimplicialLDLT<Eigen::SparseMatrix<Real>> ldlt(K);
    if (ldlt.info() != Eigen::Success || (ldlt.vectorD().array() <= 0).any()) {
        throw SingularSystem("solve_static: stiffness matrix is singular or indefinite");
    }
    const VectorL x = ldlt.solve(f);
    if (ldlt.info() != Eigen::Success || !x.allFinite()) {
        throw SingularSystem("solve_static: back substitution failed");
    }

    OracleResult result;
    result.displacements.assign(n_nodes, Eigen::Vector3d::Zero());
    for (int i = 1; i < n_nodes; ++i) {
        result.displacements[i] = x.segment<3>(3 * i - 3).cast<double>();
    }
    result.contact_v = -result.displacements[mesh.contact_node].y();
    result.tip_v = -result.displacements[mesh.tip_node].y();
    return result;
}

double internal_energy(const OracleMesh& mesh, const OracleResult& result) {
    Real u = 0;
    for (const auto& el : mesh.elements) {
        const Eigen::Matrix<Real, 6, 1> q = element_dofs(el, result);
        u += q.dot(element_matrix(mesh, el) * q) / 2;
    }
    return static_cast<double>(u);
}

double external_work(const std::vector<NodalLoad>& loads, const OracleResult& result) {
    double w = 0;
    for (const auto& load : loads) {
        const Eigen::Vector3d& d = result.displacements[load.node];
        w += load.fx * d.x() + load.fy * d.y() + load.moment * d.z();
    }
    return 0.5 * w;
}

StepValidation validate_step(const ColletGeometry& geom, const EllipseState& state,
                             const ContactSolution& solution, int n_elems, const MeshOptions& options) {
    StepValidation v;
    const OracleMesh mesh = build_mesh(geom, state, n_elems, options);
    const std::vector<NodalLoad> loads = {
        {mesh.contact_node, -solution.forces.F_X, -solution.forces.F_Y, 0.0}};
    const OracleResult result = solve_static(mesh, loads);
    v.contact_v = result.contact_v;
    v.tip_v = result.tip_v;
    if (solution.gap == 0) {
        v.absolute = true;
        v.contact_err = std::abs(result.contact_v);
        v.tip_err = std::abs(result.tip_v - solution.delta_tip_step);
        return v;
    }
    v.contact_err = std::abs(result.contact_v - solution.gap) / solution.gap;
    v.tip_err = std::abs(result.tip_v - solution.delta_tip_step) / solution.delta_tip_step;
    return v;
}

std::vector<StepCheck> validate_curve(const DeflectionCurve& curve, int n_elems, const MeshOptions& options) {
    std::vector<StepCheck> checks;
    const ColletGeometry& geom = curve.geometry;
    for (std::size_t k = 1; k < curve.rows.size(); ++k) {
        const CurveRow& prev = curve.rows[k - 1];
        const CurveRow& row = curve.rows[k];
        const EllipseState state{geom.a, prev.b, static_cast<int>(k - 1)};
        StepCheck check;
        check.step = static_cast<int>(k);
        check.delta_cum = row.delta_cum;
        check.delta_tip_cum = row.delta_tip_cum;
        check.solution = solve_step(geom, state, row.delta_cum - prev.delta_cum);
        check.validation = validate_step(geom, state, check.solution, n_elems, options);
        checks.push_back(check);
    }
    return checks;
}

}  // namespace collet
