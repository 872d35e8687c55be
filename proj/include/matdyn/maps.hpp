#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matdyn/mat2.hpp"

namespace matdyn {

using PsiFn = std::function<cplx(cplx, cplx)>;

enum class MapKind {
    PhiId,      // M -> M^2
    PhiPower,   // M -> alpha * M^d
    PhiDiag,    // A M^2 with A = diag(lambda, 1/lambda)
    PhiJordan,  // A M^2 with A = [[1,1],[0,1]]
    SigmaC,     // M -> M^2 + c Id
    ZetaLambda, // M -> lambda (M + M^-1)
    Lifted,     // equivariant lift of a user planar function Psi
    PasanLift,  // lift of (l1, l2) -> l1 + (l2 - l1)^2
    HenonLift,  // lift of the cubic Henon-conjugate planar function
};

struct MapSpec {
    MapKind kind = MapKind::PhiId;
    cplx alpha{1.0, 0.0};
    int d = 2;
    cplx lambda{1.0, 0.0};
    cplx c{0.0, 0.0};
    PsiFn psi; // Lifted only

    static MapSpec phi_id();
    static MapSpec phi_power(cplx alpha, int d);
    static MapSpec phi_diag(cplx lambda);
    static MapSpec phi_jordan();
    static MapSpec sigma_c(cplx c);
    static MapSpec zeta_lambda(cplx lambda);
    static MapSpec lattes_zeta(int sign = +1); // zeta with lambda = +-i/2
    static MapSpec lifted(PsiFn psi);
    static MapSpec pasan_lift();
    static MapSpec henon_lift();
};

enum class PlanarKind {
    SqPhiId,      // (u,v) -> (u^2 - 2v, v^2)
    SqSigmaC,     // (u^2 - 2v + 2c, v^2 + c(u^2 - 2v) + c^2)
    SqZeta,       // (u/v + u, v + u^2/v - 2 + 1/v)
    DetZeroSlice, // (l x(x+t), t(x+t)/l)
    DetOneSlice,  // (l(x^2+xt-1), (t^2+xt-1)/l)
    PhiTheta,     // circle-fiber map of the unit quaternion sphere
};

struct PlanarMapSpec {
    PlanarKind kind = PlanarKind::SqPhiId;
    cplx c{0.0, 0.0};
    double lambda = 1.0;
    double theta = 0.0;

    static PlanarMapSpec sq_phi_id();
    static PlanarMapSpec sq_sigma_c(cplx c);
    static PlanarMapSpec sq_zeta();
    static PlanarMapSpec det_zero_slice(double lambda);
    static PlanarMapSpec det_one_slice(double lambda);
    static PlanarMapSpec phi_theta(double theta);
};

using PlanarPoint = std::pair<cplx, cplx>;

enum class OrbitVerdict { Escaped, Converged, Completed, IndeterminateHit };

struct OrbitRecord {
    std::vector<Mat2> points;
    std::vector<PlanarPoint> planar_points;
    OrbitVerdict verdict = OrbitVerdict::Completed;
    int verdict_step = 0;
    double final_norm = 0.0;
};

Mat2 apply(const MapSpec& map, const Mat2& m);
Mat2 lift_apply(const PsiFn& psi, const Mat2& m, int branch = +1);
PlanarPoint sq_apply(const PlanarMapSpec& map, const PlanarPoint& p);

OrbitRecord orbit(const MapSpec& map, const Mat2& seed, int steps,
                  double escape_R, double conv_eps);
OrbitRecord orbit(const PlanarMapSpec& map, const PlanarPoint& seed, int steps,
                  double escape_R, double conv_eps);

using Jacobian4 = std::array<std::array<cplx, 4>, 4>;

Jacobian4 jacobian_fd(const MapSpec& map, const Mat2& m, double h);
cplx det4(const Jacobian4& j);

enum class SymmetryKind { SigmaP, Transpose, InverseMap, ExchangeI, FlowFs };

struct Symmetry {
    SymmetryKind kind = SymmetryKind::Transpose;
    Mat2 p = mat_identity(); // SigmaP
    double s = 0.0;          // FlowFs

    static Symmetry sigma_p(const Mat2& p);
    static Symmetry transpose();
    static Symmetry inverse_map();
    static Symmetry exchange_i();
    static Symmetry flow_fs(double s);
};

Mat2 apply_symmetry(const Symmetry& g, const Mat2& m);

struct CommuteResult {
    bool commutes;
    double max_residual;
};

CommuteResult commutes(const MapSpec& map, const Symmetry& g, int samples,
                       double tol, std::uint64_t seed = 0x5eed0001);

struct ResidualRecord {
    std::optional<double> ratio_residual; // (y/z) o Phi vs expected multiplier
    std::optional<double> xt_residual;    // ((x-t)/z) o Phi vs itself, PhiId only
    double commutator_residual;           // || Phi(M) M - M Phi(M) ||
};

ResidualRecord invariant_residuals(const MapSpec& map, const Mat2& m);

// CLI serialization, e.g. "phi-diag:2,0" or "sq-sigma-c:0.25,0.1".
MapSpec parse_map_spec(const std::string& s);
PlanarMapSpec parse_planar_spec(const std::string& s);

cplx psi_pasan(cplx l1, cplx l2);
cplx psi_henon(cplx l1, cplx l2);

} // namespace matdyn
