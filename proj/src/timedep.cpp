#include "rps/timedep.hpp"

#include <cmath>

#include "rps/errors.hpp"
#include "rps/homog.hpp"

namespace rps {

namespace {

constexpr double kBeta = 0.25;
constexpr double kGamma = 0.5;

Vector initial_or_zero(const Vector& v, std::size_t n, const char* what) {
    if (v.size() == 0) return Vector::Zero(static_cast<Eigen::Index>(n));
    if (static_cast<std::size_t>(v.size()) != n) {
        throw StructuralError(std::string(what) + " has length " + std::to_string(v.size()) +
                              ", space dimension is " + std::to_string(n));
    }
    return v;
}

bool keep_snapshot(int step, int steps, int every) {
    return step == steps || (every > 0 && step % every == 0);
}

}  // namespace

TimeGrid::TimeGrid(double final_time_, int steps_) : final_time(final_time_), steps(steps_) {
    if (!(final_time > 0.0)) throw ConfigError("time grid: T must be > 0");
    if (steps < 1) throw ConfigError("time grid: steps must be >= 1");
}

Forcing Forcing::zero() {
    return {[](const Point&, double) { return 0.0; }, false};
}

Forcing Forcing::steady(ScalarFunction g) {
    return {[g = std::move(g)](const Point& p, double) { return g(p); }, false};
}

GalerkinSpace GalerkinSpace::fine(std::shared_ptr<const Discretization> disc, MassKind mass) {
    GalerkinSpace s;
    s.coarse_ = false;
    s.mass_ = mass == MassKind::consistent ? disc->mass : rps::mass(*disc->fine, MassKind::lumped);
    s.stiffness_ = disc->stiffness;
    s.fine_mass_full_ = disc->full_mass;
    s.disc_ = std::move(disc);
    return s;
}

GalerkinSpace GalerkinSpace::coarse(const RpsBasis& basis, MassKind mass) {
    GalerkinSpace s;
    s.coarse_ = true;
    s.disc_ = basis.disc;
    s.prolongation_ = interior_columns(basis);
    const SparseMatrix pt = s.prolongation_.transpose();
    const SparseMatrix fine_mass =
        mass == MassKind::consistent ? s.disc_->mass : rps::mass(*s.disc_->fine, MassKind::lumped);
    const SparseMatrix m_phi = fine_mass * s.prolongation_;
    const SparseMatrix k_phi = s.disc_->stiffness * s.prolongation_;
    s.mass_ = pt * m_phi;
    s.stiffness_ = pt * k_phi;
    const SparseMatrix mt = s.mass_.transpose();
    const SparseMatrix kt = s.stiffness_.transpose();
    s.mass_ = 0.5 * (s.mass_ + mt);
    s.stiffness_ = 0.5 * (s.stiffness_ + kt);
    s.fine_mass_full_ = s.disc_->full_mass;
    return s;
}

Vector GalerkinSpace::load(const Forcing& f, double t) const {
    const auto& fine = *disc_->fine;
    Vector nodal(static_cast<Eigen::Index>(fine.num_vertices()));
    for (std::size_t v = 0; v < fine.num_vertices(); ++v) nodal[static_cast<Eigen::Index>(v)] = f.g(fine.vertex(v), t);
    const Vector interior = disc_->dofs.restrict(fine_mass_full_ * nodal);
    if (!coarse_) return interior;
    return prolongation_.transpose() * interior;
}

Vector GalerkinSpace::lift(const Vector& state) const {
    if (static_cast<std::size_t>(state.size()) != dimension()) {
        throw StructuralError("state length does not match the space dimension");
    }
    if (!coarse_) return disc_->dofs.extend(state);
    return disc_->dofs.extend(prolongation_ * state);
}

Vector GalerkinSpace::project(const Vector& full) const {
    const Vector interior = disc_->dofs.restrict(full);
    if (!coarse_) return interior;
    const Vector rhs = prolongation_.transpose() * (disc_->mass * interior);
    SpdSolver solver(mass_, SolverOptions{});
    return solver.solve(rhs);
}

double wave_energy(const GalerkinSpace& space, const Vector& u, const Vector& v, double density) {
    return 0.5 * density * v.dot(space.mass() * v) + 0.5 * u.dot(space.stiffness() * u);
}

Trajectory solve_wave(const GalerkinSpace& space, const Forcing& f, const TimeGrid& grid,
                      const TimeStepOptions& options) {
    if (!(options.density > 0.0)) throw ConfigError("density must be > 0");
    const std::size_t n = space.dimension();
    const double dt = grid.dt();
    const SparseMatrix m = options.density * space.mass();
    const SparseMatrix& k = space.stiffness();

    Vector u = initial_or_zero(options.initial_state, n, "initial state");
    Vector v = initial_or_zero(options.initial_velocity, n, "initial velocity");
    Vector b = space.load(f, 0.0);
    Vector acc = SpdSolver(m, options.solver).solve(b - k * u);

    const SparseMatrix effective = m + (kBeta * dt * dt) * k;
    const SpdSolver solver(effective, options.solver);

    Trajectory traj;
    traj.density = options.density;
    traj.coarse = space.is_coarse();
    traj.times.push_back(0.0);
    traj.states.push_back(u);
    traj.velocities.push_back(v);
    for (int step = 1; step <= grid.steps; ++step) {
        const double t = step * dt;
        if (f.time_dependent) b = space.load(f, t);
        const Vector u_pred = u + dt * v + (dt * dt * (0.5 - kBeta)) * acc;
        const Vector v_pred = v + (dt * (1.0 - kGamma)) * acc;
        acc = solver.solve(b - k * u_pred);
        u = u_pred + (kBeta * dt * dt) * acc;
        v = v_pred + (kGamma * dt) * acc;
        if (keep_snapshot(step, grid.steps, options.snapshot_every)) {
            traj.times.push_back(t);
            traj.states.push_back(u);
            traj.velocities.push_back(v);
        }
    }
    return traj;
}

Trajectory solve_parabolic(const GalerkinSpace& space, const Forcing& f, const TimeGrid& grid,
                           const TimeStepOptions& options) {
    const std::size_t n = space.dimension();
    const double dt = grid.dt();
    const SparseMatrix& m = space.mass();
    const SparseMatrix effective = m + dt * space.stiffness();
    const SpdSolver solver(effective, options.solver);

    Vector u = initial_or_zero(options.initial_state, n, "initial state");
    Vector b = space.load(f, dt);
    Trajectory traj;
    traj.coarse = space.is_coarse();
    traj.times.push_back(0.0);
    traj.states.push_back(u);
    for (int step = 1; step <= grid.steps; ++step) {
        const double t = step * dt;
        if (f.time_dependent) b = space.load(f, t);
        u = solver.solve(m * u + dt * b);
        if (keep_snapshot(step, grid.steps, options.snapshot_every)) {
            traj.times.push_back(t);
            traj.states.push_back(u);
        }
    }
    return traj;
}

}  // namespace rps
