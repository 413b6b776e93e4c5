#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "rps/assembly.hpp"
#include "rps/basis.hpp"

namespace rps {

struct TimeGrid {
    double final_time = 1.0;
    int steps = 1;

    TimeGrid() = default;
    TimeGrid(double final_time, int steps);
    double dt() const { return final_time / steps; }
};

/// Right-hand side g(x, t). `time_dependent = false` lets the solvers assemble the load once.
struct Forcing {
    std::function<double(const Point&, double)> g;
    bool time_dependent = false;

    static Forcing zero();
    static Forcing steady(ScalarFunction g);
};

/// Discrete space for time stepping: the fine P1 space or the span of a basis.
///
/// States live in space coordinates (interior fine values, or coefficients
/// c_i(t)); `lift` maps them to full fine nodal vectors.
class GalerkinSpace {
public:
    static GalerkinSpace fine(std::shared_ptr<const Discretization> disc, MassKind mass = MassKind::consistent);
    static GalerkinSpace coarse(const RpsBasis& basis, MassKind mass = MassKind::consistent);

    bool is_coarse() const { return coarse_; }
    std::size_t dimension() const { return static_cast<std::size_t>(mass_.rows()); }
    const SparseMatrix& mass() const { return mass_; }
    const SparseMatrix& stiffness() const { return stiffness_; }
    const Discretization& disc() const { return *disc_; }

    /// Load vector in space coordinates at time t.
    Vector load(const Forcing& f, double t) const;
    Vector lift(const Vector& state) const;
    /// Space coordinates of a full fine nodal vector (exact for the fine space,
    /// mass-projection for the coarse space).
    Vector project(const Vector& full) const;

private:
    std::shared_ptr<const Discretization> disc_;
    bool coarse_ = false;
    SparseMatrix mass_;
    SparseMatrix stiffness_;
    SparseMatrix prolongation_;  ///< interior dofs x space dimension (coarse only)
    SparseMatrix fine_mass_full_;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Vector> states;      ///< space coordinates
    std::vector<Vector> velocities;  ///< wave only
    double density = 1.0;
    bool coarse = false;

    const Vector& final_state() const { return states.back(); }
};

struct TimeStepOptions {
    double density = 1.0;
    Vector initial_state;     ///< empty = zero
    Vector initial_velocity;  ///< wave only; empty = zero
    int snapshot_every = 0;   ///< 0 keeps only the initial and final states
    SolverOptions solver;
};

/// Newmark average acceleration (beta = 1/4, gamma = 1/2) for rho M u'' + K u = b(t).
Trajectory solve_wave(const GalerkinSpace& space, const Forcing& f, const TimeGrid& grid,
                      const TimeStepOptions& options = {});

/// Implicit Euler for M u' + K u = b(t).
Trajectory solve_parabolic(const GalerkinSpace& space, const Forcing& f, const TimeGrid& grid,
                           const TimeStepOptions& options = {});

/// 1/2 rho v^T M v + 1/2 u^T K u.
double wave_energy(const GalerkinSpace& space, const Vector& u, const Vector& v, double density);

}  // namespace rps
