#pragma once

#include "pcg/graph.hpp"
#include "pcg/leaders.hpp"

#include <Eigen/Core>

#include <functional>
#include <string>

namespace pcg {

// Follower subsystem x_f' = A x_f + B x_l with A = -L_f and B = -L_fl;
// the leader states act directly as the control input.
struct FollowerSystem {
    Eigen::MatrixXd A;
    Eigen::MatrixXd B;
    std::vector<int> follower_order;
    std::vector<int> leader_order;

    int follower_count() const { return static_cast<int>(A.rows()); }
    int leader_count() const { return static_cast<int>(B.cols()); }
};

FollowerSystem follower_system(const PartitionedLaplacian& p);
FollowerSystem follower_system(const Graph& g, const LeaderSet& s);

// States sampled on a uniform grid covering [0, T]; row k of states is the
// state at times(k).
struct Trajectory {
    Eigen::VectorXd times;
    Eigen::MatrixXd states;
};

using LeaderSignal = std::function<Eigen::VectorXd(double)>;

// Leaderless consensus x' = -L x, classical fixed-step 4th-order
// Runge-Kutta. The step actually used is T/round(T/dt) so the grid lands
// exactly on the horizon.
Trajectory simulate(const Graph& g, const Eigen::VectorXd& x0, double T, double dt);

// Leader-driven follower dynamics x_f' = -L_f x_f - L_fl x_l(t).
Trajectory simulate(const Graph& g, const LeaderSet& s, const LeaderSignal& leader_signal,
                    const Eigen::VectorXd& x0_followers, double T, double dt);

// Finite-horizon controllability Gramian, integral of e^(At) B B' e(A't)
// over [0, T]. Composite Simpson quadrature, refined by doubling from the
// given step count until successive refinements agree to 1e-10 relative.
Eigen::MatrixXd gramian(const FollowerSystem& sys, double T, int steps = 128);

struct SteeringResult {
    enum class Status { steered, uncontrollable_detected };

    Status status = Status::uncontrollable_detected;
    Trajectory input_trajectory;    // leader states x_l(t) on a uniform grid
    Eigen::VectorXd achieved_final; // follower state at the horizon when re-simulated
    double residual = 0.0;          // max-norm distance to target
    double gramian_condition = 0.0;
    double input_energy = 0.0;      // integral of |u|^2 dt for the computed input
};

inline constexpr double kGramianConditionLimit = 1e10;

// Minimum-energy steering: u(t) = B' e^(A'(T-t)) W(T)^-1 (x_target - e^(AT) x0),
// verified by re-simulating the closed form input. A Gramian condition
// number beyond 1e10 is reported as uncontrollable-detected and no input
// is produced.
SteeringResult steer(const FollowerSystem& sys, const Eigen::VectorXd& x0,
                     const Eigen::VectorXd& x_target, double T, int steps = 2048);

std::string trajectory_csv(const Trajectory& t);

}  // namespace pcg
