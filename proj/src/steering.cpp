#include "pcg/steering.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pcg {

FollowerSystem follower_system(const PartitionedLaplacian& p) {
    FollowerSystem sys;
    sys.A = -p.L_f.cast<double>();
    sys.B = -p.L_fl.cast<double>();
    sys.follower_order = p.follower_order;
    sys.leader_order = p.leader_order;
    return sys;
}

FollowerSystem follower_system(const Graph& g, const LeaderSet& s) {
    return follower_system(partition_laplacian(g, s));
}

namespace {

int grid_steps(double T, double dt) {
    if (dt <= 0) throw std::invalid_argument("step must be positive");
    if (T < dt) throw std::invalid_argument("horizon shorter than one step");
    return std::max(1, static_cast<int>(std::llround(T / dt)));
}

using Derivative = std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>;

Trajectory rk4(const Derivative& f, const Eigen::VectorXd& x0, double T, int steps) {
    const double h = T / steps;
    Trajectory out;
    out.times.resize(steps + 1);
    out.states.resize(steps + 1, x0.size());
    Eigen::VectorXd x = x0;
    out.times(0) = 0.0;
    out.states.row(0) = x.transpose();
    for (int k = 0; k < steps; ++k) {
        double t = k * h;
        Eigen::VectorXd k1 = f(t, x);
        Eigen::VectorXd k2 = f(t + h / 2, x + (h / 2) * k1);
        Eigen::VectorXd k3 = f(t + h / 2, x + (h / 2) * k2);
        Eigen::VectorXd k4 = f(t + h, x + h * k3);
        x += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
        out.times(k + 1) = (k + 1) * h;
        out.states.row(k + 1) = x.transpose();
    }
    return out;
}

// spectral factors of the symmetric system matrix, for e^(At) evaluation
struct ExpFactors {
    Eigen::MatrixXd Q;
    Eigen::VectorXd lambda;

    Eigen::MatrixXd exp_at(double t) const {
        return Q * (lambda.array() * t).exp().matrix().asDiagonal() * Q.transpose();
    }
};

ExpFactors factorize(const Eigen::MatrixXd& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    return {solver.eigenvectors(), solver.eigenvalues()};
}

Eigen::MatrixXd simpson_gramian(const ExpFactors& f, const Eigen::MatrixXd& b, double T, int steps) {
    const double h = T / steps;
    auto integrand = [&](double t) {
        Eigen::MatrixXd eb = f.exp_at(t) * b;
        return (eb * eb.transpose()).eval();
    };
    Eigen::MatrixXd acc = integrand(0.0) + integrand(T);
    for (int k = 1; k < steps; ++k) acc += (k % 2 ? 4.0 : 2.0) * integrand(k * h);
    return (h / 3.0) * acc;
}

}  // namespace

Trajectory simulate(const Graph& g, const Eigen::VectorXd& x0, double T, double dt) {
    if (x0.size() != g.node_count()) throw std::invalid_argument("state dimension mismatch");
    Eigen::MatrixXd l = laplacian(g).cast<double>();
    auto f = [&](double, const Eigen::VectorXd& x) { return (-l * x).eval(); };
    return rk4(f, x0, T, grid_steps(T, dt));
}

Trajectory simulate(const Graph& g, const LeaderSet& s, const LeaderSignal& leader_signal,
                    const Eigen::VectorXd& x0_followers, double T, double dt) {
    FollowerSystem sys = follower_system(g, s);
    if (x0_followers.size() != sys.follower_count()) throw std::invalid_argument("state dimension mismatch");
    auto f = [&](double t, const Eigen::VectorXd& x) {
        Eigen::VectorXd u = leader_signal(t);
        if (u.size() != sys.leader_count()) throw std::invalid_argument("leader signal dimension mismatch");
        return (sys.A * x + sys.B * u).eval();
    };
    return rk4(f, x0_followers, T, grid_steps(T, dt));
}

Eigen::MatrixXd gramian(const FollowerSystem& sys, double T, int steps) {
    if (T <= 0) throw std::invalid_argument("horizon must be positive");
    const int nf = sys.follower_count();
    if (nf == 0) return Eigen::MatrixXd(0, 0);
    ExpFactors f = factorize(sys.A);

    int n = std::max(2, steps + (steps % 2));
    Eigen::MatrixXd w = simpson_gramian(f, sys.B, T, n);
    while (n < (1 << 21)) {
        n *= 2;
        Eigen::MatrixXd refined = simpson_gramian(f, sys.B, T, n);
        double diff = (refined - w).norm();
        w = refined;
        if (diff <= 1e-10 * std::max(1.0, w.norm())) break;
    }
    return w;
}

SteeringResult steer(const FollowerSystem& sys, const Eigen::VectorXd& x0,
                     const Eigen::VectorXd& x_target, double T, int steps) {
    const int nf = sys.follower_count();
    const int nl = sys.leader_count();
    if (x0.size() != nf || x_target.size() != nf) throw std::invalid_argument("state dimension mismatch");
    if (T <= 0) throw std::invalid_argument("horizon must be positive");

    SteeringResult result;
    if (nf == 0) {
        result.status = SteeringResult::Status::steered;
        result.gramian_condition = 1.0;
        result.input_trajectory.times = Eigen::VectorXd::LinSpaced(steps + 1, 0.0, T);
        result.input_trajectory.states = Eigen::MatrixXd::Zero(steps + 1, nl);
        result.achieved_final = Eigen::VectorXd(0);
        return result;
    }

    Eigen::MatrixXd w = gramian(sys, T);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ws(w);
    double lambda_min = ws.eigenvalues()(0);
    double lambda_max = ws.eigenvalues()(nf - 1);
    result.gramian_condition = (lambda_min <= 0 || lambda_max <= 0)
                                   ? std::numeric_limits<double>::infinity()
                                   : lambda_max / lambda_min;
    if (!(result.gramian_condition <= kGramianConditionLimit)) {
        result.status = SteeringResult::Status::uncontrollable_detected;
        return result;
    }

    ExpFactors f = factorize(sys.A);
    Eigen::VectorXd drift = f.exp_at(T) * x0;
    Eigen::VectorXd d = x_target - drift;
    Eigen::LDLT<Eigen::MatrixXd> solver(w);
    Eigen::VectorXd y = solver.solve(d);
    y += solver.solve(d - w * y);  // one step of iterative refinement
    result.input_energy = d.dot(y);

    auto input = [&](double t) { return (sys.B.transpose() * (f.exp_at(T - t) * y)).eval(); };

    const double h = T / steps;
    result.input_trajectory.times.resize(steps + 1);
    result.input_trajectory.states.resize(steps + 1, nl);
    for (int k = 0; k <= steps; ++k) {
        result.input_trajectory.times(k) = k * h;
        result.input_trajectory.states.row(k) = input(k * h).transpose();
    }

    auto dyn = [&](double t, const Eigen::VectorXd& x) { return (sys.A * x + sys.B * input(t)).eval(); };
    Trajectory sim = rk4(dyn, x0, T, steps);
    result.achieved_final = sim.states.row(steps).transpose();
    result.residual = (result.achieved_final - x_target).cwiseAbs().maxCoeff();
    result.status = SteeringResult::Status::steered;
    return result;
}

std::string trajectory_csv(const Trajectory& t) {
    std::ostringstream out;
    out << "t";
    for (Eigen::Index j = 0; j < t.states.cols(); ++j) out << ",x_" << (j + 1);
    out << "\n";
    out.precision(12);
    for (Eigen::Index k = 0; k < t.times.size(); ++k) {
        out << t.times(k);
        for (Eigen::Index j = 0; j < t.states.cols(); ++j) out << "," << t.states(k, j);
        out << "\n";
    }
    return out.str();
}

}  // namespace pcg
