#pragma once

#include <string>
#include <vector>

#include "gpade/gfun.hpp"

namespace gpade {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;
};

// One (system, p, q, h) point of the approximant grid.
struct GridInstance {
    std::string system;
    long p = 0;
    long q = 0;
    long h = 0;

    friend bool operator==(const GridInstance&, const GridInstance&) = default;
};

// Outcome of every exact check on one grid instance; equality is used to compare the serial and
// parallel runners.
struct GridOutcome {
    GridInstance instance;
    bool built = false;
    std::string error;
    bool order_ok = false;        // every order certificate reaches p+h+1
    bool integrality_ok = false;  // Q in Z[z], d_p P_j in Z[z]
    bool siegel_ok = false;
    long K = 0;                   // floor(h/d)
    bool iteration_ok = false;    // degrees, integrality, orders and the closed form of Q_k, k <= K
    bool height_ok = false;       // H(Q_k) <= the height bound, k <= K
    long remainder_checks = 0;
    bool remainder_ok = false;    // certified |R_{j,k}(z)| <= the remainder bound
    bool divisibility_ok = false; // z^required_order divides Delta
    bool degree_ok = false;       // deg Delta~ <= ell0
    bool nonzero = false;
    std::string Delta;            // exact coefficients, for serial/parallel comparison

    friend bool operator==(const GridOutcome&, const GridOutcome&) = default;
};

// {log1m, polylog2} x p in 2..p_max x h >= 1 x q in [N h, p].
std::vector<GridInstance> acceptance_grid(long p_max = 10);

// Evaluation points for the remainder check.
std::vector<Rational> remainder_points();

GridOutcome run_grid_instance(const GridInstance& inst, const GFunctionSystem& sys, bool parallel_kernels);

// Systems are resolved and growth-verified once before the loop; outcomes come back in grid order.
std::vector<GridOutcome> run_grid_serial(const std::vector<GridInstance>& grid);
std::vector<GridOutcome> run_grid_parallel(const std::vector<GridInstance>& grid);

// Criteria 1..10 in order; quick shrinks the grid to p <= 6.
std::vector<CriterionResult> run_acceptance(bool quick = false);

// "criterion <id> <PASS|FAIL> <name> (<seconds>s, budget <budget>s): <detail>"
std::string format_criterion(const CriterionResult& r);

} // namespace gpade
