#pragma once

#include <vector>

#include "polarmin/rational.hpp"

namespace polarmin::lp {

enum class Sense { Le, Ge, Eq };

/// minimize cost . x subject to rows and x >= 0.
struct Program {
    int vars = 0;
    std::vector<std::vector<Rat>> rows;
    std::vector<Sense> sense;
    std::vector<Rat> rhs;
    std::vector<Rat> cost;

    void add(std::vector<Rat> row, Sense s, Rat b);
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    std::vector<Rat> x;
    Rat value;
};

/// Dense two-phase simplex with Bland's rule; exact, so it always terminates.
Solution solve(const Program& p);

}  // namespace polarmin::lp
