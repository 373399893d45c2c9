#pragma once

#include <string>
#include <vector>

#include "polarmin/body.hpp"

namespace polarmin::families {

/// Catalogue names accepted by make().
const std::vector<std::string>& names();

/// Throws BadParams when the parameters are outside the family's domain.
void validate(const FamilySpec& spec);

/// Convenience constructors with validated parameters.
FamilySpec t_st(const Rat& s, const Rat& t);
FamilySpec cube(int dim = 2);
FamilySpec cross(int dim = 2);
FamilySpec simplex_s(int dim = 2);
FamilySpec simplex_t(int dim = 2);
FamilySpec t_of_s(const Rat& s, int dim = 2);
FamilySpec q_quad(const Rat& t, const Rat& t1, const Rat& t2);
FamilySpec q_quad(const Rat& t);
FamilySpec tri_case2(const Rat& t, const Rat& t1, const Rat& t2);
FamilySpec tri_case2(const Rat& t);

/// Fills defaulted parameters (t1 = t2 = 1/t for the A(t) families).
FamilySpec complete(FamilySpec spec);

Body make(const FamilySpec& spec);

Rat closed_form_volume(const FamilySpec& spec);

/// Which body's successive minima a closed form refers to.
enum class MinimaOf { Polar, PolarOfSymmetral };

struct ClosedFormMinima {
    MinimaOf of;
    std::vector<Rat> lambda;
};

/// Throws NoClosedForm for families without stated minima.
ClosedFormMinima closed_form_minima(const FamilySpec& spec);

}  // namespace polarmin::families
