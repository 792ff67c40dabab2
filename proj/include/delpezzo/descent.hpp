// Symbolic descent through the projection involution of a cubic surface:
// states track the coefficients of two fixed lines, the moving line, and the
// residual divisor. Each step strictly decreases the residual degree, and the
// degrees live in a discrete set bounded below, which is the contradiction
// the descent certifies. Also hosts the two-component inequality system used
// for the degree-2 multiplicity bound.
#pragma once

#include "delpezzo/rational.hpp"

#include <string>
#include <vector>

namespace delpezzo {

struct OmegaComponent {
    Rational e; // coefficient, > 0
    long d;     // anticanonical degree of the component, >= 1
    bool operator==(const OmegaComponent& o) const = default;
};

// D = a L + b M + c N + Omega with marked-point multiplicity m = mult_P(Omega).
struct TriangleState {
    Rational a, b, c;
    Rational m;
    std::vector<OmegaComponent> omega;

    Rational omega_degree() const; // sum e_i d_i
};

struct StateCheck {
    bool pass;
    std::vector<std::string> violations; // each names the constraint and the exact slack
};

// Checks the degree identity a + b + c + sum(e d) = 3, the main inequality
// m + a + b > c + 1, and the multiplicity cap a + b + m <= 2, plus the range
// constraints on the fields.
StateCheck validate_state(const TriangleState& s);

struct GeiserStep {
    TriangleState next;
    Rational decrement; // a + b + m - 1 - c, always > 0 for a valid input
};

// One involution step: a and b are preserved, the new c is a + b + m - 1, and
// the residual degree drops by exactly the decrement (reported as a single
// aggregate component). The multiplicity at the new marked point is not a
// function of the state and must be supplied.
GeiserStep geiser_step(const TriangleState& s, const Rational& new_m);

enum class DescentTerminal { contradiction, step_limit };

const char* terminal_name(DescentTerminal t); // "contradiction" or "step-limit"

struct DescentTrace {
    std::vector<TriangleState> states;
    std::vector<Rational> decrements;
    DescentTerminal terminal;
    std::string certificate; // exact numbers behind a contradiction; empty otherwise
};

// Iterates geiser_step, reading new multiplicities from m_oracle, until the
// residual degree would fall below the discreteness floor min(e_i) of the
// initial components, a successor fails validation (both are contradiction
// certificates), or steps run out. Throws std::invalid_argument when the
// initial state fails validation.
DescentTrace run_descent(const TriangleState& initial, const std::vector<Rational>& m_oracle,
                         size_t max_steps);

struct Dp2BoundCheck {
    Rational s;            // common self-intersection -1 + k/2
    bool system_satisfied; // both inequalities hold at (m1, m2)
    bool forces_m1_le_1;   // the system implies m1 <= 1 (true for every k in 0..2)
};

// Two-component system on a degree-2 surface through k base identifications:
// with s = -1 + k/2, requires 1 >= m1 s + m2 (1 - s) and 1 >= m2 s + m1 (1 - s).
Dp2BoundCheck dp2_component_bound(long k, const Rational& m1, const Rational& m2);

} // namespace delpezzo
