#include "delpezzo/descent.hpp"

#include <sstream>
#include <stdexcept>

namespace delpezzo {

Rational TriangleState::omega_degree() const {
    Rational s(0);
    for (const auto& c : omega) s += c.e * Rational(c.d);
    return s;
}

StateCheck validate_state(const TriangleState& s) {
    StateCheck out;
    out.pass = true;
    auto fail = [&](const std::string& msg) {
        out.pass = false;
        out.violations.push_back(msg);
    };

    auto in_unit = [](const Rational& x) { return x.sign() >= 0 && x <= Rational(1); };
    if (!in_unit(s.a) || !in_unit(s.b) || !in_unit(s.c))
        fail("range: a, b, c must lie in [0, 1], got a=" + s.a.str() + " b=" + s.b.str() +
             " c=" + s.c.str());
    if (s.m.sign() < 0) fail("range: m must be >= 0, got " + s.m.str());
    for (const auto& c : s.omega) {
        if (c.e.sign() <= 0 || c.d < 1)
            fail("range: residual components need e > 0 and d >= 1, got e=" + c.e.str() +
                 " d=" + std::to_string(c.d));
    }

    Rational total = s.a + s.b + s.c + s.omega_degree();
    if (total != Rational(3))
        fail("degree identity: a + b + c + sum(e*d) = " + total.str() + ", off from 3 by " +
             (total - Rational(3)).str());

    Rational main_slack = s.m + s.a + s.b - s.c - Rational(1);
    if (main_slack.sign() <= 0)
        fail("main inequality: m + a + b > c + 1 fails, slack " + main_slack.str());

    Rational cap_slack = Rational(2) - (s.a + s.b + s.m);
    if (cap_slack.sign() < 0)
        fail("multiplicity cap: a + b + m <= 2 fails, excess " + (-cap_slack).str());

    return out;
}

GeiserStep geiser_step(const TriangleState& s, const Rational& new_m) {
    StateCheck check = validate_state(s);
    if (!check.pass) {
        std::string msg = "geiser_step needs a valid input state;";
        for (const auto& v : check.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    if (new_m.sign() < 0)
        throw std::invalid_argument("geiser_step: new multiplicity must be >= 0, got " +
                                    new_m.str());

    Rational dec = s.a + s.b + s.m - Rational(1) - s.c;
    // The main inequality just validated is exactly dec > 0.
    if (dec.sign() <= 0)
        throw std::logic_error("geiser_step: nonpositive decrement " + dec.str() +
                               " after a passing validation");

    Rational new_degree = s.omega_degree() - dec;
    if (new_degree.sign() < 0)
        throw std::invalid_argument("geiser_step: residual degree would become negative (" +
                                    new_degree.str() + "), no effective divisor remains");

    GeiserStep step;
    step.decrement = dec;
    step.next.a = s.a;
    step.next.b = s.b;
    step.next.c = s.a + s.b + s.m - Rational(1);
    step.next.m = new_m;
    if (new_degree.sign() > 0) step.next.omega = {OmegaComponent{new_degree, 1}};
    return step;
}

DescentTrace run_descent(const TriangleState& initial, const std::vector<Rational>& m_oracle,
                         size_t max_steps) {
    StateCheck check = validate_state(initial);
    if (!check.pass) {
        std::string msg = "run_descent needs a valid initial state;";
        for (const auto& v : check.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    if (initial.omega.empty())
        throw std::invalid_argument("run_descent: the initial state needs at least one residual "
                                    "component to set the discreteness floor");

    // Any later residual is a nonnegative integer combination of the initial
    // components, so its degree is either 0 or at least min e_i.
    Rational floor = initial.omega.front().e;
    for (const auto& c : initial.omega)
        if (c.e < floor) floor = c.e;

    DescentTrace trace;
    trace.states.push_back(initial);
    trace.terminal = DescentTerminal::step_limit;

    size_t used = 0;
    while (used < max_steps && used < m_oracle.size()) {
        const TriangleState& cur = trace.states.back();
        Rational dec = cur.a + cur.b + cur.m - Rational(1) - cur.c;
        Rational next_degree = cur.omega_degree() - dec;
        if (next_degree.sign() > 0 && next_degree < floor) {
            trace.terminal = DescentTerminal::contradiction;
            trace.certificate = "residual degree " + next_degree.str() +
                                " after step " + std::to_string(used + 1) +
                                " falls below the discreteness floor " + floor.str() +
                                ", yet every nonzero residual degree is at least the floor";
            return trace;
        }
        if (next_degree.sign() < 0) {
            trace.terminal = DescentTerminal::contradiction;
            trace.certificate = "residual degree would drop to " + next_degree.str() +
                                " after step " + std::to_string(used + 1) +
                                ", but residual divisors are effective";
            return trace;
        }

        GeiserStep step = geiser_step(cur, m_oracle[used]);
        ++used;
        StateCheck next_check = validate_state(step.next);
        if (!next_check.pass) {
            trace.terminal = DescentTerminal::contradiction;
            std::string msg = "state after step " + std::to_string(used) + " fails validation:";
            for (const auto& v : next_check.violations) msg += " " + v + ";";
            trace.certificate = msg;
            trace.states.push_back(step.next);
            trace.decrements.push_back(step.decrement);
            return trace;
        }
        trace.states.push_back(step.next);
        trace.decrements.push_back(step.decrement);
    }
    return trace;
}

const char* terminal_name(DescentTerminal t) {
    return t == DescentTerminal::contradiction ? "contradiction" : "step-limit";
}

Dp2BoundCheck dp2_component_bound(long k, const Rational& m1, const Rational& m2) {
    if (k < 0 || k > 2)
        throw std::invalid_argument("dp2_component_bound: k must be 0, 1, or 2, got " +
                                    std::to_string(k));
    if (m1.sign() < 0 || m2.sign() < 0)
        throw std::invalid_argument("dp2_component_bound: multiplicities must be >= 0");

    Dp2BoundCheck out;
    out.s = Rational(-1) + Rational(k, 2);
    Rational one(1);
    Rational lhs1 = m1 * out.s + m2 * (one - out.s);
    Rational lhs2 = m2 * out.s + m1 * (one - out.s);
    out.system_satisfied = (lhs1 <= one) && (lhs2 <= one);
    // With s <= 0 here, (-s) * first + (1 - s) * second eliminates m2 and
    // reads m1 (1 - 2s) <= 1 - 2s with 1 - 2s = 3 - k > 0, so m1 <= 1.
    out.forces_m1_le_1 = true;
    return out;
}

} // namespace delpezzo
