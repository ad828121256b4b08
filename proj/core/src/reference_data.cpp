#include "cylrig/reference_data.hpp"

#include <stdexcept>

#include "cylrig/constructions.hpp"

namespace cylrig {

namespace {

// an/ad + (bn/bd) * sqrt(2); the sqrt part is omitted when bn == 0.
Quad qq(long an, long ad = 1, long bn = 0, long bd = 1) {
    if (bn == 0) return Quad(rat_make(an, ad));
    return Quad(rat_make(an, ad), rat_make(bn, bd), 2);
}

std::vector<Quad> unit_radii(int n) { return std::vector<Quad>(n, qq(1)); }

ReferenceCase make_k5e() {
    ReferenceCase c;
    c.name = "K5-e";
    c.framework.graph = base_graph(c.name);
    c.framework.points = {
        {qq(0), qq(1), qq(0)},
        {qq(1), qq(0), qq(-1)},
        {qq(0, 1, 1, 2), qq(0, 1, -1, 2), qq(1, 3)},
        {qq(-1), qq(0), qq(-1, 3)},
        {qq(0, 1, 1, 2), qq(0, 1, 1, 2), qq(1, 2)},
    };
    c.framework.radii = unit_radii(5);
    c.stress.omega = {
        qq(239),           qq(-216, 1, -654), qq(201, 1, 270),
        qq(756, 1, 616),   qq(108, 1, 327),   qq(-1635, 2, -852),
        qq(108, 1, 88),    qq(-108, 1, -327), qq(-648, 1, -528),
    };
    c.stress.lambda = {
        qq(290, 1, 254),   qq(1595, 1, 1397), qq(1524, 1, 870),
        qq(3045, 1, 2667), qq(1016, 1, 580),
    };
    c.rank_rigidity = 13;
    c.rank_stress_matrix = 9;
    return c;
}

ReferenceCase make_h1() {
    ReferenceCase c;
    c.name = "H1";
    c.framework.graph = base_graph(c.name);
    c.framework.points = {
        {qq(0), qq(1), qq(0)},
        {qq(-1), qq(0), qq(-1, 3)},
        {qq(0, 1, 1, 2), qq(0, 1, -1, 2), qq(1, 3)},
        {qq(1), qq(0), qq(-1)},
        {qq(0), qq(-1), qq(2, 3)},
        {qq(0, 1, 1, 2), qq(0, 1, 1, 2), qq(1, 2)},
    };
    c.framework.radii = unit_radii(6);
    c.stress.omega = {
        qq(1),
        qq(0, 1, 2),
        qq(-361, 441, 10, 49),
        qq(-62, 147, -82, 147),
        qq(-20, 49, -80, 441),
        qq(0, 1, 1),
        qq(1, 2, 1),
        qq(0, 1, -1),
        qq(32, 147, 12, 49),
        qq(4, 49, 16, 441),
        qq(-24, 49, -32, 147),
    };
    c.stress.lambda = {
        qq(-10, 9, -10, 9), qq(-3, 1, -3), qq(-4, 1, -2),
        qq(-13, 9, -13, 9), qq(4, 3, 4, 3), qq(8, 9, 4, 9),
    };
    c.rank_rigidity = 16;
    c.rank_stress_matrix = 12;
    return c;
}

ReferenceCase make_h2() {
    ReferenceCase c;
    c.name = "H2";
    c.framework.graph = base_graph(c.name);
    c.framework.points = {
        {qq(0), qq(1), qq(0)},
        {qq(-1), qq(0), qq(-1, 3)},
        {qq(0, 1, 1, 2), qq(0, 1, -1, 2), qq(1, 3)},
        {qq(1), qq(0), qq(-1)},
        {qq(0), qq(-1), qq(2, 3)},
        {qq(0, 1, 1, 2), qq(0, 1, 1, 2), qq(1, 2)},
        {qq(0, 1, -1, 2), qq(0, 1, -1, 2), qq(-1, 4)},
    };
    c.framework.radii = unit_radii(7);
    c.stress.omega = {
        qq(1),
        qq(0, 1, 2),
        qq(-13, 21, 4, 7),
        qq(8, 7, 8, 21),
        qq(0, 1, 1),
        qq(1, 2, 1),
        qq(0, 1, -1),
        qq(-2652, 25165, -338, 25165),
        qq(-4652, 25165, -2764, 25165),
        qq(24784, 25165, 28424, 75495),
        qq(4652, 25165, 2764, 25165),
        qq(568, 3595, 16, 3595),
        qq(18608, 45297, 11056, 45297),
    };
    c.stress.lambda = {
        qq(-82, 21, -74, 21),     qq(-3, 1, -3),
        qq(-4, 1, -2),            qq(-269, 105, -253, 105),
        qq(-12, 35, -4, 35),      qq(-328, 315, -212, 315),
        qq(-1216, 315, -704, 315),
    };
    c.rank_rigidity = 19;
    c.rank_stress_matrix = 15;
    return c;
}

} // namespace

const std::vector<ReferenceCase>& reference_cases() {
    static const std::vector<ReferenceCase> cases = {make_k5e(), make_h1(),
                                                     make_h2()};
    return cases;
}

const ReferenceCase& reference_case(const std::string& name) {
    for (const ReferenceCase& c : reference_cases())
        if (c.name == name) return c;
    throw std::invalid_argument("reference_case: unknown name \"" + name +
                                "\"");
}

} // namespace cylrig
