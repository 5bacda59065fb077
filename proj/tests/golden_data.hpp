// Hand-transcribed fixed point data used as golden values across the
// test suite.
#pragma once

#include <vector>

#include "bow/kclass.hpp"
#include "bow/maya.hpp"

namespace testdata {

using bow::i64;

// First of the two example diagrams for d=6, e=(2,3,1), f=(2,4):
// blocks -1/2 .. 5/2, rows E1,E2,E3, columns F1,F2.
inline bow::MayaDiagram maya_2maya_first() {
    return bow::MayaDiagram::from_blocks(3, 2, -1,
                                         {
                                             {0, 0, 0, 0, 1, 0},  // -1/2
                                             {1, 0, 0, 1, 1, 0},  // 1/2
                                             {0, 1, 0, 1, 1, 0},  // 3/2
                                             {1, 1, 1, 0, 1, 1},  // 5/2
                                         });
}

// Second example diagram with the same charges.
inline bow::MayaDiagram maya_2maya_second() {
    return bow::MayaDiagram::from_blocks(3, 2, -3,
                                         {
                                             {1, 0, 0, 0, 0, 0},  // -3/2
                                             {0, 0, 0, 0, 0, 1},  // -1/2
                                             {1, 0, 0, 0, 0, 0},  // 1/2
                                             {0, 0, 1, 0, 1, 1},  // 3/2
                                         });
}

// The diagram whose tie diagram is drawn for M(5, (-1,-2,2), (-1,0)).
inline bow::MayaDiagram maya_tie_figure() {
    return bow::MayaDiagram::from_blocks(3, 2, -3,
                                         {
                                             {0, 0, 0, 1, 0, 0},  // -3/2
                                             {0, 1, 1, 0, 0, 0},  // -1/2
                                             {1, 1, 1, 1, 1, 0},  // 1/2
                                             {1, 1, 1, 1, 1, 0},  // 3/2
                                         });
}

// The five tangent K-classes of M(5, (0,3), (-1,4)) as golden data, in
// u-exponent vectors w = (w_1, w_2).
inline std::vector<bow::KClass> tangent_classes_03() {
    const std::vector<i64> u12{1, -1};  // u1 u2^{-1}
    const std::vector<i64> u21{-1, 1};  // u2 u1^{-1}
    const std::vector<i64> u0{0, 0};
    std::vector<bow::KClass> cls(5, bow::KClass(2));
    // (u1u2^-1)(t1^-4 + t1^-3 t2^-1 + t1^-2) + (u2u1^-1)(t1^5 t2 + t1^4 t2^2 + t1^3 t2)
    cls[0].add_monomial(-4, 0, u12);
    cls[0].add_monomial(-3, -1, u12);
    cls[0].add_monomial(-2, 0, u12);
    cls[0].add_monomial(5, 1, u21);
    cls[0].add_monomial(4, 2, u21);
    cls[0].add_monomial(3, 1, u21);
    // (u1u2^-1)(t1^-2 t2^2 + t1^-2) + (u2u1^-1)(t1^3 t2^-1 + t1^3 t2) + (t1 t2^-1 + t2^2)
    cls[1].add_monomial(-2, 2, u12);
    cls[1].add_monomial(-2, 0, u12);
    cls[1].add_monomial(3, -1, u21);
    cls[1].add_monomial(3, 1, u21);
    cls[1].add_monomial(1, -1, u0);
    cls[1].add_monomial(0, 2, u0);
    // (u1u2^-1)(t1^-1 t2 + t1^-2) + (u2u1^-1)(t1^2 + t1^3 t2) + (t1^-1 t2 + t1^2)
    cls[2].add_monomial(-1, 1, u12);
    cls[2].add_monomial(-2, 0, u12);
    cls[2].add_monomial(2, 0, u21);
    cls[2].add_monomial(3, 1, u21);
    cls[2].add_monomial(-1, 1, u0);
    cls[2].add_monomial(2, 0, u0);
    // (u1u2^-1)(t1^-2 + t1^-3 t2) + (u2u1^-1)(t1^3 t2 + t1^4) + (t1 t2^-1 + t2^2)
    cls[3].add_monomial(-2, 0, u12);
    cls[3].add_monomial(-3, 1, u12);
    cls[3].add_monomial(3, 1, u21);
    cls[3].add_monomial(4, 0, u21);
    cls[3].add_monomial(1, -1, u0);
    cls[3].add_monomial(0, 2, u0);
    // (u1u2^-1)(2 t1^-2) + (u2u1^-1)(2 t1^3 t2) + (t1^-1 t2 + t1^2)
    cls[4].add_monomial(-2, 0, u12, 2);
    cls[4].add_monomial(3, 1, u21, 2);
    cls[4].add_monomial(-1, 1, u0);
    cls[4].add_monomial(2, 0, u0);
    return cls;
}

}  // namespace testdata
