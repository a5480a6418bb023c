#include "ybelab/fixtures.hpp"

#include <stdexcept>

namespace ybe::fixtures {

Algebra zero_alg2(FieldSpec f) {
    return Algebra(Cube(f, 2), {"e1", "e2"});
}

Algebra nil2(FieldSpec f) {
    Cube c(f, 2);
    c.at(0, 0, 1) = Scalar::one(f);
    return Algebra(std::move(c), {"e1", "e2"});
}

Algebra dual_num(FieldSpec f) {
    Cube c(f, 2);
    Scalar one = Scalar::one(f);
    c.at(0, 0, 0) = one;  // u.u = u
    c.at(0, 1, 1) = one;  // u.x = x
    c.at(1, 0, 1) = one;  // x.u = x
    return Algebra(std::move(c), {"u", "x"});
}

Algebra ut2(FieldSpec f) {
    // basis 0:E11 1:E12 2:E22
    Cube c(f, 3);
    Scalar one = Scalar::one(f);
    c.at(0, 0, 0) = one;  // E11 E11 = E11
    c.at(0, 1, 1) = one;  // E11 E12 = E12
    c.at(1, 2, 1) = one;  // E12 E22 = E12
    c.at(2, 2, 2) = one;  // E22 E22 = E22
    return Algebra(std::move(c), {"E11", "E12", "E22"});
}

Algebra m2(FieldSpec f) {
    // basis index 2*i+j for Eij (i,j in {0,1}); Eij Ekl = delta_jk Eil
    Cube c(f, 4);
    Scalar one = Scalar::one(f);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l)
                c.at(2 * i + j, 2 * j + l, 2 * i + l) = one;
    return Algebra(std::move(c), {"E11", "E12", "E21", "E22"});
}

Matrix dual_num_trace_form(FieldSpec f) {
    Matrix b(f, 2, 2);
    b.at(0, 1) = Scalar::one(f);
    b.at(1, 0) = Scalar::one(f);
    return b;
}

Algebra by_name(const std::string& name, FieldSpec f) {
    if (name == "ZeroAlg2") return zero_alg2(f);
    if (name == "Nil2") return nil2(f);
    if (name == "DualNum") return dual_num(f);
    if (name == "UT2") return ut2(f);
    if (name == "M2") return m2(f);
    throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<std::string> names() {
    return {"ZeroAlg2", "Nil2", "DualNum", "UT2", "M2"};
}

}  // namespace ybe::fixtures
