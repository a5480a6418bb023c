#ifndef YBELAB_FIXTURES_HPP
#define YBELAB_FIXTURES_HPP

#include "ybelab/algebra.hpp"

namespace ybe::fixtures {

/// n=2, all products zero.
Algebra zero_alg2(FieldSpec f);

/// n=2, e1.e1 = e2, all other products zero.
Algebra nil2(FieldSpec f);

/// Unital dim-2 algebra k[x]/(x^2): basis {u, x}, u.u=u, u.x=x.u=x, x.x=0.
Algebra dual_num(FieldSpec f);

/// Upper-triangular 2x2 matrices, basis {E11, E12, E22}.
Algebra ut2(FieldSpec f);

/// Full 2x2 matrix algebra, basis {E11, E12, E21, E22}.
Algebra m2(FieldSpec f);

/// Trace-like symmetric invariant form on dual_num: B(u,x)=B(x,u)=1, else 0.
Matrix dual_num_trace_form(FieldSpec f);

/// Lookup by name ("ZeroAlg2", "Nil2", "DualNum", "UT2", "M2"); throws on
/// unknown names.
Algebra by_name(const std::string& name, FieldSpec f);
std::vector<std::string> names();

}  // namespace ybe::fixtures

#endif
