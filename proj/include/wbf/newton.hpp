#pragma once

#include <vector>

#include "wbf/poly.hpp"

namespace wbf {

using RVec = std::vector<Rational>;

struct NewtonPolytope {
  std::vector<MultiIndex> support;
  std::vector<MultiIndex> vertices;
  unsigned dim = 0;
};

struct Face {
  RVec defining_weight;
  std::vector<MultiIndex> members;   // support points on the face
  std::vector<MultiIndex> vertices;  // polytope vertices on the face
};

struct FaceData {
  Rational ord;
  Face face;
  Polynomial truncation;
};

struct Cone {
  std::vector<RVec> rays;       // primitive integer generators of the pointed part
  std::vector<RVec> lineality;  // basis of the lineality space
  std::vector<RVec> inequalities;  // ⟨a, ω⟩ ≥ 0
  RVec interior;                // sum of rays (a relative-interior point)
  MultiIndex vertex;            // vertex whose normal cone this is
};

struct Fan {
  std::size_t n = 0;
  std::vector<Cone> maximal;
  // Distinct rays; for n = 2 sorted counterclockwise from angle 0.
  std::vector<RVec> rays;
};

// Exact vertex set by linear-programming extreme point tests.
NewtonPolytope newton_polytope(const Polynomial& f);
// ord_f(ω) = min ⟨γ, ω⟩ over the support, the face τ_ω, and f_τ.
FaceData face_data(const Polynomial& f, const RVec& omega);
Rational ord_f(const Polynomial& f, const RVec& omega);
// Maximal cones of the dual fan (normal cones of the vertices); n ≤ 3.
Fan dual_fan(const Polynomial& f);
// Basis of {ω : ⟨ω, γ⟩ = ⟨ω, γ'⟩ for γ, γ' in the face}.
std::vector<RVec> face_dual_space(const Polynomial& f, const Face& face);

// Linear algebra helpers over ℚ.
std::vector<RVec> null_space(const std::vector<RVec>& rows, std::size_t ncols);
std::size_t matrix_rank(const std::vector<RVec>& rows, std::size_t ncols);
// Is there x ≥ 0 with A x = b? (A given by rows.)
bool lp_feasible(const std::vector<RVec>& a, const RVec& b);
// Scales to coprime integers (sign kept).
RVec primitive_vector(const RVec& v);
Rational dot(const RVec& a, const MultiIndex& g);

}  // namespace wbf
