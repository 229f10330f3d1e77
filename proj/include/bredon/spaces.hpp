#ifndef BREDON_SPACES_HPP
#define BREDON_SPACES_HPP

#include <string>

#include "bredon/klein_point.hpp"

namespace bredon {

// H^{a+b eps}(B_{Sigma2}C2; Z/2) = Stong(eps)[c,b_cls]/(c^2 = x2 c + y2 b_cls),
// basis alpha * c^delta * b^e with alpha a Stong(eps) basis monomial.
GroupDescriptor b_space_group(int a, int b, bool reduced = false);
long b_space_dim(int a, int b);
long b_space_reduced_dim(int a, int b);

// H^{a,w}_{C2}(BC2; Z/2) = H^{*,*}(R)[s,t]/(s^2 = tau t + rho s).
GroupDescriptor bc2_motivic_group(int a, int w);
long bc2_motivic_dim(int a, int w);

// Same with the truncation t^q = 0.
long w_q_motivic_dim(int q, int a, int w);

// Topological E_{Sigma2}C2 and Etilde_{Sigma2}C2 at a Klein degree.
GroupDescriptor e_space_group(KleinDegree d);
long e_space_dim(KleinDegree d);
GroupDescriptor etilde_space_group(KleinDegree d);
long etilde_space_dim(KleinDegree d);

// Betti realization dictionary on class names (s->c, t->b, tau->y2, rho->x2;
// x1,y1,x3,y3,th1,k2 are preserved).  Throws IllFormed for unknown names.
std::string realize_class(const std::string& name);

}  // namespace bredon

#endif
