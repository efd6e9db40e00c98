#include "mdtree/bijections.hpp"
#include "mdtree/text.hpp"
#include "trace_util.hpp"

namespace mdtree {

FnkTree compose_t_to_f(const TnkTree& t, Trace* trace) {
  detail::note(trace, "T", to_string(t.tree()));
  FnkTree out = zeta(gamma(beta(alpha(t, trace), trace), trace), trace);
  detail::note(trace, "F", to_string(out.tree()));
  return out;
}

TnkTree compose_f_to_t(const FnkTree& f, Trace* trace) {
  detail::note(trace, "F", to_string(f.tree()));
  TnkTree out = alpha_inv(beta_inv(gamma_inv(zeta_inv(f, trace), trace), trace), trace);
  detail::note(trace, "T", to_string(out.tree()));
  return out;
}

}  // namespace mdtree
