#include "cam/metric_engine.hpp"

namespace cam {

std::string_view to_string(Branch b) {
  return b == Branch::NoInheritance ? "NoInheritance" : "WithInheritance";
}

std::string_view to_string(CamMode m) { return m == CamMode::PerEdge ? "per-edge" : "pooled"; }

std::string_view to_string(CamFlag f) {
  switch (f) {
    case CamFlag::ZeroPrivateSubstituted:
      return "ZeroPrivateSubstituted";
    case CamFlag::ZeroInheritedPrivateSubstituted:
      return "ZeroInheritedPrivateSubstituted";
    case CamFlag::PrivateChainWarning:
      return "PrivateChainWarning";
  }
  return "";
}

namespace {

// numerator / denominator, substituting 1 for a zero denominator.
Component ratio(std::int64_t numerator, std::int64_t denominator, CamFlag on_zero) {
  if (denominator == 0) return Component{Rational(numerator), on_zero};
  return Component{Rational(numerator, denominator), {}};
}

}  // namespace

Component cam_no_inheritance(const VisibilityCounts& counts) {
  return ratio(counts.s_u + counts.s_r, counts.s_i, CamFlag::ZeroPrivateSubstituted);
}

Rational cam_public(std::int64_t n_lu, std::int64_t i_u) { return Rational(n_lu * i_u); }

Component cam_private(std::int64_t i_u, std::int64_t i_r, std::int64_t i_i, bool has_edges) {
  if (!has_edges) return Component{};
  return ratio(i_u + i_r, i_i, CamFlag::ZeroInheritedPrivateSubstituted);
}

Component cam_protected(std::int64_t n_lr, std::int64_t i_u, std::int64_t i_r, std::int64_t i_i,
                        bool has_edges) {
  if (!has_edges) return Component{};
  Component c = ratio(i_u + i_r, i_i, CamFlag::ZeroInheritedPrivateSubstituted);
  c.value *= n_lr;
  return c;
}

CamResult compute_cam(const VisibilityCounts& counts, const InheritanceSums& sums, std::int64_t n_f,
                      CamMode mode) {
  CamResult r;
  r.n_f = n_f;
  r.mode = mode;

  if (sums.n_i == 0) {
    const Component an = cam_no_inheritance(counts);
    r.branch = Branch::NoInheritance;
    r.c_an = an.value;
    r.flags = an.flags;
    r.cam = an.value + n_f;
    return r;
  }

  r.branch = Branch::WithInheritance;
  if (mode == CamMode::PerEdge) {
    const ModeSums& pub = sums[Visibility::Public];
    const ModeSums& prot = sums[Visibility::Protected];
    const ModeSums& priv = sums[Visibility::Private];
    r.c_au = cam_public(sums.n_lu, pub.i_u);
    const Component ar = cam_protected(sums.n_lr, prot.i_u, prot.i_r, prot.i_i, prot.edges > 0);
    const Component ai = cam_private(priv.i_u, priv.i_r, priv.i_i, priv.edges > 0);
    r.c_ar = ar.value;
    r.c_ai = ai.value;
    r.flags = ar.flags | ai.flags;
  } else {
    ModeSums pooled;
    for (const ModeSums& s : sums.by_mode) {
      pooled.i_u += s.i_u;
      pooled.i_r += s.i_r;
      pooled.i_i += s.i_i;
      pooled.edges += s.edges;
    }
    // (n_lr + 1)(i_u + i_r)/i_i splits into the protected share n_lr(...)
    // and the private share 1(...), both on pooled sums.
    r.c_au = cam_public(sums.n_lu, pooled.i_u);
    const Component ar = cam_protected(sums.n_lr, pooled.i_u, pooled.i_r, pooled.i_i);
    const Component ai = cam_private(pooled.i_u, pooled.i_r, pooled.i_i);
    r.c_ar = ar.value;
    r.c_ai = ai.value;
    r.flags = ar.flags | ai.flags;
  }
  r.cam = r.c_au + r.c_ar + r.c_ai + n_f;
  return r;
}

}  // namespace cam
