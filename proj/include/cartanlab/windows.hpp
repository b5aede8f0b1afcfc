#pragma once

// Growth windows mu(H) ≈ [|h|^p, |h|^q] attached to each structural type.

#include <string>

#include "cartanlab/error.hpp"
#include "cartanlab/verdict.hpp"

namespace cartanlab {

inline GrowthWindow exact_window(const Q6& p, const Q6& q, Correction lower = Correction::none,
                                 Correction upper = Correction::none) {
  GrowthWindow w;
  w.p_exact = p;
  w.q_exact = q;
  w.p = p.to_double();
  w.q = q.to_double();
  w.lower = lower;
  w.upper = upper;
  w.confidence = Confidence::exact;
  return w;
}

inline GrowthWindow predicted_window(const TypeVerdict& v) {
  const std::string& L = v.label;
  const Q6 one(1), two(2), three_halves = Q6::ratio(3, 2);
  if (L == "T2.5-1" || L == "T2.6-1") {
    if (!v.exponent) throw Error(ErrorCode::no_prediction, L + " verdict carries no exponent");
    return exact_window(*v.exponent, *v.exponent);
  }
  if (L == "T2.5-2" || L == "T2.6-2") return exact_window(two, two);
  if (L == "T2.5-3" || L == "T2.5-4" || L == "T2.6-3" || L == "T2.6-4" || L == "T2.6-5" || L == "T2.6-7")
    return exact_window(one, one);
  if (L == "T2.6-6") return exact_window(three_halves, three_halves);
  if (L == "P2.10") {
    if (!v.p || !v.omega) throw Error(ErrorCode::no_prediction, "P2.10 verdict without (omega, p)");
    Q6 ap = abs(*v.p);
    if (*v.omega == Root::alpha || *v.omega == Root::alpha_2beta) return exact_window(two / (one + ap), two);
    return exact_window(one, one + ap);
  }
  if (L == "T2.9-1" || L == "T2.9-4") return exact_window(one, two, Correction::none, Correction::per_log);
  if (L == "T2.9-2" || L == "T2.9-3") return exact_window(two, two, Correction::per_log2, Correction::none);
  if (L == "T2.9-5") return exact_window(one, three_halves);
  if (L == "T2.9-6") return exact_window(one, one, Correction::none, Correction::log2);
  if (L == "T2.9-7" || L == "T2.9-8") return exact_window(one, two, Correction::log, Correction::none);
  if (L == "CDS") return exact_window(one, two);
  throw Error(ErrorCode::no_prediction, "no growth window for '" + L + "'");
}

}  // namespace cartanlab
