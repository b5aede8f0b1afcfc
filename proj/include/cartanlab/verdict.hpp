#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cartanlab/exact.hpp"
#include "cartanlab/lie_core.hpp"

namespace cartanlab {

// Structural type of a subalgebra of a+n.
struct TypeVerdict {
  std::string label;                 // "T2.5-1".."T2.9-8", "P2.10", "CDS", "incompatible-unresolved"
  std::vector<std::string> aliases;  // equivalent item labels
  int n = 0;
  int dim = 0;
  int dim_nil = 0;                   // dim of h∩n
  bool normalized = false;           // a conjugation by exp(Z), Z in n, was applied
  bool semidirect = false;

  std::optional<Q6> exponent;        // single growth exponent where the item fixes one
  std::optional<Q6> p;               // item parameter (slope p, or the p of the SO(1,n) data)
  std::optional<Root> omega, gamma;
  std::optional<std::array<Q6, 2>> tau;
  std::optional<std::string> torus_kernel;
  std::optional<std::vector<ExactVector>> x0_basis;
  std::optional<ExactVector> b, c;
  std::optional<ExactMatrix> B;      // graph map for items whose x,y-image is a graph
  std::vector<std::string> notes;

  bool is(const std::string& l) const {
    if (label == l) return true;
    for (auto& a : aliases)
      if (a == l) return true;
    return false;
  }
};

enum class Correction { none, log, log2, per_log, per_log2 };

inline std::string correction_name(Correction c) {
  switch (c) {
    case Correction::none: return "none";
    case Correction::log: return "log";
    case Correction::log2: return "log^2";
    case Correction::per_log: return "per-log";
    case Correction::per_log2: return "per-log^2";
  }
  return "?";
}

enum class Confidence { exact, fitted, inconclusive };

inline std::string confidence_name(Confidence c) {
  switch (c) {
    case Confidence::exact: return "exact-from-theorem";
    case Confidence::fitted: return "fitted";
    case Confidence::inconclusive: return "inconclusive";
  }
  return "?";
}

// mu(H) ≈ [|h|^p (lower correction), |h|^q (upper correction)].
struct GrowthWindow {
  double p = 0, q = 0;
  std::optional<Q6> p_exact, q_exact;
  Correction lower = Correction::none;
  Correction upper = Correction::none;
  Confidence confidence = Confidence::fitted;
  std::vector<std::string> notes;
};

enum class CK { HasCompactForm, NoCompactForm, ConjecturalNoSU1m, HCompact, GmodHCompact, Inconclusive };

inline std::string ck_name(CK v) {
  switch (v) {
    case CK::HasCompactForm: return "HasCompactForm";
    case CK::NoCompactForm: return "NoCompactForm";
    case CK::ConjecturalNoSU1m: return "ConjecturalNo-SU1m";
    case CK::HCompact: return "HCompact";
    case CK::GmodHCompact: return "GmodHCompact";
    case CK::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct CKVerdict {
  CK verdict = CK::Inconclusive;
  std::vector<std::string> justification;
  std::vector<std::string> notes;
  std::optional<TypeVerdict> type;
};

}  // namespace cartanlab
