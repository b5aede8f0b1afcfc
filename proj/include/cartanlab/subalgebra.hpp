#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartanlab/exact.hpp"
#include "cartanlab/lie_core.hpp"

namespace cartanlab {

// Incremental row-echelon basis: membership and reduction against a span.
class SpanReducer {
 public:
  explicit SpanReducer(std::size_t width) : width_(width) {}

  // Remainder of v after elimination against the stored rows.
  ExactVector reduce(ExactVector v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Q6& f = v[pivots_[r]];
      if (f.is_zero()) continue;
      Q6 coef = f;
      for (std::size_t j = 0; j < width_; ++j)
        if (!rows_[r][j].is_zero()) v[j] -= coef * rows_[r][j];
    }
    return v;
  }
  bool contains(const ExactVector& v) const {
    auto r = reduce(v);
    for (auto& e : r)
      if (!e.is_zero()) return false;
    return true;
  }
  // Adds v; returns false if v was already in the span.
  bool add(const ExactVector& v) {
    auto r = reduce(v);
    std::size_t p = 0;
    while (p < width_ && r[p].is_zero()) ++p;
    if (p == width_) return false;
    Q6 inv = Q6(1) / r[p];
    for (auto& e : r)
      if (!e.is_zero()) e *= inv;
    // keep rows fully reduced
    for (auto& row : rows_) {
      if (row[p].is_zero()) continue;
      Q6 f = row[p];
      for (std::size_t j = 0; j < width_; ++j)
        if (!r[j].is_zero()) row[j] -= f * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }
  std::size_t dim() const { return rows_.size(); }

 private:
  std::size_t width_;
  std::vector<ExactVector> rows_;
  std::vector<std::size_t> pivots_;
};

enum class ReductiveKind { none, so1n, su1m, l5 };

inline std::string reductive_name(ReductiveKind k) {
  switch (k) {
    case ReductiveKind::none: return "none";
    case ReductiveKind::so1n: return "SO(1,n)";
    case ReductiveKind::su1m: return "SU(1,m)";
    case ReductiveKind::l5: return "L5";
  }
  return "?";
}

class Subalgebra {
 public:
  Subalgebra() = default;

  // Validates linear independence and bracket closure exactly.
  static Subalgebra make(Ambient amb, std::vector<AlgElement> basis, std::string label = {}) {
    Subalgebra s;
    s.amb_ = amb;
    s.label_ = std::move(label);
    const std::size_t w = static_cast<std::size_t>(amb.size() * amb.size());
    SpanReducer red(w);
    for (auto& b : basis) {
      if (b.ambient() != amb) throw Error(ErrorCode::ambient_mismatch, "basis element from another algebra");
      if (!red.add(b.flat())) throw Error(ErrorCode::not_independent, "basis is linearly dependent");
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        if (!red.contains(bracket(basis[i], basis[j]).flat()))
          throw Error(ErrorCode::not_closed, "span is not closed under the bracket (basis elements " +
                                                 std::to_string(i) + ", " + std::to_string(j) + ")");
    s.basis_ = std::move(basis);
    return s;
  }

  // Reduces a spanning list to a basis first.
  static Subalgebra from_spanning(Ambient amb, const std::vector<AlgElement>& span, std::string label = {}) {
    const std::size_t w = static_cast<std::size_t>(amb.size() * amb.size());
    SpanReducer red(w);
    std::vector<AlgElement> basis;
    for (auto& b : span)
      if (red.add(b.flat())) basis.push_back(b);
    return make(amb, std::move(basis), std::move(label));
  }

  // Smallest subalgebra containing the generators.
  static Subalgebra generated_by(Ambient amb, const std::vector<AlgElement>& gens, std::string label = {}) {
    const std::size_t w = static_cast<std::size_t>(amb.size() * amb.size());
    SpanReducer red(w);
    std::vector<AlgElement> basis;
    for (auto& g : gens)
      if (red.add(g.flat())) basis.push_back(g);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        auto z = bracket(basis[i], basis[j]);
        if (red.add(z.flat())) basis.push_back(z);
      }
    return make(amb, std::move(basis), std::move(label));
  }

  const Ambient& ambient() const { return amb_; }
  int n() const { return amb_.n; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<AlgElement>& basis() const { return basis_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }
  ReductiveKind reductive() const { return reductive_; }
  void set_reductive(ReductiveKind k) { reductive_ = k; }
  // Free-form parameters recorded by constructors (for reports).
  const std::map<std::string, std::string>& meta() const { return meta_; }
  void set_meta(const std::string& k, const std::string& v) { meta_[k] = v; }

  bool in_an() const {
    if (amb_.kind != AmbientKind::so2n) return false;
    for (auto& b : basis_)
      if (!b.in_an()) return false;
    return true;
  }

  std::vector<ExactVector> coord_rows() const {
    if (!in_an()) throw Error(ErrorCode::unsupported_input, "subalgebra is not contained in a+n");
    std::vector<ExactVector> rows;
    for (auto& b : basis_) rows.push_back(b.coords()->flat());
    return rows;
  }

  bool contains(const AlgElement& X) const {
    SpanReducer red(static_cast<std::size_t>(amb_.size() * amb_.size()));
    for (auto& b : basis_) red.add(b.flat());
    return red.contains(X.flat());
  }

  bool same_span(const Subalgebra& o) const {
    if (amb_ != o.amb_ || dim() != o.dim()) return false;
    for (auto& b : o.basis_)
      if (!contains(b)) return false;
    return true;
  }

  // g h g^{-1}
  Subalgebra conjugate(const ExactMatrix& g, const ExactMatrix& ginv) const {
    std::vector<AlgElement> nb;
    for (auto& b : basis_) nb.push_back(make_element(amb_, g * b.matrix() * ginv));
    Subalgebra s = make(amb_, std::move(nb), label_);
    s.reductive_ = reductive_;
    s.meta_ = meta_;
    return s;
  }

 private:
  Ambient amb_;
  std::vector<AlgElement> basis_;
  std::string label_;
  ReductiveKind reductive_ = ReductiveKind::none;
  std::map<std::string, std::string> meta_;
};

// Subalgebra of a+n from coordinate rows.
inline Subalgebra an_subalgebra(int n, const std::vector<ExactVector>& rows, std::string label = {}) {
  std::vector<AlgElement> b;
  for (auto& r : rows) b.push_back(an_element_flat(n, r));
  return Subalgebra::make(so2n_ambient(n), std::move(b), std::move(label));
}

}  // namespace cartanlab
