#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hitchlat/rational.hpp"

namespace hitchlat {

// A rational-affine combination of formal chart symbols, e.g. z_2 - z_1.
// Zero-coefficient terms are never stored, so equality is plain
// coefficient comparison.
class FormalLinear {
 public:
  FormalLinear() : constant_(0) {}
  FormalLinear(const Rat& c) : constant_(c) {}
  FormalLinear(long c) : constant_(c) {}
  static FormalLinear symbol(const std::string& name);

  const Rat& constant() const { return constant_; }
  const std::map<std::string, Rat>& terms() const { return terms_; }
  bool is_constant() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && constant_ == 0; }

  FormalLinear& operator+=(const FormalLinear& other);
  FormalLinear& operator-=(const FormalLinear& other);
  FormalLinear& operator*=(const Rat& scalar);

  friend FormalLinear operator+(FormalLinear a, const FormalLinear& b) {
    a += b;
    return a;
  }
  friend FormalLinear operator-(FormalLinear a, const FormalLinear& b) {
    a -= b;
    return a;
  }
  // Defined only when at least one factor is constant; the algebra stays
  // linear in the symbols. Throws otherwise.
  friend FormalLinear operator*(const FormalLinear& a, const FormalLinear& b);
  friend bool operator==(const FormalLinear& a, const FormalLinear& b) {
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const FormalLinear& a, const FormalLinear& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  Rat constant_;
  std::map<std::string, Rat> terms_;
};

// Square matrix of formal linear entries. Products and first-column
// Laplace determinants only ever multiply through the guarded scalar
// product above; this suffices for the unipotent matrices modeled here.
class FormalMatrix {
 public:
  explicit FormalMatrix(std::size_t dim);
  static FormalMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  FormalLinear& at(std::size_t row, std::size_t col);
  const FormalLinear& at(std::size_t row, std::size_t col) const;

  FormalLinear determinant() const;
  // Diagonal constant 1, everything below the diagonal zero.
  bool is_upper_unipotent() const;

  friend FormalMatrix operator*(const FormalMatrix& a, const FormalMatrix& b);
  friend bool operator==(const FormalMatrix& a, const FormalMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const FormalMatrix& a, const FormalMatrix& b) {
    return !(a == b);
  }

 private:
  std::size_t dim_;
  std::vector<FormalLinear> entries_;
};

enum class CocycleKind { rank2, affine };

// Chart-to-chart transition over formal chart coordinates z_i:
// [[1, z_j - z_i], [0, 1]].
FormalMatrix transition_matrix_rank2(int i, int j);

// (g+1)x(g+1) identity with last column z'_{k,j} - z'_{k,i} for
// k = 1..g; the symbol z'_{k,i} is spelled zp_k_i. Requires g >= 1.
FormalMatrix transition_matrix_affine(int i, int j, int g);

struct CocycleReport {
  CocycleKind kind = CocycleKind::rank2;
  int g = 0;  // fiber parameter, affine kind only
  int m = 0;
  unsigned long long identities_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Checks, over charts 1..m: G_ii = I (m identities), det G_ij = 1 (m^2),
// G_ij * G_ji = I (m^2), and G_ij * G_jk = G_ik (m^3). Failures are
// recorded in the report, not thrown. For the affine kind g >= 1 is
// required; it is ignored for rank2.
CocycleReport verify_cocycle(int m, CocycleKind kind, int g = 0);

const char* cocycle_kind_name(CocycleKind kind);
// "rank2", or "affine(g)" with the fiber parameter filled in.
std::string cocycle_kind_label(CocycleKind kind, int g);

// Applies G_ij to the affine point (w, 1) and returns the affine part.
// The fiber dimension is w.size(): 1 for rank2, g for affine.
std::vector<FormalLinear> affine_action(const std::vector<FormalLinear>& w,
                                        int i, int j, CocycleKind kind);

}  // namespace hitchlat
