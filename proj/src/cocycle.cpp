#include "hitchlat/cocycle.hpp"

#include <sstream>
#include <stdexcept>

namespace hitchlat {

FormalLinear FormalLinear::symbol(const std::string& name) {
  if (name.empty())
    throw std::invalid_argument("formal symbol name must be non-empty");
  FormalLinear result;
  result.terms_[name] = 1;
  return result;
}

FormalLinear& FormalLinear::operator+=(const FormalLinear& other) {
  constant_ += other.constant_;
  for (const auto& [name, coeff] : other.terms_) {
    Rat& mine = terms_[name];
    mine += coeff;
    if (mine == 0) terms_.erase(name);
  }
  return *this;
}

FormalLinear& FormalLinear::operator-=(const FormalLinear& other) {
  constant_ -= other.constant_;
  for (const auto& [name, coeff] : other.terms_) {
    Rat& mine = terms_[name];
    mine -= coeff;
    if (mine == 0) terms_.erase(name);
  }
  return *this;
}

FormalLinear& FormalLinear::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    constant_ = 0;
    terms_.clear();
    return *this;
  }
  constant_ *= scalar;
  for (auto& [name, coeff] : terms_) coeff *= scalar;
  return *this;
}

FormalLinear operator*(const FormalLinear& a, const FormalLinear& b) {
  if (a.is_constant()) {
    FormalLinear result = b;
    result *= a.constant_;
    return result;
  }
  if (b.is_constant()) {
    FormalLinear result = a;
    result *= b.constant_;
    return result;
  }
  throw std::domain_error(
      "cannot multiply two non-constant formal expressions (" +
      a.to_string() + ") * (" + b.to_string() + ")");
}

std::string FormalLinear::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (constant_ != 0 || terms_.empty()) {
    out << rat_to_string(constant_);
    first = false;
  }
  for (const auto& [name, coeff] : terms_) {
    if (first) {
      if (coeff == -1)
        out << "-";
      else if (coeff != 1)
        out << rat_to_string(coeff) << "*";
    } else {
      out << (coeff > 0 ? " + " : " - ");
      const Rat mag = abs(coeff);
      if (mag != 1) out << rat_to_string(mag) << "*";
    }
    out << name;
    first = false;
  }
  return out.str();
}

FormalMatrix::FormalMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("matrix dimension must be >= 1");
}

FormalMatrix FormalMatrix::identity(std::size_t dim) {
  FormalMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = FormalLinear(1);
  return m;
}

FormalLinear& FormalMatrix::at(std::size_t row, std::size_t col) {
  if (row >= dim_ || col >= dim_)
    throw std::out_of_range("matrix index out of range");
  return entries_[row * dim_ + col];
}

const FormalLinear& FormalMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= dim_ || col >= dim_)
    throw std::out_of_range("matrix index out of range");
  return entries_[row * dim_ + col];
}

FormalMatrix operator*(const FormalMatrix& a, const FormalMatrix& b) {
  if (a.dim_ != b.dim_)
    throw std::invalid_argument("matrix dimension mismatch in product");
  FormalMatrix result(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i)
    for (std::size_t j = 0; j < a.dim_; ++j) {
      FormalLinear sum;
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const FormalLinear& left = a.at(i, k);
        const FormalLinear& right = b.at(k, j);
        if (left.is_zero() || right.is_zero()) continue;
        sum += left * right;
      }
      result.at(i, j) = sum;
    }
  return result;
}

FormalLinear FormalMatrix::determinant() const {
  if (dim_ == 1) return entries_[0];
  FormalLinear det;
  int sign = 1;
  for (std::size_t i = 0; i < dim_; ++i, sign = -sign) {
    const FormalLinear& pivot = at(i, 0);
    if (pivot.is_zero()) continue;
    FormalMatrix minor(dim_ - 1);
    for (std::size_t r = 0, mr = 0; r < dim_; ++r) {
      if (r == i) continue;
      for (std::size_t c = 1; c < dim_; ++c) minor.at(mr, c - 1) = at(r, c);
      ++mr;
    }
    FormalLinear term = pivot * minor.determinant();
    if (sign < 0) term *= Rat(-1);
    det += term;
  }
  return det;
}

bool FormalMatrix::is_upper_unipotent() const {
  const FormalLinear one(1);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (at(i, i) != one) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!at(i, j).is_zero()) return false;
  }
  return true;
}

namespace {

std::string chart_symbol(int i) { return "z_" + std::to_string(i); }

std::string affine_symbol(int k, int i) {
  return "zp_" + std::to_string(k) + "_" + std::to_string(i);
}

FormalMatrix build_transition(CocycleKind kind, int i, int j, int g) {
  return kind == CocycleKind::rank2 ? transition_matrix_rank2(i, j)
                                    : transition_matrix_affine(i, j, g);
}

}  // namespace

FormalMatrix transition_matrix_rank2(int i, int j) {
  FormalMatrix m = FormalMatrix::identity(2);
  m.at(0, 1) = FormalLinear::symbol(chart_symbol(j)) -
               FormalLinear::symbol(chart_symbol(i));
  return m;
}

FormalMatrix transition_matrix_affine(int i, int j, int g) {
  if (g < 1)
    throw std::invalid_argument("affine transition requires fiber g >= 1");
  const std::size_t dim = static_cast<std::size_t>(g) + 1;
  FormalMatrix m = FormalMatrix::identity(dim);
  for (int k = 1; k <= g; ++k)
    m.at(static_cast<std::size_t>(k) - 1, dim - 1) =
        FormalLinear::symbol(affine_symbol(k, j)) -
        FormalLinear::symbol(affine_symbol(k, i));
  return m;
}

const char* cocycle_kind_name(CocycleKind kind) {
  return kind == CocycleKind::rank2 ? "rank2" : "affine";
}

std::string cocycle_kind_label(CocycleKind kind, int g) {
  if (kind == CocycleKind::rank2) return "rank2";
  return "affine(" + std::to_string(g) + ")";
}

CocycleReport verify_cocycle(int m, CocycleKind kind, int g) {
  if (m < 2)
    throw std::invalid_argument("cocycle check requires m >= 2 charts");
  if (kind == CocycleKind::affine && g < 1)
    throw std::invalid_argument("affine transition requires fiber g >= 1");

  CocycleReport report;
  report.kind = kind;
  report.g = kind == CocycleKind::affine ? g : 0;
  report.m = m;

  const std::size_t dim = kind == CocycleKind::rank2
                              ? 2
                              : static_cast<std::size_t>(g) + 1;
  const FormalMatrix id = FormalMatrix::identity(dim);
  const FormalLinear one(1);
  auto note = [&report](std::string text) {
    report.failures.push_back(std::move(text));
  };

  for (int i = 1; i <= m; ++i) {
    ++report.identities_checked;
    if (build_transition(kind, i, i, g) != id)
      note("G_" + std::to_string(i) + std::to_string(i) + " != I");
  }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      const FormalMatrix g_ij = build_transition(kind, i, j, g);
      ++report.identities_checked;
      if (g_ij.determinant() != one)
        note("det G_" + std::to_string(i) + std::to_string(j) + " != 1");
      ++report.identities_checked;
      if (g_ij * build_transition(kind, j, i, g) != id)
        note("G_" + std::to_string(i) + std::to_string(j) + " * G_" +
             std::to_string(j) + std::to_string(i) + " != I");
    }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k) {
        ++report.identities_checked;
        const FormalMatrix lhs = build_transition(kind, i, j, g) *
                                 build_transition(kind, j, k, g);
        if (lhs != build_transition(kind, i, k, g))
          note("G_" + std::to_string(i) + std::to_string(j) + " * G_" +
               std::to_string(j) + std::to_string(k) + " != G_" +
               std::to_string(i) + std::to_string(k));
      }
  return report;
}

std::vector<FormalLinear> affine_action(const std::vector<FormalLinear>& w,
                                        int i, int j, CocycleKind kind) {
  if (kind == CocycleKind::rank2 && w.size() != 1)
    throw std::invalid_argument(
        "rank2 action requires fiber dimension 1, got " +
        std::to_string(w.size()));
  if (kind == CocycleKind::affine && w.empty())
    throw std::invalid_argument("affine action requires fiber dimension >= 1");

  const int g = static_cast<int>(w.size());
  const FormalMatrix matrix = build_transition(kind, i, j, g);
  const std::size_t dim = matrix.dim();

  // Apply to the column (w, 1); the last row must come back as the
  // constant 1 for the affine description to be consistent.
  std::vector<FormalLinear> column(w);
  column.emplace_back(1);
  std::vector<FormalLinear> out(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      if (matrix.at(r, c).is_zero() || column[c].is_zero()) continue;
      out[r] += matrix.at(r, c) * column[c];
    }
  if (out[dim - 1] != FormalLinear(1))
    throw std::logic_error("affine action did not preserve the base point");
  out.pop_back();
  return out;
}

}  // namespace hitchlat
