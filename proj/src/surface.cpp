#include "hitchlat/surface.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace hitchlat {

namespace {

void require_same_surface(const DivisorClass& a, const DivisorClass& b,
                          const char* what) {
  if (a.surface() != b.surface())
    throw std::invalid_argument(
        std::string(what) + ": classes live on different surfaces ('" +
        a.surface()->name() + "' vs '" + b.surface()->name() + "')");
}

}  // namespace

DivisorClass::DivisorClass(SurfacePtr surface, RatVec coeffs)
    : surface_(std::move(surface)), coeffs_(std::move(coeffs)) {
  if (!surface_) throw std::invalid_argument("DivisorClass: null surface");
  if (coeffs_.size() != surface_->dim())
    throw std::invalid_argument(
        "DivisorClass: coefficient vector has length " +
        std::to_string(coeffs_.size()) + ", basis has length " +
        std::to_string(surface_->dim()));
}

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat& c) { return c == 0; });
}

bool DivisorClass::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat& c) { return rat_is_integer(c); });
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same_surface(*this, other, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same_surface(*this, other, "subtract");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rat& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

SurfaceModel::SurfaceModel(std::string name, int genus,
                           std::vector<std::string> basis,
                           std::vector<RatVec> form, RatVec canonical)
    : name_(std::move(name)),
      genus_(genus),
      basis_(std::move(basis)),
      form_(std::move(form)),
      canonical_(std::move(canonical)) {
  const std::size_t n = basis_.size();
  if (form_.size() != n || canonical_.size() != n)
    throw std::logic_error("SurfaceModel: inconsistent dimensions");
  for (std::size_t i = 0; i < n; ++i) {
    if (form_[i].size() != n)
      throw std::logic_error("SurfaceModel: form is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (form_[i][j] != form_[j][i])
        throw std::logic_error("SurfaceModel: form is not symmetric");
  }
}

bool SurfaceModel::has_label(const std::string& label) const {
  return std::find(basis_.begin(), basis_.end(), label) != basis_.end();
}

std::size_t SurfaceModel::basis_index(const std::string& label) const {
  auto it = std::find(basis_.begin(), basis_.end(), label);
  if (it == basis_.end())
    throw std::invalid_argument("surface '" + name_ + "' has no basis class '" +
                                label + "'");
  return static_cast<std::size_t>(it - basis_.begin());
}

DivisorClass SurfaceModel::canonical() const {
  return DivisorClass(shared_from_this(), canonical_);
}

DivisorClass SurfaceModel::class_of(const std::string& label) const {
  RatVec coeffs(dim(), Rat(0));
  coeffs[basis_index(label)] = 1;
  return DivisorClass(shared_from_this(), std::move(coeffs));
}

DivisorClass SurfaceModel::zero_class() const {
  return DivisorClass(shared_from_this(), RatVec(dim(), Rat(0)));
}

DivisorClass SurfaceModel::make_class(RatVec coeffs) const {
  return DivisorClass(shared_from_this(), std::move(coeffs));
}

PullbackMap::PullbackMap(SurfacePtr source, SurfacePtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!source_ || !target_)
    throw std::invalid_argument("PullbackMap: null surface");
  if (source_ == target_) return;
  if (target_->dim() < source_->dim())
    throw std::invalid_argument("PullbackMap: target smaller than source");
  for (std::size_t i = 0; i < source_->dim(); ++i)
    if (source_->basis()[i] != target_->basis()[i])
      throw std::invalid_argument(
          "PullbackMap: target basis does not extend source basis");
}

DivisorClass PullbackMap::apply(const DivisorClass& d) const {
  if (d.surface() != source_)
    throw std::invalid_argument("pullback: class does not live on source '" +
                                source_->name() + "'");
  if (is_identity()) return d;
  RatVec coeffs(target_->dim(), Rat(0));
  for (std::size_t i = 0; i < d.dim(); ++i) coeffs[i] = d.coeff(i);
  return DivisorClass(target_, std::move(coeffs));
}

SurfacePtr make_ruled_surface(int genus) {
  if (genus < 2)
    throw std::invalid_argument("base curve must have genus >= 2");
  std::vector<std::string> basis = {"C0", "f"};
  std::vector<RatVec> form = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  RatVec canonical = {Rat(-2), Rat(2 * genus - 2)};
  return SurfacePtr(new SurfaceModel("ruled_g" + std::to_string(genus), genus,
                                     std::move(basis), std::move(form),
                                     std::move(canonical)));
}

BlowUpResult blow_up(const SurfacePtr& surface,
                     const std::vector<std::string>& labels,
                     const std::string& name) {
  if (!surface) throw std::invalid_argument("blow_up: null surface");
  if (labels.empty()) return {surface, PullbackMap(surface, surface)};

  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (surface->has_label(label))
      throw std::invalid_argument("blow_up: label '" + label +
                                  "' already in basis of '" + surface->name() +
                                  "'");
    if (!seen.insert(label).second)
      throw std::invalid_argument("blow_up: duplicate label '" + label + "'");
  }

  const std::size_t old_dim = surface->dim();
  const std::size_t new_dim = old_dim + labels.size();

  std::vector<std::string> basis = surface->basis();
  basis.insert(basis.end(), labels.begin(), labels.end());

  // Form extends by a -1 diagonal block; exceptional classes are orthogonal
  // to each other and to every pulled-back class.
  std::vector<RatVec> form(new_dim, RatVec(new_dim, Rat(0)));
  for (std::size_t i = 0; i < old_dim; ++i)
    for (std::size_t j = 0; j < old_dim; ++j) form[i][j] = surface->form()[i][j];
  for (std::size_t k = old_dim; k < new_dim; ++k) form[k][k] = -1;

  // K gains one copy of each new exceptional class.
  RatVec canonical(new_dim, Rat(1));
  for (std::size_t i = 0; i < old_dim; ++i)
    canonical[i] = surface->canonical().coeff(i);

  std::string new_name = name.empty() ? surface->name() + "_bl" : name;
  SurfacePtr result(new SurfaceModel(std::move(new_name), surface->genus(),
                                     std::move(basis), std::move(form),
                                     std::move(canonical)));
  return {result, PullbackMap(surface, result)};
}

Rat intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same_surface(a, b, "intersect");
  const auto& form = a.surface()->form();
  Rat total(0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.coeff(i) == 0) continue;
    Rat row(0);
    for (std::size_t j = 0; j < b.dim(); ++j) {
      if (b.coeff(j) == 0 || form[i][j] == 0) continue;
      row += form[i][j] * b.coeff(j);
    }
    total += a.coeff(i) * row;
  }
  return total;
}

Rat adjunction_genus(const DivisorClass& d) {
  const Rat self = intersect(d, d);
  const Rat with_k = intersect(d.surface()->canonical(), d);
  return Rat(1) + (self + with_k) / 2;
}

}  // namespace hitchlat
