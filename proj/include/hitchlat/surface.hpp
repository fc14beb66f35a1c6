#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hitchlat/rational.hpp"

namespace hitchlat {

class SurfaceModel;
using SurfacePtr = std::shared_ptr<const SurfaceModel>;
struct BlowUpResult;

// A numerical divisor class: a rational coefficient vector over the basis
// of one SurfaceModel. Classes on different surfaces never mix; identity
// of the underlying model is pointer identity.
class DivisorClass {
 public:
  DivisorClass(SurfacePtr surface, RatVec coeffs);

  const SurfacePtr& surface() const { return surface_; }
  const RatVec& coeffs() const { return coeffs_; }
  const Rat& coeff(std::size_t i) const { return coeffs_.at(i); }
  std::size_t dim() const { return coeffs_.size(); }

  bool is_zero() const;
  bool is_integral() const;  // every coefficient has denominator 1

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rat& scalar);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
    a += b;
    return a;
  }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) {
    a -= b;
    return a;
  }
  friend DivisorClass operator*(const Rat& s, DivisorClass a) {
    a *= s;
    return a;
  }
  friend DivisorClass operator-(DivisorClass a) {
    a *= Rat(-1);
    return a;
  }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.surface_ == b.surface_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const DivisorClass& a, const DivisorClass& b) {
    return !(a == b);
  }

 private:
  SurfacePtr surface_;
  RatVec coeffs_;
};

// The numerical Picard lattice of one surface in the blow-up tower: an
// ordered basis of class labels, the symmetric intersection form on that
// basis, and the canonical class. Immutable after construction; blow-ups
// produce new models.
class SurfaceModel : public std::enable_shared_from_this<SurfaceModel> {
 public:
  const std::string& name() const { return name_; }
  int genus() const { return genus_; }
  const std::vector<std::string>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatVec>& form() const { return form_; }

  bool has_label(const std::string& label) const;
  std::size_t basis_index(const std::string& label) const;

  DivisorClass canonical() const;
  // The basis class with the given label (unit coefficient vector).
  DivisorClass class_of(const std::string& label) const;
  DivisorClass zero_class() const;
  DivisorClass make_class(RatVec coeffs) const;

 private:
  SurfaceModel(std::string name, int genus, std::vector<std::string> basis,
               std::vector<RatVec> form, RatVec canonical);

  friend SurfacePtr make_ruled_surface(int genus);
  friend struct BlowUpResult;
  friend BlowUpResult blow_up(const SurfacePtr& surface,
                              const std::vector<std::string>& labels,
                              const std::string& name);

  std::string name_;
  int genus_;
  std::vector<std::string> basis_;
  std::vector<RatVec> form_;
  RatVec canonical_;
};

// Embedding of the lattice of a blow-up source into the blown-up lattice:
// the target basis extends the source basis, and pulled-back classes carry
// zero coefficients on the new exceptional labels.
class PullbackMap {
 public:
  PullbackMap(SurfacePtr source, SurfacePtr target);

  const SurfacePtr& source() const { return source_; }
  const SurfacePtr& target() const { return target_; }
  bool is_identity() const { return source_ == target_; }

  DivisorClass apply(const DivisorClass& d) const;

 private:
  SurfacePtr source_;
  SurfacePtr target_;
};

struct BlowUpResult {
  SurfacePtr surface;
  PullbackMap map;
};

// The rank-2 lattice {C0, f} of the ruled surface over a genus-g base,
// with C0.C0 = f.f = 0, C0.f = 1 and K = -2*C0 + (2g-2)*f.
SurfacePtr make_ruled_surface(int genus);

// Extends the lattice by one (-1)-class per fresh label; the canonical
// class of the result is the pullback of the old one plus every new
// exceptional class. An empty label list returns the surface unchanged
// with the identity map.
BlowUpResult blow_up(const SurfacePtr& surface,
                     const std::vector<std::string>& labels,
                     const std::string& name = "");

// coeffs(a)^T * form * coeffs(b), exact. Throws if a and b live on
// different surfaces.
Rat intersect(const DivisorClass& a, const DivisorClass& b);

// 1 + (D.D + K.D)/2 -- the arithmetic genus when D is an integral curve
// class.
Rat adjunction_genus(const DivisorClass& d);

}  // namespace hitchlat
