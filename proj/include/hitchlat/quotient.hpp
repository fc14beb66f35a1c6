#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hitchlat/surface.hpp"

namespace hitchlat {

class QuotientCoverModel;
using QuotientPtr = std::shared_ptr<const QuotientCoverModel>;

// A divisor class on the involution quotient, written in the fixed
// generator basis (C0+, F+, C1+, s_i+, r_i+). Two classes with equal
// pullback vectors are equal: the degree-2 quotient map pulls back
// injectively, so the pullback vector carries all the information the
// lattice sees.
class DaggerClass {
 public:
  DaggerClass(QuotientPtr model, RatVec gen_coeffs);

  const QuotientPtr& model() const { return model_; }
  const RatVec& gen_coeffs() const { return gen_coeffs_; }
  // The weighted sum of generator pullbacks, a class on the top lattice.
  const DivisorClass& pullback() const { return pullback_; }

  DaggerClass& operator+=(const DaggerClass& other);
  DaggerClass& operator-=(const DaggerClass& other);
  DaggerClass& operator*=(const Rat& scalar);
  friend DaggerClass operator+(DaggerClass a, const DaggerClass& b) {
    a += b;
    return a;
  }
  friend DaggerClass operator-(DaggerClass a, const DaggerClass& b) {
    a -= b;
    return a;
  }
  friend DaggerClass operator*(const Rat& s, DaggerClass a) {
    a *= s;
    return a;
  }
  friend bool operator==(const DaggerClass& a, const DaggerClass& b) {
    return a.model_ == b.model_ && a.pullback_ == b.pullback_;
  }
  friend bool operator!=(const DaggerClass& a, const DaggerClass& b) {
    return !(a == b);
  }

 private:
  QuotientPtr model_;
  RatVec gen_coeffs_;
  DivisorClass pullback_;
};

// The full blow-up tower over a genus-g hyperelliptic base together with
// the quotient model of the involution quotient surface:
//
//   ruled  -- {C0, f}
//   blown  -- ruled blown up at the 2g-2 canonical points on C0 (E_i)
//   top    -- blown blown up at the 4g+4 involution fixed points
//             (sperp_i on C0, rperp_i on the symmetric section)
//
// Divisor classes on the quotient are represented by their pullbacks to
// the top lattice; intersections downstairs are half the pairing of
// pullbacks (the cover has degree 2).
class QuotientCoverModel
    : public std::enable_shared_from_this<QuotientCoverModel> {
 public:
  int genus() const { return genus_; }
  int degree() const { return 2; }

  const SurfacePtr& ruled() const { return ruled_; }
  const SurfacePtr& blown() const { return blown_; }
  const SurfacePtr& top() const { return top_; }
  const PullbackMap& first_blowup() const { return bl_; }
  const PullbackMap& second_blowup() const { return bl_perp_; }
  // Embeds a class on the ruled surface all the way into the top lattice.
  DivisorClass embed_from_ruled(const DivisorClass& d) const;

  // Generator order: C0+, F+, C1+, s_1+..s_{2g+2}+, r_1+..r_{2g+2}+.
  std::size_t generator_count() const { return generator_names_.size(); }
  const std::vector<std::string>& generator_names() const {
    return generator_names_;
  }
  std::size_t generator_index(const std::string& name) const;
  const DivisorClass& generator_pullback(std::size_t index) const;
  const DivisorClass& generator_pullback(const std::string& name) const;

  // The pullback of the canonical class of the quotient surface:
  // K_top - sum(sperp_i + rperp_i).
  const DivisorClass& canonical_pullback() const {
    return canonical_pullback_;
  }

  DaggerClass dagger_class(RatVec gen_coeffs) const;
  DaggerClass dagger_zero() const;
  DaggerClass dagger_generator(const std::string& name) const;

 private:
  explicit QuotientCoverModel(int genus);
  friend QuotientPtr build_quotient_model(int genus);

  void verify_generator_table() const;

  int genus_;
  SurfacePtr ruled_;
  SurfacePtr blown_;
  SurfacePtr top_;
  PullbackMap bl_;
  PullbackMap bl_perp_;
  std::vector<std::string> generator_names_;
  std::vector<DivisorClass> generator_pullbacks_;
  DivisorClass canonical_pullback_;
};

// Result of checking one exact vector identity; lhs and rhs live on the
// top lattice of the model that produced them.
struct PullbackReport {
  DivisorClass lhs;
  DivisorClass rhs;
  bool match;
};

// Builds the tower and the generator pullback table for genus g >= 2 and
// re-verifies every defining identity of the table.
QuotientPtr build_quotient_model(int genus);

// The strict transform class of n*(C0 + (2g-2)f) under the first blow-up,
// embedded in the top lattice: embed(n*C0 + n*(2g-2)*f) - n*sum(E_i).
DivisorClass L_nnn(const QuotientCoverModel& model, long n);

// The unique quotient class lambda(n, mu) with pullback
// L_nnn - sum(mu_i * rperp_i), built from the parity-matched generator
// expression. Requires n > 2 and mu adapted to n (all mu_i == n mod 2,
// length 2g+2).
DaggerClass lambda_class(const QuotientPtr& model, long n,
                         const std::vector<long>& mu);

DivisorClass dagger_pullback(const DaggerClass& a);

// intersect(pullback a, pullback b) / 2: intersection numbers on the
// degree-2 quotient.
Rat dagger_intersect(const DaggerClass& a, const DaggerClass& b);

// Recomputes both sides of the defining equation of lambda(n, mu) and
// reports them with an exact-equality flag.
PullbackReport verify_lambda_pullback(const QuotientPtr& model, long n,
                                      const std::vector<long>& mu);

// Recomputes the canonical pullback along both available routes --
// K_top - sum(sperp_i + rperp_i) versus the pullback of the canonical
// class of the intermediate surface -- and reports them.
PullbackReport verify_canonical_pullback(const QuotientPtr& model);

}  // namespace hitchlat
