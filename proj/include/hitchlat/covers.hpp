#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hitchlat/quotient.hpp"
#include "hitchlat/rational.hpp"

namespace hitchlat {

// The tuple of intersection multiplicities of a cover at the 2g+2 finite
// fixed points, tested against a cover degree n. mu2 caches the sum of
// squares controlling the finiteness bound.
class CoverType {
 public:
  CoverType(std::vector<long> entries, long n);

  const std::vector<long>& entries() const { return entries_; }
  long n() const { return n_; }
  long mu2() const;
  std::size_t size() const { return entries_.size(); }
  // All entries congruent to n mod 2.
  bool adapted() const;

  friend bool operator==(const CoverType& a, const CoverType& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const CoverType& a, const CoverType& b) {
    return !(a == b);
  }

 private:
  std::vector<long> entries_;
  long n_;
  long mu2_;
};

// One verified identity: the lattice-computed value, the closed-form value
// it must equal, and the intermediate terms of the computation that
// establishes it.
struct VerificationReport {
  std::string check;
  long n = 0;
  int g = 0;
  std::vector<long> mu;
  Rat computed;
  Rat closed_form;
  bool match = false;
  RatVec chain;
};

// lambda(n, mu) . K-dagger, computed on the lattice, together with the
// three-term expansion n(2g-2) - 2n(2g-2) + n(2g-2) whose terms are
// themselves computed as lattice pairings of the component classes.
// match requires the intersection to be 0 and the chain to telescope to 0.
VerificationReport check_lambda_dot_K(const QuotientPtr& model, long n,
                                      const std::vector<long>& mu);

// lambda(n, mu)^2, lattice-computed, against the closed form
// (n^2(2g-2) - mu2)/2; the chain holds the expansion
// 2n^2(2g-2) - n^2(2g-2) - mu2, again term by term from the lattice.
VerificationReport check_lambda_self(const QuotientPtr& model, long n,
                                     const std::vector<long>& mu);

// The arithmetic genus 1 + (lambda^2 + lambda.K)/2 of lambda(n, mu),
// lattice-computed; asserts exact agreement with the closed form
// 1 + (n^2(2g-2) - mu2)/4 and integrality, then returns the integer.
// May be negative for non-admissible mu.
long genus_lambda(const QuotientPtr& model, long n,
                  const std::vector<long>& mu);

// mu adapted to n and mu2 <= n^2(2g-2) + 4. Pure arithmetic; needs no
// lattice. Throws if mu does not have length 2g+2.
bool is_admissible(long n, int g, const std::vector<long>& mu);

// The finiteness bound n^2(2g-2) + 4 on mu2.
long mu2_bound(long n, int g);

// dim of the ambient family of degree-n tangential covers:
// (n^2 - 1)(g - 1) - 1, stated for n > 2.
long moduli_dimension(long n, int g);

// dim |lambda(n, mu)| = 0: each admissible type contributes an isolated
// point. Reported constant.
int rigidity_constant();

enum class EnumerationMode { ordered, multiset };

struct EnumerationResult {
  long n = 0;
  int g = 0;
  long bound = 0;
  EnumerationMode mode = EnumerationMode::ordered;
  unsigned long long count = 0;
  std::vector<CoverType> types;
  // Set for n <= 2: the bound is still well defined but the lambda-class
  // lemmas only cover n > 2.
  bool below_lemma_range = false;
};

// All admissible types for (n, g): adapted to n with mu2 within the bound.
// Ordered mode emits every tuple in lexicographic order; multiset mode
// emits one non-increasing representative per multiset, in lexicographic
// order of the representatives. Output is deterministic regardless of the
// worker count (HITCHLAT_WORKERS, default: hardware parallelism).
EnumerationResult enumerate_cover_types(long n, int g, EnumerationMode mode);

// Streaming variant; sink is called in the same deterministic order.
unsigned long long enumerate_cover_types(
    long n, int g, EnumerationMode mode,
    const std::function<void(const CoverType&)>& sink);

const char* enumeration_mode_name(EnumerationMode mode);

}  // namespace hitchlat
