#include "hitchlat/quotient.hpp"

#include <stdexcept>
#include <utility>

namespace hitchlat {

namespace {

void require_same_model(const DaggerClass& a, const DaggerClass& b,
                        const char* what) {
  if (a.model() != b.model())
    throw std::invalid_argument(std::string(what) +
                                ": classes live on different quotient models");
}

DivisorClass weighted_pullback(const QuotientCoverModel& model,
                               const RatVec& gen_coeffs) {
  DivisorClass result = model.top()->zero_class();
  for (std::size_t i = 0; i < gen_coeffs.size(); ++i) {
    if (gen_coeffs[i] == 0) continue;
    result += gen_coeffs[i] * model.generator_pullback(i);
  }
  return result;
}

}  // namespace

DaggerClass::DaggerClass(QuotientPtr model, RatVec gen_coeffs)
    : model_(std::move(model)),
      gen_coeffs_(std::move(gen_coeffs)),
      pullback_(model_ ? weighted_pullback(*model_, gen_coeffs_)
                       : throw std::invalid_argument("DaggerClass: null model")) {
  if (gen_coeffs_.size() != model_->generator_count())
    throw std::invalid_argument(
        "DaggerClass: coefficient vector has length " +
        std::to_string(gen_coeffs_.size()) + ", generator table has " +
        std::to_string(model_->generator_count()));
}

DaggerClass& DaggerClass::operator+=(const DaggerClass& other) {
  require_same_model(*this, other, "add");
  for (std::size_t i = 0; i < gen_coeffs_.size(); ++i)
    gen_coeffs_[i] += other.gen_coeffs_[i];
  pullback_ += other.pullback_;
  return *this;
}

DaggerClass& DaggerClass::operator-=(const DaggerClass& other) {
  require_same_model(*this, other, "subtract");
  for (std::size_t i = 0; i < gen_coeffs_.size(); ++i)
    gen_coeffs_[i] -= other.gen_coeffs_[i];
  pullback_ -= other.pullback_;
  return *this;
}

DaggerClass& DaggerClass::operator*=(const Rat& scalar) {
  for (auto& c : gen_coeffs_) c *= scalar;
  pullback_ *= scalar;
  return *this;
}

QuotientCoverModel::QuotientCoverModel(int genus)
    : genus_(genus),
      ruled_(make_ruled_surface(genus)),
      blown_([&] {
        std::vector<std::string> labels;
        for (int i = 1; i <= 2 * genus - 2; ++i)
          labels.push_back("E_" + std::to_string(i));
        return blow_up(ruled_, labels, "tilde_g" + std::to_string(genus));
      }()
                 .surface),
      top_([&] {
        std::vector<std::string> labels;
        for (int i = 1; i <= 2 * genus + 2; ++i)
          labels.push_back("sperp_" + std::to_string(i));
        for (int i = 1; i <= 2 * genus + 2; ++i)
          labels.push_back("rperp_" + std::to_string(i));
        return blow_up(blown_, labels, "perp_g" + std::to_string(genus));
      }()
                .surface),
      bl_(ruled_, blown_),
      bl_perp_(blown_, top_),
      canonical_pullback_(top_->zero_class()) {
  const int ne = 2 * genus - 2;
  const int nf = 2 * genus + 2;

  auto sum_of = [&](const std::string& prefix) {
    DivisorClass sum = top_->zero_class();
    for (int i = 1; i <= nf; ++i)
      sum += top_->class_of(prefix + "_" + std::to_string(i));
    return sum;
  };
  DivisorClass sum_e = top_->zero_class();
  for (int i = 1; i <= ne; ++i)
    sum_e += top_->class_of("E_" + std::to_string(i));
  const DivisorClass sum_s = sum_of("sperp");
  const DivisorClass sum_r = sum_of("rperp");

  // C0 passes through the canonical blow-up points and the fixed points on
  // itself, so its strict transform loses every E_i and every sperp_i. The
  // fiber sum descends with full pullback class.
  const DivisorClass p_c0 =
      embed_from_ruled(ruled_->class_of("C0")) - sum_e - sum_s;
  const DivisorClass p_f =
      embed_from_ruled(Rat(2 * genus - 2) * ruled_->class_of("f"));
  // The symmetric section C1 meets each Weierstrass fiber in its finite
  // fixed point and meets C0 exactly over the canonical points, so its
  // strict transform loses every E_i and every rperp_i but no sperp_i.
  const DivisorClass p_c1 = p_c0 + p_f + sum_s - sum_r;

  generator_names_ = {"C0_dagger", "F_dagger", "C1_dagger"};
  generator_pullbacks_ = {p_c0, p_f, p_c1};
  for (int i = 1; i <= nf; ++i) {
    generator_names_.push_back("s_dagger_" + std::to_string(i));
    generator_pullbacks_.push_back(
        Rat(2) * top_->class_of("sperp_" + std::to_string(i)));
  }
  for (int i = 1; i <= nf; ++i) {
    generator_names_.push_back("r_dagger_" + std::to_string(i));
    generator_pullbacks_.push_back(
        Rat(2) * top_->class_of("rperp_" + std::to_string(i)));
  }

  // The double cover is ramified exactly along the exceptional curves over
  // the fixed points, so the quotient canonical pulls back to K_top minus
  // the ramification divisor.
  canonical_pullback_ = top_->canonical() - sum_s - sum_r;

  verify_generator_table();
}

DivisorClass QuotientCoverModel::embed_from_ruled(const DivisorClass& d) const {
  return bl_perp_.apply(bl_.apply(d));
}

std::size_t QuotientCoverModel::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generator_names_.size(); ++i)
    if (generator_names_[i] == name) return i;
  throw std::invalid_argument("quotient model has no generator '" + name + "'");
}

const DivisorClass& QuotientCoverModel::generator_pullback(
    std::size_t index) const {
  return generator_pullbacks_.at(index);
}

const DivisorClass& QuotientCoverModel::generator_pullback(
    const std::string& name) const {
  return generator_pullbacks_[generator_index(name)];
}

DaggerClass QuotientCoverModel::dagger_class(RatVec gen_coeffs) const {
  return DaggerClass(shared_from_this(), std::move(gen_coeffs));
}

DaggerClass QuotientCoverModel::dagger_zero() const {
  return dagger_class(RatVec(generator_count(), Rat(0)));
}

DaggerClass QuotientCoverModel::dagger_generator(const std::string& name) const {
  RatVec coeffs(generator_count(), Rat(0));
  coeffs[generator_index(name)] = 1;
  return dagger_class(std::move(coeffs));
}

void QuotientCoverModel::verify_generator_table() const {
  const int ne = 2 * genus_ - 2;
  const int nf = 2 * genus_ + 2;
  auto fail = [](const std::string& what) {
    throw std::logic_error("quotient model construction: " + what +
                           " identity failed");
  };

  for (int i = 1; i <= nf; ++i) {
    if (generator_pullback("s_dagger_" + std::to_string(i)) !=
        Rat(2) * top_->class_of("sperp_" + std::to_string(i)))
      fail("s_dagger doubling");
    if (generator_pullback("r_dagger_" + std::to_string(i)) !=
        Rat(2) * top_->class_of("rperp_" + std::to_string(i)))
      fail("r_dagger doubling");
  }

  DivisorClass sum_e = top_->zero_class();
  for (int i = 1; i <= ne; ++i)
    sum_e += top_->class_of("E_" + std::to_string(i));
  DivisorClass sum_s = top_->zero_class();
  DivisorClass sum_r = top_->zero_class();
  for (int i = 1; i <= nf; ++i) {
    sum_s += top_->class_of("sperp_" + std::to_string(i));
    sum_r += top_->class_of("rperp_" + std::to_string(i));
  }

  // Summed identity: n*(C0+ + F+) must equal the embedded class of
  // n*(C0 + (2g-2)f) minus n*(sum sperp + sum E). Linear in n; checked at
  // n = 1 and n = 2.
  for (long n = 1; n <= 2; ++n) {
    const DivisorClass lhs = Rat(n) * (generator_pullback("C0_dagger") +
                                       generator_pullback("F_dagger"));
    const DivisorClass rhs =
        embed_from_ruled(Rat(n) * ruled_->class_of("C0") +
                         Rat(n * (2 * genus_ - 2)) * ruled_->class_of("f")) -
        Rat(n) * sum_s - Rat(n) * sum_e;
    if (lhs != rhs) fail("summed C0/F pullback");
  }

  // C1 via its strict transform: the embedded class of C0 + (2g-2)f minus
  // every E_i and every rperp_i. Independent of the generator-relation
  // route used to build the table entry.
  const DivisorClass c1_strict =
      embed_from_ruled(ruled_->class_of("C0") +
                       Rat(2 * genus_ - 2) * ruled_->class_of("f")) -
      sum_e - sum_r;
  if (generator_pullback("C1_dagger") != c1_strict) fail("C1 strict transform");

  // Canonical: K_top minus the ramification divisor must agree with the
  // pullback of the canonical class of the intermediate surface.
  if (canonical_pullback_ != bl_perp_.apply(blown_->canonical()))
    fail("canonical pullback");
}

QuotientPtr build_quotient_model(int genus) {
  if (genus < 2)
    throw std::invalid_argument("base curve must have genus >= 2");
  return QuotientPtr(new QuotientCoverModel(genus));
}

DivisorClass L_nnn(const QuotientCoverModel& model, long n) {
  if (n < 1) throw std::invalid_argument("L_nnn requires n >= 1");
  const int g = model.genus();
  DivisorClass result = model.embed_from_ruled(
      Rat(n) * model.ruled()->class_of("C0") +
      Rat(n * (2 * g - 2)) * model.ruled()->class_of("f"));
  for (int i = 1; i <= 2 * g - 2; ++i)
    result -= Rat(n) * model.top()->class_of("E_" + std::to_string(i));
  return result;
}

DaggerClass lambda_class(const QuotientPtr& model, long n,
                         const std::vector<long>& mu) {
  if (!model) throw std::invalid_argument("lambda_class: null model");
  if (n <= 2) throw std::invalid_argument("lemma requires n > 2");
  const int g = model->genus();
  const std::size_t expected = static_cast<std::size_t>(2 * g + 2);
  if (mu.size() != expected)
    throw std::invalid_argument("type must have length " +
                                std::to_string(expected) + ", got " +
                                std::to_string(mu.size()));
  for (long m : mu) {
    if (m < 0)
      throw std::invalid_argument("type entries must be non-negative");
    if ((m - n) % 2 != 0)
      throw std::invalid_argument("type not adapted to n");
  }

  RatVec coeffs(model->generator_count(), Rat(0));
  const std::size_t s_base = 3;
  const std::size_t r_base = s_base + expected;
  if (n % 2 == 0) {
    coeffs[model->generator_index("C0_dagger")] = n;
    coeffs[model->generator_index("F_dagger")] = n;
    for (std::size_t i = 0; i < expected; ++i) {
      coeffs[s_base + i] = n / 2;
      coeffs[r_base + i] = -(mu[i] / 2);
    }
  } else {
    coeffs[model->generator_index("C1_dagger")] = 1;
    coeffs[model->generator_index("C0_dagger")] = n - 1;
    coeffs[model->generator_index("F_dagger")] = n - 1;
    for (std::size_t i = 0; i < expected; ++i) {
      coeffs[s_base + i] = (n - 1) / 2;
      coeffs[r_base + i] = -((mu[i] - 1) / 2);
    }
  }
  return model->dagger_class(std::move(coeffs));
}

DivisorClass dagger_pullback(const DaggerClass& a) { return a.pullback(); }

Rat dagger_intersect(const DaggerClass& a, const DaggerClass& b) {
  require_same_model(a, b, "dagger_intersect");
  return intersect(a.pullback(), b.pullback()) / 2;
}

PullbackReport verify_lambda_pullback(const QuotientPtr& model, long n,
                                      const std::vector<long>& mu) {
  const DaggerClass lambda = lambda_class(model, n, mu);
  DivisorClass rhs = L_nnn(*model, n);
  for (std::size_t i = 0; i < mu.size(); ++i)
    rhs -= Rat(mu[i]) *
           model->top()->class_of("rperp_" + std::to_string(i + 1));
  const DivisorClass& lhs = lambda.pullback();
  return {lhs, rhs, lhs == rhs};
}

PullbackReport verify_canonical_pullback(const QuotientPtr& model) {
  if (!model)
    throw std::invalid_argument("verify_canonical_pullback: null model");
  DivisorClass lhs = model->top()->canonical();
  for (int i = 1; i <= 2 * model->genus() + 2; ++i) {
    lhs -= model->top()->class_of("sperp_" + std::to_string(i));
    lhs -= model->top()->class_of("rperp_" + std::to_string(i));
  }
  const DivisorClass rhs =
      model->second_blowup().apply(model->blown()->canonical());
  return {lhs, rhs, lhs == rhs};
}

}  // namespace hitchlat
