#include "grossgame/payoffs.hpp"

#include <algorithm>
#include <numeric>

#include "grossgame/literal.hpp"

namespace grossgame {
namespace {

constexpr std::array<Payoff, 4> kDisplayOrder = {Payoff::T, Payoff::R,
                                                 Payoff::P, Payoff::S};

bool is_simple(const GrossScalar& k) {
  return k.is_polynomial() && k.numerator().terms().size() <= 1;
}

std::string factor_text(const GrossScalar& k) {
  if (k == GrossScalar(1)) return "";
  if (k == GrossScalar(-1)) return "-";
  if (is_simple(k)) return format_gross(k);
  return "(" + format_gross(k) + ")";
}

// a + b*var as a standalone coefficient; empty string means 1.
std::string affine_factor(const GrossScalar& a, const GrossScalar& b,
                          const std::string& var) {
  if (b.is_zero()) return factor_text(a);
  std::string slope = factor_text(b) + var;
  if (a.is_zero()) return slope;
  std::string intercept = format_gross(a);
  if (!is_simple(a)) intercept = "(" + intercept + ")";
  if (intercept.front() == '-') return "(" + slope + intercept + ")";
  return "(" + slope + "+" + intercept + ")";
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].front() != '-') out += "+";
    out += terms[i];
  }
  return out;
}

}  // namespace

char symbol(Payoff p) {
  switch (p) {
    case Payoff::R:
      return 'R';
    case Payoff::S:
      return 'S';
    case Payoff::T:
      return 'T';
    case Payoff::P:
      return 'P';
  }
  return '?';
}

Payoffs::Payoffs(GrossScalar T, GrossScalar R, GrossScalar P, GrossScalar S) {
  values_[index(Payoff::T)] = std::move(T);
  values_[index(Payoff::R)] = std::move(R);
  values_[index(Payoff::P)] = std::move(P);
  values_[index(Payoff::S)] = std::move(S);
}

bool Payoffs::concrete() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const auto& v) { return v.has_value(); });
}

bool Payoffs::satisfies_fundamental_law() const {
  if (!concrete()) return false;
  const auto& self = *this;
  return *self[Payoff::T] > *self[Payoff::R] &&
         *self[Payoff::R] > *self[Payoff::P] &&
         *self[Payoff::P] > *self[Payoff::S];
}

PayoffForm PayoffForm::of(Payoff p, GrossScalar coefficient) {
  PayoffForm form;
  form.coeff_[index(p)] = std::move(coefficient);
  return form;
}

PayoffForm PayoffForm::from_weights(const Vec4<Rational>& weights) {
  PayoffForm form;
  for (std::size_t k = 0; k < 4; ++k) form.coeff_[k] = GrossScalar(weights[k]);
  return form;
}

bool PayoffForm::is_constant() const {
  return std::all_of(coeff_.begin(), coeff_.end(),
                     [](const GrossScalar& c) { return c.is_zero(); });
}

PayoffForm PayoffForm::substitute(const Payoffs& payoffs) const {
  PayoffForm out = *this;
  for (Payoff p : kDisplayOrder) {
    const auto& value = payoffs[p];
    auto& c = out.coeff_[index(p)];
    if (value && !c.is_zero()) {
      out.constant_ += c * *value;
      c = 0;
    }
  }
  return out;
}

std::optional<GrossScalar> PayoffForm::evaluate(const Payoffs& payoffs) const {
  PayoffForm reduced = substitute(payoffs);
  if (!reduced.is_constant()) return std::nullopt;
  return reduced.constant_;
}

PayoffForm& PayoffForm::operator+=(const PayoffForm& b) {
  for (std::size_t k = 0; k < 4; ++k) coeff_[k] += b.coeff_[k];
  constant_ += b.constant_;
  return *this;
}

PayoffForm& PayoffForm::operator-=(const PayoffForm& b) {
  for (std::size_t k = 0; k < 4; ++k) coeff_[k] -= b.coeff_[k];
  constant_ -= b.constant_;
  return *this;
}

PayoffForm& PayoffForm::operator*=(const GrossScalar& k) {
  for (auto& c : coeff_) c *= k;
  constant_ *= k;
  return *this;
}

std::string format_affine(const PayoffForm& intercept, const PayoffForm& slope,
                          const std::string& variable) {
  std::vector<std::string> terms;
  for (Payoff p : kDisplayOrder) {
    const auto& a = intercept.coefficient(p);
    const auto& b = slope.coefficient(p);
    if (a.is_zero() && b.is_zero()) continue;
    terms.push_back(affine_factor(a, b, variable) + symbol(p));
  }
  const auto& a = intercept.constant();
  const auto& b = slope.constant();
  if (!a.is_zero() || !b.is_zero()) {
    std::string c = affine_factor(a, b, variable);
    if (c.empty()) c = "1";
    if (c == "-") c = "-1";
    terms.push_back(c);
  }
  return join_terms(terms);
}

std::string format_form(const PayoffForm& form) {
  if (form.is_constant()) return format_gross(form.constant());
  return format_affine(form, PayoffForm{});
}

std::vector<RankGroup> rank_players(const std::vector<GrossScalar>& totals) {
  std::vector<std::size_t> order(totals.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return totals[a] > totals[b];
  });
  std::vector<RankGroup> groups;
  for (std::size_t idx : order) {
    if (!groups.empty() && groups.back().value == totals[idx]) {
      groups.back().players.push_back(idx);
    } else {
      groups.push_back(RankGroup{groups.size() + 1, {idx}, totals[idx]});
    }
  }
  return groups;
}

}  // namespace grossgame
