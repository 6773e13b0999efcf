#include "haantjes/errors.hpp"
#include "haantjes/geometry.hpp"

namespace haantjes {

RationalFn potential_of_closed(const OneForm& theta) {
  const Chart& chart = theta.chart();
  const int n = chart.dim();
  TwoForm dth = d1(theta);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!dth.at(i, j).is_zero())
        throw NotClosedError("1-form is not closed: d(theta) has a nonzero component at (" +
                                 chart.name(i) + ", " + chart.name(j) + ")",
                             dth.at(i, j).str());
  for (int i = 0; i < n; ++i)
    if (!theta.comp(i).is_polynomial())
      throw NonPolynomialError("potential integration needs polynomial components");

  // Radial integration: a monomial c x^a in theta_i contributes
  // c x_i x^a / (|a| + 1), and the sum vanishes at the origin.
  Polynomial acc(n);
  for (int i = 0; i < n; ++i) {
    for (const auto& [mono, coeff] : theta.comp(i).num().terms()) {
      std::vector<std::int32_t> e(n);
      for (int v = 0; v < n; ++v) e[v] = mono.exp(v);
      e[i] += 1;
      Rational c = coeff / Rational(mono.total_degree() + 1);
      acc = acc + Polynomial::from_terms(n, {{Monomial(std::move(e)), c}});
    }
  }
  return RationalFn::from_polynomial(chart, std::move(acc));
}

}  // namespace haantjes
