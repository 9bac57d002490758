#include "tgr/hilbert.hpp"

#include <string>

namespace tgr {

namespace {

using Coeffs = std::vector<Rational>;

Coeffs multiply_linear(const Coeffs& p, const Rational& root) {
  // p(t) * (t - root)
  Coeffs out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i] -= p[i] * root;
  }
  return out;
}

void trim(Coeffs& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

}  // namespace

int HilbertData::dimension() const { return static_cast<int>(polynomial.size()) - 1; }

Rational HilbertData::leading_coefficient() const {
  return polynomial.empty() ? Rational(0) : polynomial.back();
}

Rational HilbertData::variety_degree() const {
  if (polynomial.empty()) return Rational(0);
  Rational factorial(1);
  for (int i = 2; i <= dimension(); ++i) factorial *= Rational(i);
  return leading_coefficient() * factorial;
}

Rational HilbertData::evaluate(long t) const {
  Rational v;
  for (std::size_t i = polynomial.size(); i-- > 0;) v = v * Rational(t) + polynomial[i];
  return v;
}

Rational HilbertData::arithmetic_genus() const { return Rational(1) - evaluate(0); }

std::map<int, long> first_differences(const std::map<int, long>& samples) {
  std::map<int, long> out;
  for (auto it = samples.begin(); it != samples.end(); ++it) {
    auto prev = samples.find(it->first - 1);
    if (prev != samples.end()) out[it->first] = it->second - prev->second;
  }
  return out;
}

HilbertData hilbert_polynomial(const std::map<int, long>& samples, int max_dimension) {
  const std::size_t needed = static_cast<std::size_t>(max_dimension) + 2;
  if (samples.size() < needed) {
    throw std::invalid_argument("need at least " + std::to_string(needed) +
                                " consecutive samples, got " + std::to_string(samples.size()));
  }
  std::vector<int> degrees;
  std::vector<Rational> values;
  for (const auto& [d, v] : samples) {
    if (v < 0) throw std::invalid_argument("negative Hilbert function sample");
    if (!degrees.empty() && d != degrees.back() + 1) {
      throw std::invalid_argument("samples must be at consecutive degrees");
    }
    degrees.push_back(d);
    values.push_back(Rational(v));
  }

  // order-th forward difference starting at index i.
  auto difference = [&values](std::size_t i, std::size_t order) {
    Rational acc;
    Rational binom(1);
    for (std::size_t j = 0; j <= order; ++j) {
      Rational term = binom * values[i + order - j];
      acc = (j % 2 == 0) ? acc + term : acc - term;
      binom = binom * Rational(static_cast<long>(order - j)) / Rational(static_cast<long>(j + 1));
    }
    return acc;
  };

  const std::size_t order = static_cast<std::size_t>(max_dimension) + 1;
  std::size_t start = values.size() - needed;
  if (!difference(start, order).is_zero()) {
    throw HilbertInconsistent("samples do not fit a polynomial of degree <= " +
                                  std::to_string(max_dimension) + " at degree " +
                                  std::to_string(degrees.back()),
                              degrees.back());
  }
  while (start > 0 && difference(start - 1, order).is_zero()) --start;

  HilbertData data;
  data.samples = samples;
  data.stable_from = degrees[start];

  Coeffs poly;
  Coeffs basis{Rational(1)};  // C(t - s, j) as a polynomial in t
  const Rational s(degrees[start]);
  for (std::size_t j = 0; j < order; ++j) {
    Rational delta = difference(start, j);
    if (poly.size() < basis.size()) poly.resize(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) poly[i] += delta * basis[i];
    basis = multiply_linear(basis, s + Rational(static_cast<long>(j)));
    for (auto& c : basis) c /= Rational(static_cast<long>(j + 1));
  }
  trim(poly);
  data.polynomial = std::move(poly);
  return data;
}

}  // namespace tgr
