#include "singreg/resultant.hpp"

#include "detail/intpoly.hpp"

#include <algorithm>

namespace singreg::poly {
namespace {

using detail::BiPoly;
using detail::IntPoly;

std::vector<std::string> other_variables(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  std::vector<std::string> out;
  for (const auto* poly : {&p, &q}) {
    for (const auto& v : poly->variables()) {
      if (v != var && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

MultiPoly intpoly_to_multi(const IntPoly& p, const std::string& var, const Rational& scale) {
  std::vector<Rational> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(p[i]) / scale;
  for (auto& v : c) v.canonicalize();
  UniPoly u(var, std::move(c));
  return MultiPoly::from_unipoly(u);
}

Rational power_product(const Integer& a, int ea, const Integer& b, int eb) {
  Integer pa, pb;
  mpz_pow_ui(pa.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(ea));
  mpz_pow_ui(pb.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(eb));
  return Rational(pa * pb);
}

MultiPoly generic_resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  int dp = p.degree_in(var), dq = q.degree_in(var);
  detail::PolyOver<MultiPoly> P(static_cast<std::size_t>(dp + 1)), Q(static_cast<std::size_t>(dq + 1));
  for (int k = 0; k <= dp; ++k) P[static_cast<std::size_t>(k)] = p.coefficient_of(var, k);
  for (int k = 0; k <= dq; ++k) Q[static_cast<std::size_t>(k)] = q.coefficient_of(var, k);
  bool swapped = dp < dq;
  if (swapped) std::swap(P, Q);
  MultiPoly r = detail::subresultant_chain<MultiPoly>(P, Q).resultant();
  if (swapped && (dp * dq) % 2 == 1) r = -r;
  return r;
}

}  // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  int dp = p.degree_in(var), dq = q.degree_in(var);
  if (dp < 1 || dq < 1) throw DomainError("resultant: both polynomials need positive degree in '" + var + "'");
  auto others = other_variables(p, q, var);
  if (others.size() > 1) return generic_resultant(p, q, var);

  std::string kept = others.empty() ? std::string("_") : others.front();
  auto [P, sp] = detail::to_bipoly(p, kept, var);
  auto [Q, sq] = detail::to_bipoly(q, kept, var);
  bool swapped = dp < dq;
  detail::SubresultantChain<IntPoly> chain =
      swapped ? detail::subresultant_chain<IntPoly>(Q, P) : detail::subresultant_chain<IntPoly>(P, Q);
  IntPoly r = chain.resultant();
  if (swapped && (dp * dq) % 2 == 1) r = -r;
  // Res(sp p, sq q) = sp^dq sq^dp Res(p, q)
  return intpoly_to_multi(r, kept, power_product(sp, dq, sq, dp));
}

Elimination eliminate(const MultiPoly& p, const MultiPoly& q, const std::string& eliminated, const std::string& kept) {
  int dp = p.degree_in(eliminated), dq = q.degree_in(eliminated);
  if (dp < 1 || dq < 1) {
    throw DomainError("eliminate: both polynomials need positive degree in '" + eliminated + "'");
  }
  auto [P, sp] = detail::to_bipoly(p, kept, eliminated);
  auto [Q, sq] = detail::to_bipoly(q, kept, eliminated);
  bool swapped = dp < dq;
  auto chain = swapped ? detail::subresultant_chain<IntPoly>(Q, P) : detail::subresultant_chain<IntPoly>(P, Q);
  IntPoly r = chain.resultant();
  if (swapped && (dp * dq) % 2 == 1) r = -r;

  Elimination out;
  Rational scale = power_product(sp, dq, sq, dp);
  std::vector<Rational> rc(r.coeffs().size());
  for (std::size_t i = 0; i < rc.size(); ++i) {
    rc[i] = Rational(r[i]) / scale;
    rc[i].canonicalize();
  }
  out.resultant = UniPoly(kept, std::move(rc));
  out.psc1 = detail::to_uni(chain.psc_of_degree(1), kept);
  out.lead_p = detail::to_uni(P.back(), kept);
  out.lead_q = detail::to_uni(Q.back(), kept);
  return out;
}

}  // namespace singreg::poly
