#include "singreg/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace singreg::poly {
namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t index_of(const std::vector<std::string>& vars, const std::string& v) {
  auto it = std::lower_bound(vars.begin(), vars.end(), v);
  if (it == vars.end() || *it != v) return vars.size();
  return static_cast<std::size_t>(it - vars.begin());
}

}  // namespace

MultiPoly::MultiPoly(const Rational& value) {
  if (sgn(value) != 0) terms_.emplace(Exponents{}, value);
}

MultiPoly::MultiPoly(int value) : MultiPoly(Rational(value)) {}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Rational(1));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> variables, Terms terms) {
  std::vector<std::size_t> order(variables.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return variables[a] < variables[b]; });
  MultiPoly p;
  for (std::size_t i : order) p.vars_.push_back(variables[i]);
  if (std::adjacent_find(p.vars_.begin(), p.vars_.end()) != p.vars_.end()) {
    throw DomainError("duplicate variable name in MultiPoly");
  }
  for (auto& [exps, c] : terms) {
    if (exps.size() != variables.size()) throw DomainError("exponent vector arity does not match variable list");
    Exponents sorted(exps.size());
    for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = exps[order[i]];
    p.terms_[sorted] += c;
  }
  p.normalize();
  return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& u) {
  Terms terms;
  for (int k = 0; k <= u.degree(); ++k) {
    const Rational& c = u.coefficients()[static_cast<std::size_t>(k)];
    if (sgn(c) != 0) terms.emplace(Exponents{static_cast<std::uint32_t>(k)}, c);
  }
  return from_terms({u.variable()}, std::move(terms));
}

void MultiPoly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (sgn(it->second) == 0) it = terms_.erase(it);
    else ++it;
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [exps, c] : terms_) {
    for (std::size_t i = 0; i < exps.size(); ++i) used[i] = used[i] || exps[i] != 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) kept.push_back(vars_[i]);
  }
  Terms reduced;
  for (auto& [exps, c] : terms_) {
    Exponents e;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (used[i]) e.push_back(exps[i]);
    }
    reduced.emplace(std::move(e), c);
  }
  vars_ = std::move(kept);
  terms_ = std::move(reduced);
}

MultiPoly::Terms MultiPoly::aligned_terms(const std::vector<std::string>& vars) const {
  if (vars == vars_) return terms_;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) pos[i] = index_of(vars, vars_[i]);
  Terms out;
  for (const auto& [exps, c] : terms_) {
    Exponents e(vars.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) e[pos[i]] = exps[i];
    out.emplace(std::move(e), c);
  }
  return out;
}

bool MultiPoly::has_variable(const std::string& name) const { return index_of(vars_, name) < vars_.size(); }

int MultiPoly::degree_in(const std::string& var) const {
  if (is_zero()) return -1;
  std::size_t i = index_of(vars_, var);
  if (i == vars_.size()) return 0;
  std::uint32_t d = 0;
  for (const auto& [exps, c] : terms_) d = std::max(d, exps[i]);
  return static_cast<int>(d);
}

int MultiPoly::total_degree() const {
  if (is_zero()) return -1;
  std::uint32_t best = 0;
  for (const auto& [exps, c] : terms_) {
    std::uint32_t s = 0;
    for (auto e : exps) s += e;
    best = std::max(best, s);
  }
  return static_cast<int>(best);
}

MultiPoly MultiPoly::coefficient_of(const std::string& var, int power) const {
  std::size_t i = index_of(vars_, var);
  if (i == vars_.size()) return power == 0 ? *this : MultiPoly();
  MultiPoly out;
  out.vars_ = vars_;
  for (const auto& [exps, c] : terms_) {
    if (static_cast<int>(exps[i]) != power) continue;
    Exponents e = exps;
    e[i] = 0;
    out.terms_.emplace(std::move(e), c);
  }
  out.normalize();
  return out;
}

Rational MultiPoly::coefficient(const std::map<std::string, std::uint32_t>& monomial) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [v, k] : monomial) {
    std::size_t i = index_of(vars_, v);
    if (i == vars_.size()) {
      if (k != 0) return Rational(0);
      continue;
    }
    e[i] = k;
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.is_zero()) return *this;
  auto vars = merge_vars(vars_, other.vars_);
  Terms mine = aligned_terms(vars);
  for (auto& [e, c] : other.aligned_terms(vars)) mine[e] += c;
  vars_ = std::move(vars);
  terms_ = std::move(mine);
  normalize();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return *this += -other; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  auto vars = merge_vars(a.vars_, b.vars_);
  auto ta = a.aligned_terms(vars);
  auto tb = b.aligned_terms(vars);
  MultiPoly out;
  out.vars_ = vars;
  Exponents e(vars.size());
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.terms_[e] += ca * cb;
    }
  }
  out.normalize();
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  std::size_t i = index_of(vars_, var);
  if (i == vars_.size()) return MultiPoly();
  MultiPoly out;
  out.vars_ = vars_;
  for (const auto& [exps, c] : terms_) {
    if (exps[i] == 0) continue;
    Exponents e = exps;
    e[i] -= 1;
    out.terms_.emplace(std::move(e), c * static_cast<unsigned long>(exps[i]));
  }
  out.normalize();
  return out;
}

Rational MultiPoly::eval(const Assignment& assignment) const {
  std::vector<const Rational*> values(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = assignment.find(vars_[i]);
    if (it == assignment.end()) throw MissingVariableError(vars_[i]);
    values[i] = &it->second;
  }
  Rational sum(0);
  for (const auto& [exps, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) term *= singreg::pow(*values[i], exps[i]);
    }
    sum += term;
  }
  return sum;
}

double MultiPoly::eval_double(const std::vector<double>& values) const {
  if (values.size() != vars_.size()) throw DomainError("eval_double: value count does not match variable count");
  double sum = 0.0;
  for (const auto& [exps, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) term *= std::pow(values[i], static_cast<int>(exps[i]));
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& replacement) const {
  std::size_t i = index_of(vars_, var);
  if (i == vars_.size()) return *this;
  // Group terms by the power of var, then Horner in the replacement.
  std::map<std::uint32_t, MultiPoly> by_power;
  for (const auto& [exps, c] : terms_) {
    Exponents e = exps;
    std::uint32_t k = e[i];
    e[i] = 0;
    MultiPoly mono;
    mono.vars_ = vars_;
    mono.terms_.emplace(std::move(e), c);
    mono.normalize();
    by_power[k] += mono;
  }
  MultiPoly result;
  std::uint32_t top = by_power.rbegin()->first;
  for (std::uint32_t k = top + 1; k-- > 0;) {
    result = result * replacement;
    if (auto it = by_power.find(k); it != by_power.end()) result += it->second;
  }
  return result;
}

MultiPoly MultiPoly::partial_eval(const Assignment& assignment) const {
  MultiPoly out = *this;
  for (const auto& [v, value] : assignment) {
    if (out.has_variable(v)) out = out.substitute(v, MultiPoly(value));
  }
  return out;
}

MultiPoly MultiPoly::rename(const std::string& from, const std::string& to) const {
  if (!has_variable(from) || from == to) return *this;
  std::vector<std::string> vars = vars_;
  vars[index_of(vars_, from)] = to;
  std::vector<std::string> others;
  for (const auto& v : vars_) {
    if (v != from) others.push_back(v);
  }
  if (std::find(others.begin(), others.end(), to) != others.end()) {
    return substitute(from, variable(to));
  }
  return from_terms(vars, terms_);
}

UniPoly MultiPoly::to_unipoly(const std::string& fallback) const {
  if (vars_.size() > 1) throw DomainError("to_unipoly: polynomial has more than one variable");
  std::string var = vars_.empty() ? fallback : vars_.front();
  std::vector<Rational> c;
  for (const auto& [exps, v] : terms_) {
    std::size_t k = exps.empty() ? 0 : exps[0];
    if (c.size() <= k) c.resize(k + 1);
    c[k] = v;
  }
  return UniPoly(var, std::move(c));
}

MultiPoly MultiPoly::exact_div(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("exact_div by the zero polynomial");
  if (is_zero()) return MultiPoly();
  auto vars = merge_vars(vars_, divisor.vars_);
  Terms rem = aligned_terms(vars);
  Terms div = divisor.aligned_terms(vars);
  // std::map orders exponent vectors lexicographically, so rbegin() is the
  // lex-leading term with respect to the sorted variable order.
  const auto& [lead_e, lead_c] = *div.rbegin();
  Terms quo;
  Exponents e(vars.size());
  while (!rem.empty()) {
    const auto [re, rc] = *rem.rbegin();
    Exponents qe(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (re[i] < lead_e[i]) throw DomainError("exact_div: divisor does not divide dividend");
      qe[i] = re[i] - lead_e[i];
    }
    Rational qc = rc / lead_c;
    for (const auto& [de, dc] : div) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = qe[i] + de[i];
      auto it = rem.find(e);
      Rational delta = qc * dc;
      if (it == rem.end()) {
        rem.emplace(e, -delta);
      } else {
        it->second -= delta;
        if (sgn(it->second) == 0) rem.erase(it);
      }
    }
    quo.emplace(std::move(qe), qc);
  }
  MultiPoly out;
  out.vars_ = std::move(vars);
  out.terms_ = std::move(quo);
  out.normalize();
  return out;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, c] = *it;
    bool constant = std::all_of(exps.begin(), exps.end(), [](auto k) { return k == 0; });
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    Rational mag = abs(c);
    bool wrote = false;
    if (constant || mag != 1) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (wrote) out << "*";
      out << vars_[i];
      if (exps[i] > 1) out << "^" << exps[i];
      wrote = true;
    }
    first = false;
  }
  return out.str();
}

}  // namespace singreg::poly
