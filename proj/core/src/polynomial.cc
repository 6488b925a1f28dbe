// Copyright 2026 The rnstruct Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rnstruct/polynomial.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace rnstruct {
namespace {

const std::shared_ptr<const std::vector<std::string>>& NoVariables() {
  static const auto* empty =
      new std::shared_ptr<const std::vector<std::string>>(
          std::make_shared<const std::vector<std::string>>());
  return *empty;
}

bool AllZero(const Polynomial::Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

}  // namespace

Polynomial::Polynomial(std::vector<std::string> vars)
    : vars_(std::make_shared<const std::vector<std::string>>(std::move(vars))) {
}

Polynomial::Polynomial(const Rational& c) {
  if (!rnstruct::IsZero(c)) terms_.emplace(Exponents{}, c);
}

Polynomial Polynomial::Constant(std::vector<std::string> vars,
                                const Rational& c) {
  Polynomial p(std::move(vars));
  p.AddTerm(Exponents(p.variables().size(), 0), c);
  return p;
}

Polynomial Polynomial::Variable(std::vector<std::string> vars,
                                const std::string& name) {
  Polynomial p(std::move(vars));
  int idx = p.VariableIndex(name);
  if (idx < 0) throw std::invalid_argument("unknown variable '" + name + "'");
  Exponents e(p.variables().size(), 0);
  e[idx] = 1;
  p.AddTerm(e, Rational(1));
  return p;
}

const std::vector<std::string>& Polynomial::variables() const {
  return vars_ ? *vars_ : *NoVariables();
}

int Polynomial::VariableIndex(const std::string& name) const {
  const auto& v = variables();
  auto it = std::find(v.begin(), v.end(), name);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

bool Polynomial::IsConstant() const {
  for (const auto& [e, c] : terms_) {
    if (!AllZero(e)) return false;
  }
  return true;
}

Rational Polynomial::ConstantTerm() const {
  for (const auto& [e, c] : terms_) {
    if (AllZero(e)) return c;
  }
  return 0;
}

int Polynomial::TotalDegree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  }
  return d;
}

int Polynomial::DegreeIn(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void Polynomial::AddTerm(const Exponents& e, const Rational& c) {
  if (rnstruct::IsZero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (rnstruct::IsZero(it->second)) terms_.erase(it);
  }
}

void Polynomial::Unify(Polynomial& a, Polynomial& b) {
  if (a.vars_ == b.vars_ || a.variables() == b.variables()) return;
  if (a.IsConstant()) {
    a = a.Aligned(b.variables());
  } else if (b.IsConstant()) {
    b = b.Aligned(a.variables());
  } else {
    throw std::invalid_argument(
        "polynomials over different variable lists; align them first");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  Polynomial b = o;
  Unify(*this, b);
  for (const auto& [e, c] : b.terms_) AddTerm(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  return *this += -o;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  Polynomial b = o;
  Unify(*this, b);
  Polynomial r;
  r.vars_ = vars_;
  Exponents e(variables().size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.AddTerm(e, ca * cb);
    }
  }
  *this = std::move(r);
  return *this;
}

Polynomial Polynomial::Pow(unsigned e) const {
  Polynomial base = *this;
  Polynomial result = Constant(variables(), 1);
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::Partial(const std::string& var) const {
  int idx = VariableIndex(var);
  if (idx < 0) throw std::invalid_argument("unknown variable '" + var + "'");
  Polynomial r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents d = e;
    --d[idx];
    r.AddTerm(d, c * e[idx]);
  }
  return r;
}

Rational Polynomial::Evaluate(const Assignment& point) const {
  const auto& v = variables();
  std::vector<const Rational*> values(v.size(), nullptr);
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0 || values[i] != nullptr) continue;
      auto it = point.find(v[i]);
      if (it == point.end()) {
        throw std::invalid_argument("no value for variable '" + v[i] + "'");
      }
      values[i] = &it->second;
    }
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= *values[i];
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::Substitute(const Assignment& values) const {
  const auto& v = variables();
  std::vector<const Rational*> val(v.size(), nullptr);
  bool any = false;
  for (size_t i = 0; i < v.size(); ++i) {
    auto it = values.find(v[i]);
    if (it != values.end()) {
      val[i] = &it->second;
      any = true;
    }
  }
  if (!any) return *this;
  Polynomial r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    Rational t = c;
    for (size_t i = 0; i < f.size(); ++i) {
      if (val[i] == nullptr) continue;
      for (int k = 0; k < f[i]; ++k) t *= *val[i];
      f[i] = 0;
    }
    r.AddTerm(f, t);
  }
  return r;
}

Polynomial Polynomial::Aligned(const std::vector<std::string>& vars) const {
  Polynomial r(vars);
  const auto& v = variables();
  std::vector<int> map(v.size(), -1);
  for (size_t i = 0; i < v.size(); ++i) map[i] = r.VariableIndex(v[i]);
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0) {
        throw std::invalid_argument("cannot align: variable '" + v[i] +
                                    "' is missing from the target list");
      }
      f[map[i]] = e[i];
    }
    r.AddTerm(f, c);
  }
  return r;
}

std::vector<std::string> Polynomial::UsedVariables() const {
  const auto& v = variables();
  std::vector<bool> used(v.size(), false);
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] > 0;
  }
  std::vector<std::string> out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (used[i]) out.push_back(v[i]);
  }
  return out;
}

std::string Polynomial::ToString() const {
  if (terms_.empty()) return "0";
  // Graded order, highest degree first.
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  auto degree = [](const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
  };
  std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    int da = degree(a->first), db = degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  const auto& v = variables();
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    bool constant = AllZero(e);
    bool need_star = false;
    if (constant || mag != 1) {
      out += rnstruct::ToString(mag);
      need_star = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out += "*";
      out += v[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
      need_star = true;
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  try {
    Polynomial::Unify(x, y);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return x.terms_ == y.terms_;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

std::vector<std::string> MergeVariables(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& s : b) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

}  // namespace rnstruct
