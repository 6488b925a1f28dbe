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

#include "rnstruct/equivalence.h"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

namespace rnstruct {

AutomorphismFamily AutomorphismFamily::FromEntries(const PMatrix& entries) {
  if (!entries.square()) throw std::invalid_argument("family is not square");
  std::vector<std::string> vars;
  for (int i = 0; i < entries.rows(); ++i) {
    for (int j = 0; j < entries.cols(); ++j) {
      vars = MergeVariables(vars, entries(i, j).UsedVariables());
    }
  }
  AutomorphismFamily fam;
  fam.params = vars;
  fam.entries = PMatrix(entries.rows(), entries.cols());
  for (int i = 0; i < entries.rows(); ++i) {
    for (int j = 0; j < entries.cols(); ++j) {
      fam.entries(i, j) = entries(i, j).Aligned(vars);
    }
  }
  fam.nonvanishing = Determinant(fam.entries);
  return fam;
}

RMatrix AutomorphismFamily::Instantiate(const Assignment& a) const {
  if (IsZero(nonvanishing.Evaluate(a))) {
    throw std::invalid_argument("automorphism family degenerates here");
  }
  return Evaluate(entries, a);
}

PMatrix SymbolicOrbitR(const AutomorphismFamily& fam, const PMatrix& r) {
  if (r.rows() != fam.entries.rows() || !r.square()) {
    throw std::invalid_argument("dimension mismatch");
  }
  std::vector<std::string> vars = fam.params;
  for (int i = 0; i < r.rows(); ++i) {
    for (int j = 0; j < r.cols(); ++j) {
      vars = MergeVariables(vars, r(i, j).UsedVariables());
    }
  }
  PMatrix a(fam.entries.rows(), fam.entries.cols()), m(r.rows(), r.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      a(i, j) = fam.entries(i, j).Aligned(vars);
      m(i, j) = r(i, j).Aligned(vars);
    }
  }
  return a * m * a.Transpose();
}

PMatrix SymbolicOrbitR(const AutomorphismFamily& fam, const Bivector& r) {
  return SymbolicOrbitR(fam, ToPolynomialMatrix(r.m));
}

std::vector<Polynomial> StabilizerCondition(const AutomorphismFamily& fam,
                                            const Bivector& r) {
  PMatrix d = SymbolicOrbitR(fam, r);
  std::vector<Polynomial> out;
  for (int i = 0; i < d.rows(); ++i) {
    for (int j = i + 1; j < d.cols(); ++j) {
      Polynomial p = d(i, j) - Polynomial(r.m(i, j)).Aligned(fam.params);
      if (!p.IsZero()) out.push_back(p);
    }
  }
  return out;
}

bool VerifyWitness(const LieAlgebra& g, const RMatrix& a, const Bivector& r,
                   const Bivector& r2, const Endomorphism* n,
                   const Endomorphism* n2) {
  int d = g.dim();
  if (a.rows() != d || a.cols() != d || r.dim() != d || r2.dim() != d ||
      (n && n->dim() != d) || (n2 && n2->dim() != d)) {
    throw std::invalid_argument("dimension mismatch");
  }
  if ((n == nullptr) != (n2 == nullptr)) {
    throw std::invalid_argument("endomorphisms must be given in pairs");
  }
  if (!IsAutomorphism(g, a)) {
    throw PreconditionError("witness is not an automorphism");
  }
  if (a * r.m * a.Transpose() != r2.m) return false;
  if (n && a * n->m != n2->m * a) return false;
  return true;
}

namespace {

// Exact k-th root of a nonnegative integer, if there is one.
std::optional<mpz_class> ExactRoot(const mpz_class& v, unsigned k) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

// Divisors of |v|, or empty if |v| is too large for trial division.
std::vector<long> Divisors(mpz_class v) {
  std::vector<long> out, high;
  v = abs(v);
  if (v > 1000000000) return out;
  long n = v.get_si();
  for (long k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    out.push_back(k);
    if (k != n / k) high.push_back(n / k);
  }
  out.insert(out.end(), high.rbegin(), high.rend());
  return out;
}

// Rational roots of a univariate polynomial given by its coefficients
// (index = degree). Empty if the integer coefficients are too large to
// factor by trial division.
std::vector<Rational> RationalRoots(std::vector<Rational> c) {
  std::vector<Rational> roots;
  while (!c.empty() && IsZero(c.back())) c.pop_back();
  if (c.size() < 2) return roots;
  size_t low = 0;
  while (IsZero(c[low])) ++low;
  if (low > 0) roots.push_back(0);
  if (c.size() - low < 2) return roots;
  if (c.size() - low == 2) {
    roots.push_back(-c[low] / c[low + 1]);
    return roots;
  }
  // a x^k + b: x^k = -b/a.
  if (std::all_of(c.begin() + low + 1, c.end() - 1, [](const Rational& x) { return IsZero(x); })) {
    unsigned k = static_cast<unsigned>(c.size() - 1 - low);
    Rational t = -c[low] / c.back();
    if (sgn(t) < 0 && k % 2 == 0) return roots;
    auto num = ExactRoot(abs(t.get_num()), k), den = ExactRoot(t.get_den(), k);
    if (!num || !den) return roots;
    Rational x(*num, *den);
    x.canonicalize();
    if (sgn(t) < 0) x = -x;
    roots.push_back(x);
    if (k % 2 == 0) roots.push_back(-x);
    return roots;
  }
  mpz_class l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& x : c) z.push_back(mpz_class(x * l));
  std::vector<long> ps = Divisors(z[low]), qs = Divisors(z.back());
  std::set<Rational> seen;
  for (long p : ps) {
    for (long q : qs) {
      for (int s : {1, -1}) {
        Rational x(s * p, q);
        x.canonicalize();
        if (seen.count(x)) continue;
        seen.insert(x);
        Rational v = 0;
        for (size_t k = c.size(); k-- > 0;) v = v * x + c[k];
        if (IsZero(v)) roots.push_back(x);
      }
    }
  }
  return roots;
}

std::vector<Rational> UnivariateCoefficients(const Polynomial& p, int var) {
  std::vector<Rational> c(p.DegreeIn(var) + 1);
  for (const auto& [e, coef] : p.terms()) c[e[var]] += coef;
  return c;
}

// Coefficients of p as a polynomial in variable var (index = degree).
std::vector<Polynomial> CoefficientsIn(const Polynomial& p, int var) {
  const std::vector<std::string>& vars = p.variables();
  std::vector<Polynomial> c(p.DegreeIn(var) + 1, Polynomial(vars));
  for (const auto& [e, coef] : p.terms()) {
    Polynomial m = Polynomial::Constant(vars, coef);
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] > 0 && static_cast<int>(k) != var) {
        m *= Polynomial::Variable(vars, vars[k]).Pow(e[k]);
      }
    }
    c[e[var]] += m;
  }
  return c;
}

// p with v = num / den substituted, times den^deg_v(p).
Polynomial Eliminate(const Polynomial& p, const std::string& v,
                     const Polynomial& num, const Polynomial& den) {
  int i = p.VariableIndex(v);
  if (i < 0 || p.DegreeIn(i) == 0) return p;
  std::vector<Polynomial> c = CoefficientsIn(p, i);
  int d = static_cast<int>(c.size()) - 1;
  Polynomial out(p.variables());
  for (int k = 0; k <= d; ++k) {
    if (!c[k].IsZero()) out += c[k] * num.Pow(k) * den.Pow(d - k);
  }
  return out;
}

class Search {
 public:
  Search(const AutomorphismFamily& fam, std::vector<Polynomial> eqs,
         const SearchBudget& budget)
      : fam_(fam), eqs_(std::move(eqs)), budget_(budget), rng_(budget.seed) {
    for (const auto& e : eqs_) {
      for (const auto& v : e.UsedVariables()) constrained_.insert(v);
    }
  }

  // One trial; true with a full assignment when every equation vanishes.
  bool Trial(bool grid, Assignment& a) {
    struct Elimination {
      std::string v;
      Polynomial num, den;
    };
    std::vector<Elimination> elims;
    std::set<std::string> eliminated;
    a.clear();
    std::vector<Polynomial> cur = eqs_;
    while (true) {
      bool progress = false;
      for (auto& e : cur) {
        e = e.Substitute(a);
        if (e.IsZero()) continue;
        if (e.IsConstant()) return false;
      }
      // Univariate equations pin their variable.
      for (const auto& e : cur) {
        std::vector<std::string> used = e.UsedVariables();
        if (used.size() != 1) continue;
        std::vector<Rational> roots =
            RationalRoots(UnivariateCoefficients(e, e.VariableIndex(used[0])));
        if (roots.empty()) return false;
        a[used[0]] = roots[Pick(roots.size())];
        progress = true;
        break;
      }
      if (progress) continue;
      // An equation linear in v with a monomial coefficient eliminates v.
      std::vector<std::pair<size_t, std::string>> linear;
      for (size_t k = 0; k < cur.size(); ++k) {
        for (const auto& v : cur[k].UsedVariables()) {
          int i = cur[k].VariableIndex(v);
          if (cur[k].DegreeIn(i) == 1 && CoefficientsIn(cur[k], i)[1].terms().size() == 1) {
            linear.emplace_back(k, v);
          }
        }
      }
      if (!linear.empty()) {
        auto [k, v] = linear[Pick(linear.size())];
        std::vector<Polynomial> c = CoefficientsIn(cur[k], cur[k].VariableIndex(v));
        Elimination el{v, -c[0], c[1]};
        for (auto& e : cur) e = Eliminate(e, v, el.num, el.den);
        eliminated.insert(v);
        elims.push_back(std::move(el));
        continue;
      }
      std::vector<std::string> open;
      for (const auto& p : fam_.params) {
        if (!a.count(p) && !eliminated.count(p) && constrained_.count(p)) open.push_back(p);
      }
      if (open.empty()) break;
      a[open[Pick(open.size())]] = Value(grid);
    }
    for (auto it = elims.rbegin(); it != elims.rend(); ++it) {
      Polynomial den = it->den.Substitute(a), num = it->num.Substitute(a);
      if (!den.IsConstant() || !num.IsConstant()) return false;
      if (IsZero(den.ConstantTerm())) return false;
      a[it->v] = num.ConstantTerm() / den.ConstantTerm();
    }
    // Unconstrained parameters only need to keep the matrix invertible.
    for (const auto& p : fam_.params) {
      if (!a.count(p)) a[p] = grid ? Rational(1) : NonzeroValue();
    }
    for (const auto& e : eqs_) {
      if (!e.Substitute(a).IsZero()) return false;
    }
    return !IsZero(fam_.nonvanishing.Evaluate(a));
  }

 private:
  size_t Pick(size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng_);
  }

  Rational Value(bool grid) {
    long h = grid ? std::max(1, budget_.grid_bound) : 5;
    long q = grid ? std::uniform_int_distribution<long>(1, h)(rng_)
                  : std::uniform_int_distribution<long>(1, 3)(rng_);
    long p = std::uniform_int_distribution<long>(-h, h)(rng_);
    Rational x(p, q);
    x.canonicalize();
    return x;
  }

  Rational NonzeroValue() {
    Rational x = 0;
    while (IsZero(x)) x = Value(false);
    return x;
  }

  const AutomorphismFamily& fam_;
  std::vector<Polynomial> eqs_;
  SearchBudget budget_;
  std::mt19937_64 rng_;
  std::set<std::string> constrained_;
};

}  // namespace

std::optional<Witness> SearchWitness(const LieAlgebra& g,
                                     const AutomorphismFamily& fam,
                                     const Bivector& r, const Bivector& r2,
                                     const Endomorphism* n,
                                     const Endomorphism* n2,
                                     const SearchBudget& budget) {
  if ((n == nullptr) != (n2 == nullptr)) {
    throw std::invalid_argument("endomorphisms must be given in pairs");
  }
  PMatrix orbit = SymbolicOrbitR(fam, r);
  std::vector<Polynomial> eqs;
  for (int i = 0; i < orbit.rows(); ++i) {
    for (int j = i + 1; j < orbit.cols(); ++j) {
      Polynomial p = orbit(i, j) - Polynomial(r2.m(i, j)).Aligned(fam.params);
      if (!p.IsZero()) eqs.push_back(p);
    }
  }
  if (n) {
    // A n = n2 A keeps the system polynomial.
    PMatrix d = fam.entries * ToPolynomialMatrix(n->m) -
                ToPolynomialMatrix(n2->m) * fam.entries;
    for (int i = 0; i < d.rows(); ++i) {
      for (int j = 0; j < d.cols(); ++j) {
        if (!d(i, j).IsZero()) eqs.push_back(d(i, j).Aligned(fam.params));
      }
    }
  }
  Search search(fam, eqs, budget);
  Assignment a;
  for (long t = 0; t < budget.trials; ++t) {
    bool grid = t < budget.trials / 2;
    if (!search.Trial(grid, a)) continue;
    RMatrix m = Evaluate(fam.entries, a);
    if (!IsAutomorphism(g, m)) continue;
    if (VerifyWitness(g, m, r, r2, n, n2)) return Witness{a, m};
  }
  return std::nullopt;
}

}  // namespace rnstruct
