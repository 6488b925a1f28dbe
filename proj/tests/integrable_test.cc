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

#include <random>

#include <gtest/gtest.h>

#include "rnstruct/integrable.h"
#include "rnstruct/parser.h"
#include "test_util.h"

namespace rnstruct {
namespace {

using testing::WedgeR;

const IntegrableExample& Ex() { return A41Example(); }
Polynomial P(const std::string& s) { return Ex().phase.Parse(s); }
std::vector<std::string> Vars() { return Ex().phase.vars; }

void ExpectPoly(const Polynomial& got, const std::string& want) {
  EXPECT_EQ(got.Aligned(Vars()), P(want)) << got.ToString() << " vs " << want;
}

std::vector<Polynomial> PartInvariants(int l, int k) {
  return Invariants(LaxMatrix(Ex().S, Ex().parts[l], Ex().T), k);
}

TEST(PoissonTest, Examples) {
  const PhaseSpace& p = Ex().phase;
  EXPECT_EQ(PoissonBracket(p, P("x2"), P("x4")), P("1"));
  EXPECT_EQ(PoissonBracket(p, P("x1"), P("x3")), P("1"));
  EXPECT_TRUE(PoissonBracket(p, P("x1"), P("x2")).IsZero());
  EXPECT_TRUE(PoissonBracket(p, P("x3*x4^2 - x1"), P("x3*x4^2 - x1")).IsZero());
  EXPECT_EQ(PoissonBracket(p, P("-x2*x3"), P("x4")), P("-x3"));
  Polynomial foreign = ParsePolynomial("y", {"y"});
  EXPECT_THROW(PoissonBracket(p, foreign, P("x1")), std::invalid_argument);
}

TEST(PoissonTest, Axioms) {
  std::mt19937_64 rng(21);
  PhaseSpace p = PhaseSpace::Canonical(2);
  for (int t = 0; t < 25; ++t) {
    Polynomial f = testing::RandomPolynomial(rng, p.vars, 3, 2);
    Polynomial g = testing::RandomPolynomial(rng, p.vars, 3, 2);
    Polynomial h = testing::RandomPolynomial(rng, p.vars, 3, 2);
    EXPECT_EQ(PoissonBracket(p, f, g), -PoissonBracket(p, g, f));
    EXPECT_EQ(PoissonBracket(p, f, g * h),
              g * PoissonBracket(p, f, h) + h * PoissonBracket(p, f, g));
    Polynomial jac = PoissonBracket(p, f, PoissonBracket(p, g, h)) +
                     PoissonBracket(p, g, PoissonBracket(p, h, f)) +
                     PoissonBracket(p, h, PoissonBracket(p, f, g));
    EXPECT_TRUE(jac.IsZero());
  }
}

TEST(PhaseSpaceTest, CanonicalAndValidation) {
  PhaseSpace p = PhaseSpace::Canonical(2);
  EXPECT_EQ(p.dim(), 4);
  EXPECT_EQ(p.vars, (std::vector<std::string>{"x1", "x2", "x3", "x4"}));
  EXPECT_EQ(p.pi(0, 2), 1);
  EXPECT_EQ(p.pi(1, 3), 1);
  EXPECT_EQ(p.pi(2, 0), -1);
  EXPECT_EQ(p.pi(0, 1), 0);
  EXPECT_EQ(p.pi(2, 3), 0);
  RMatrix bad(2, 2);
  bad(0, 1) = 1;
  EXPECT_THROW(PhaseSpace::FromMatrix(bad), std::invalid_argument);
  EXPECT_THROW(PhaseSpace::FromMatrix(RMatrix(2, 2)), std::invalid_argument);
  EXPECT_THROW(PhaseSpace::FromMatrix(RMatrix(3, 3)), std::invalid_argument);
  bad(1, 0) = -1;
  EXPECT_NO_THROW(PhaseSpace::FromMatrix(bad));
}

TEST(RealizationTest, Examples) {
  const IntegrableExample& ex = Ex();
  EXPECT_TRUE(CheckRealization(ex.phase, ex.g, ex.S).ok());
  ExpectPoly(ex.S[0], "-x3");
  ExpectPoly(ex.S[1], "-x2*x3");
  ExpectPoly(ex.S[2], "-1/2*x2^2*x3");
  ExpectPoly(ex.S[3], "x4");

  LieAlgebra ab = LieAlgebra::FromBrackets(4, {});
  EXPECT_TRUE(CheckRealization(ex.phase, ab, {P("1"), P("2"), P("0"), P("-3")}).ok());

  std::vector<Polynomial> s = ex.S;
  s[3] = -s[3];
  RealizationReport rep = CheckRealization(ex.phase, ex.g, s);
  EXPECT_FALSE(rep.ok());
  EXPECT_NE(std::find(rep.failures.begin(), rep.failures.end(), std::make_pair(1, 3)),
            rep.failures.end());
  // {S_2, -x4} = x3 = -S_1: the opposite bracket sign would accept it.
  EXPECT_TRUE(rep.sign_flip_fixes);

  s = ex.S;
  s[0] = s[0] * Polynomial(2);
  rep = CheckRealization(ex.phase, ex.g, s);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.sign_flip_fixes);
}

RMatrix Commutator(const RMatrix& a, const RMatrix& b) { return a * b - b * a; }

TEST(RepresentationTest, AdjointIsARepresentation) {
  LieAlgebra g = Ex().g;
  std::vector<RMatrix> ad;
  for (int i = 0; i < 4; ++i) {
    RMatrix m(4, 4);
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) m(k, j) = g.f(k, i, j);
    }
    ad.push_back(m);
  }
  EXPECT_TRUE(CheckRepresentation(g, ad).empty());
  std::vector<RMatrix> zero(4, RMatrix(3, 3));
  EXPECT_TRUE(CheckRepresentation(g, zero).empty());
  ad[0](0, 1) += 1;
  EXPECT_FALSE(CheckRepresentation(g, ad).empty());
}

// The embedded triangular matrices reproduce every invariant but do not
// satisfy the commutation relations; the failing pairs are pinned here.
TEST(RepresentationTest, EmbeddedMatricesFailKnownPairs) {
  const IntegrableExample& ex = Ex();
  IndexPairs want = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  EXPECT_EQ(CheckRepresentation(ex.g, ex.T), want);
  RMatrix e14(4, 4);
  e14(0, 3) = -2;
  EXPECT_EQ(Commutator(ex.T[0], ex.T[1]), e14);
  // [T3, T4] = T2 is the one pair that holds.
  EXPECT_EQ(Commutator(ex.T[2], ex.T[3]), ex.T[1]);
  std::vector<RMatrix> t = ex.T;
  t[0](0, 1) = 2;
  EXPECT_FALSE(CheckRepresentation(ex.g, t).empty());
  EXPECT_NE(Commutator(t[1], t[3]) - t[0], Commutator(ex.T[1], ex.T[3]) - ex.T[0]);
}

TEST(LaxTest, Examples) {
  const IntegrableExample& ex = Ex();
  auto combo = [&](const std::vector<std::pair<int, int>>& terms) {
    // sum of sign * S_i T_j over (sign*(i+1), j) pairs
    PMatrix q(4, 4);
    for (auto [si, j] : terms) {
      Polynomial s = si > 0 ? ex.S[si - 1] : -ex.S[-si - 1];
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          q(a, b) = q(a, b) + (s * Polynomial(ex.T[j - 1](a, b))).Aligned(Vars());
        }
      }
    }
    return q;
  };
  auto aligned = [&](PMatrix q) {
    for (int a = 0; a < q.rows(); ++a) {
      for (int b = 0; b < q.cols(); ++b) q(a, b) = q(a, b).Aligned(Vars());
    }
    return q;
  };
  EXPECT_EQ(aligned(LaxMatrix(ex.S, ex.r, ex.T)), combo({{-4, 1}, {3, 2}, {-2, 3}, {1, 4}}));
  EXPECT_EQ(aligned(LaxMatrix(ex.S, ex.parts[0], ex.T)), combo({{1, 2}, {-2, 1}}));
  EXPECT_EQ(aligned(LaxMatrix(ex.S, ex.parts[1], ex.T)), combo({{3, 1}, {-1, 3}}));
  EXPECT_EQ(aligned(LaxMatrix(ex.S, ex.parts[2], ex.T)),
            combo({{3, 1}, {-4, 1}, {-1, 3}, {1, 4}}));
  EXPECT_EQ(aligned(LaxMatrix(ex.S, ex.parts[3], ex.T)), combo({{3, 2}, {-2, 3}}));
  PMatrix zero = LaxMatrix(ex.S, WedgeR(4, {}), ex.T);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) EXPECT_TRUE(zero(a, b).IsZero());
  }
}

TEST(InvariantsTest, MainSystem) {
  std::vector<Polynomial> inv = Invariants(LaxMatrix(Ex().S, Ex().r, Ex().T), 3);
  ASSERT_EQ(inv.size(), 3u);
  ExpectPoly(inv[0], "2*x2*x3 - x3 - x4");
  ExpectPoly(inv[1], "x2^2*x3^2 + (x2*x3 - x3)^2 + x4^2");
  ExpectPoly(inv[2], "x2^3*x3^3 + (x2*x3 - x3)^3 - x4^3");
}

TEST(InvariantsTest, Subsystems) {
  ExpectPoly(PartInvariants(0, 1)[0], "x2*x3");
  std::vector<Polynomial> two = PartInvariants(1, 2);
  ExpectPoly(two[0], "2*x3 - 1/2*x2^2*x3");
  ExpectPoly(two[1], "2*x3^2 + (1/2*x2^2*x3)^2");
  std::vector<Polynomial> three = PartInvariants(2, 2);
  ExpectPoly(three[0], "x3 - 1/2*x2^2*x3 - x4");
  ExpectPoly(three[1], "x3^2 + (1/2*x2^2*x3 + x4)^2");
  ExpectPoly(PartInvariants(3, 1)[0], "2*x2*x3");
}

TEST(InvariantsTest, ZeroAndTraceCyclicity) {
  for (const auto& p : Invariants(PMatrix(3, 3), 3)) EXPECT_TRUE(p.IsZero());
  PMatrix q = LaxMatrix(Ex().S, Ex().r, Ex().T);
  PMatrix q2 = LaxMatrix(Ex().S, Ex().parts[2], Ex().T);
  auto trace = [](const PMatrix& m) {
    Polynomial t = m(0, 0);
    for (int i = 1; i < m.rows(); ++i) t = t + m(i, i);
    return t;
  };
  EXPECT_EQ(trace(q * q * q), Invariants(q, 3)[2]);
  EXPECT_EQ(trace(q * q2), trace(q2 * q));
  EXPECT_EQ(trace(q * q2 * q), trace(q * q * q2));
}

TEST(InvolutionTest, Examples) {
  const PhaseSpace& p = Ex().phase;
  EXPECT_TRUE(CheckInvolution(p, {P("x1*x2"), P("x1*x2")}).empty());
  EXPECT_EQ(CheckInvolution(p, {P("x1"), P("x3")}), (IndexPairs{{0, 1}}));
  EXPECT_TRUE(CheckInvolution(p, PartInvariants(1, 2)).empty());
  EXPECT_TRUE(CheckInvolution(p, PartInvariants(2, 2)).empty());
}

// Three independent functions on a 4-dimensional symplectic space cannot be
// pairwise in involution; the brackets are pinned exactly.
TEST(InvolutionTest, MainSystemBrackets) {
  const PhaseSpace& p = Ex().phase;
  std::vector<Polynomial> inv = Invariants(LaxMatrix(Ex().S, Ex().r, Ex().T), 3);
  EXPECT_EQ(CheckInvolution(p, inv), (IndexPairs{{0, 1}, {0, 2}, {1, 2}}));
  ExpectPoly(PoissonBracket(p, inv[0], inv[1]), "4*x2*x3^2 - 2*x3^2 + 4*x3*x4");
}

TEST(IndependenceTest, Examples) {
  const PhaseSpace& p = Ex().phase;
  std::vector<Polynomial> inv = Invariants(LaxMatrix(Ex().S, Ex().r, Ex().T), 3);
  IndependenceReport rep = IndependenceRank(p, inv);
  EXPECT_EQ(rep.rank, 3);
  EXPECT_TRUE(rep.stable);
  EXPECT_EQ(IndependenceRank(p, {inv[0], inv[0] * inv[0]}).rank, 1);
  EXPECT_EQ(IndependenceRank(p, PartInvariants(1, 2)).rank, 2);
  EXPECT_EQ(IndependenceRank(p, {P("0")}).rank, 0);
  EXPECT_EQ(IndependenceRank(p, {P("x1"), P("x2"), P("x3"), P("x4")}).rank, 4);
}

TEST(IntegrabilityTest, Classification) {
  const PhaseSpace& p = Ex().phase;
  std::vector<Polynomial> inv = Invariants(LaxMatrix(Ex().S, Ex().r, Ex().T), 3);
  Integrability main = ClassifyIntegrability(p, inv);
  EXPECT_EQ(main.kind, Integrability::Kind::kSuperintegrable);
  EXPECT_EQ(main.extra, 1);
  EXPECT_EQ(main.rank, 3);
  EXPECT_TRUE(main.maximal);
  EXPECT_EQ(main.ToString(), "superintegrable(extra=1)");

  Integrability single = ClassifyIntegrability(p, {inv[0]});
  EXPECT_EQ(single.kind, Integrability::Kind::kUnderDetermined);
  EXPECT_EQ(single.ToString(), "under-determined");

  for (int l : {1, 2}) {
    Integrability sub = ClassifyIntegrability(p, PartInvariants(l, 2));
    EXPECT_EQ(sub.kind, Integrability::Kind::kLiouville) << l;
    EXPECT_EQ(sub.ToString(), "Liouville-integrable");
  }
  Integrability pair = ClassifyIntegrability(p, {P("x1"), P("x3")});
  EXPECT_EQ(pair.kind, Integrability::Kind::kUnderDetermined);
}

TEST(SumHamiltonianTest, Example) {
  const IntegrableExample& ex = Ex();
  SumHamiltonianResult res = SumHamiltonian(ex.g, ex.S, ex.T, ex.r, ex.parts);
  ExpectPoly(res.H, "3*x3 + 3*x2*x3 - x2^2*x3 - x4");
  RMatrix n_sum{{1, 2, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, -2}, {0, 0, 0, 1}};
  EXPECT_EQ(res.n_sum.m, n_sum);
  EXPECT_TRUE(res.consistency);
  ASSERT_EQ(res.part_H.size(), 4u);
  Polynomial total = res.part_H[0];
  for (size_t l = 1; l < 4; ++l) total = total + res.part_H[l];
  EXPECT_EQ(total.Aligned(Vars()), res.H.Aligned(Vars()));

  Bivector nr = Bivector::FromMatrix(res.n_sum.m * ex.r.m);
  std::vector<Polynomial> inv = Invariants(LaxMatrix(ex.S, nr, ex.T), 3);
  ExpectPoly(inv[0], "3*x3 + 3*x2*x3 - x2^2*x3 - x4");
  ExpectPoly(inv[1], "(x2*x3 + 2*x3)^2 + (x2*x3 + x3)^2 + (x2*x3 - x4 - x2^2*x3)^2");
  ExpectPoly(inv[2], "(x2*x3 + 2*x3)^3 + (x2*x3 + x3)^3 + (x2*x3 - x4 - x2^2*x3)^3");
}

TEST(SumHamiltonianTest, PartNijenhuisOperators) {
  const IntegrableExample& ex = Ex();
  // Columns are n(X_j).
  std::vector<RMatrix> want = {
      RMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}},
      RMatrix{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}},
      RMatrix{{1, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 0, 1}},
      RMatrix{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}}};
  for (size_t l = 0; l < 4; ++l) {
    EXPECT_EQ(NFromPair(ex.g, ex.r, ex.parts[l]).m, want[l]) << l;
  }
}

TEST(SumHamiltonianTest, SinglePartAndIncompatible) {
  const IntegrableExample& ex = Ex();
  SumHamiltonianResult res = SumHamiltonian(ex.g, ex.S, ex.T, ex.r, {ex.r});
  EXPECT_EQ(res.n_sum.m, RMatrix::Identity(4));
  ExpectPoly(res.H, "2*x2*x3 - x3 - x4");
  EXPECT_TRUE(res.consistency);
  EXPECT_THROW(SumHamiltonian(ex.g, ex.S, ex.T, ex.r, {WedgeR(4, {{2, 4, 1}})}),
               PreconditionError);
}

}  // namespace
}  // namespace rnstruct
