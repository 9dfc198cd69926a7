#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "matforms/errors.hpp"
#include "matforms/generators.hpp"
#include "matforms/quiver_o.hpp"

using namespace matforms;

namespace {

DegreeVector with_ones(DegreeVector head, std::uint32_t ones) {
  head.insert(head.end(), ones, 1u);
  return head;
}

std::set<DegreeVector> as_set(const std::vector<DegreeVector>& v) { return {v.begin(), v.end()}; }

bool is_p_power(std::uint32_t e, std::uint64_t p) {
  if (e == 1) return true;
  if (p == 0) return false;
  while (e % p == 0) e /= static_cast<std::uint32_t>(p);
  return e == 1;
}

bool window(std::uint32_t n, std::uint32_t size, std::uint32_t smallest) {
  return size == n + 1 || (n + 1 < size && size <= 2 * n && size - smallest <= n);
}

// All non-increasing vectors of length >= 2 with entries p-powers, filtered by the window.
std::set<DegreeVector> brute_vectors(std::uint32_t n, std::uint64_t p) {
  std::set<DegreeVector> out;
  DegreeVector cur;
  auto rec = [&](auto&& self, std::uint32_t cap, std::uint32_t sum) -> void {
    if (cur.size() >= 2 && window(n, sum, cur.back())) out.insert(cur);
    for (std::uint32_t e = 1; e <= cap && sum + e <= 2 * n; ++e) {
      if (!is_p_power(e, p)) continue;
      cur.push_back(e);
      self(self, e, sum + e);
      cur.pop_back();
    }
  };
  rec(rec, 2 * n, 0);
  return out;
}

}  // namespace

TEST(Generators, DegreeVectorsMatchBruteForce) {
  for (std::uint32_t n = 2; n <= 6; ++n)
    for (std::uint64_t p : {0u, 2u, 3u, 5u, 7u, 11u})
      EXPECT_EQ(as_set(gl_degree_vectors(n, p)), brute_vectors(n, p)) << "n=" << n << " p=" << p;
}

TEST(Generators, DegreeVectorClosedForms) {
  for (std::uint32_t n = 2; n <= 12; ++n) {
    EXPECT_EQ(as_set(gl_degree_vectors(n, 0)), std::set<DegreeVector>{with_ones({}, n + 1)});
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
      const std::set<DegreeVector> got = as_set(gl_degree_vectors(n, p));
      const auto q = static_cast<std::uint32_t>(p);
      if (p > n) {
        EXPECT_EQ(got, std::set<DegreeVector>{with_ones({}, n + 1)});
      } else if (2 * p > n) {
        EXPECT_EQ(got, (std::set<DegreeVector>{with_ones({}, n + 1), with_ones({q}, n + 1 - q), {q, q}}))
            << "n=" << n << " p=" << p;
      } else if (3 * p > n && p != 2) {
        EXPECT_EQ(got, (std::set<DegreeVector>{with_ones({}, n + 1), with_ones({q}, n + 1 - q),
                                               with_ones({q, q}, n + 1 - 2 * q), {q, q, q}}))
            << "n=" << n << " p=" << p;
      }
    }
  }
}

TEST(Generators, DegreeVectorsStayInTheWindow) {
  for (std::uint32_t n = 2; n <= 8; ++n) {
    for (std::uint64_t p : {0u, 2u, 3u}) {
      for (const auto& t : gl_degree_vectors(n, p)) {
        EXPECT_GE(t.size(), 2u);
        EXPECT_GT(norm(t), n);
        EXPECT_LE(norm(t), 2 * n);
        EXPECT_TRUE(std::is_sorted(t.rbegin(), t.rend()));
      }
    }
  }
  EXPECT_THROW(gl_degree_vectors(3, 4), InvalidArgument);
}

TEST(Generators, TripleProperties) {
  for (std::uint32_t n = 2; n <= 4; ++n) {
    for (std::uint64_t p : {0u, 3u, 5u}) {
      const auto triples = o_degree_triples(n, p);
      ASSERT_FALSE(triples.empty());
      std::set<TripleDegree> seen;
      for (const auto& d : triples) {
        EXPECT_TRUE(seen.insert(d).second) << d.str();
        EXPECT_EQ(norm(d.r), norm(d.s));
        EXPECT_GT(d.weight(), n);
        EXPECT_LE(d.weight(), 2 * n);
        std::uint32_t nonzero = 0, smallest = 2 * n;
        for (const auto* v : {&d.t, &d.r, &d.s}) {
          EXPECT_FALSE(v->empty());
          EXPECT_TRUE(std::is_sorted(v->rbegin(), v->rend()));
          if (v->size() > 1) EXPECT_EQ(std::count(v->begin(), v->end(), 0u), 0);
          for (std::uint32_t e : *v) {
            if (!e) continue;
            ++nonzero;
            smallest = std::min(smallest, e);
            EXPECT_TRUE(is_p_power(e, p));
          }
        }
        EXPECT_GE(nonzero, 2u);
        EXPECT_TRUE(window(n, d.weight(), smallest));
        // the swapped triple is covered by the transpose symmetry
        if (d.r != d.s) EXPECT_FALSE(seen.count({d.t, d.s, d.r})) << d.str();
      }
    }
  }
  EXPECT_THROW(o_degree_triples(3, 2), InvalidArgument);
}

TEST(Generators, TriplesForSmallCase) {
  const auto triples = o_degree_triples(2, 0);
  const std::set<TripleDegree> got(triples.begin(), triples.end());
  EXPECT_TRUE(got.count({{1}, {1}, {1}}));
  EXPECT_TRUE(got.count({{1, 1, 1}, {0}, {0}}));
  for (std::uint64_t p : {0u, 7u})
    for (const auto& d : o_degree_triples(3, p))
      for (const auto* v : {&d.t, &d.r, &d.s})
        for (std::uint32_t e : *v) EXPECT_LE(e, 1u);
}

TEST(Generators, ArityAndParameters) {
  GeneratorSpec g;
  g.family = Family::MultiLinearization;
  g.tv = {2, 1};
  EXPECT_EQ(g.arity(), 2u);
  g.alphabet = Alphabet::O;
  g.rv = {1};
  g.sv = {1};
  EXPECT_EQ(g.arity(), 4u);
  g.family = Family::Zeta;
  EXPECT_EQ(g.arity(), 3u);
  EXPECT_EQ(std::string(family_name(Family::Chi)), "chi");
}

TEST(Generators, EnumerationIsDeterministic) {
  SuiteOptions o;
  o.seed = 4;
  const auto a = gl_generators(3, 2, o), b = gl_generators(3, 2, o);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(instantiate(a[i]).str(), instantiate(b[i]).str());
}

TEST(Generators, CyclicRelationIsSyntacticallyZero) {
  GeneratorSpec g;
  g.family = Family::Cyclic;
  g.n = 2;
  g.t = 2;
  const CoeffRing z = CoeffRing::integers();
  g.args = {LinComb(z, Word::letter(1)), LinComb(z, Word::letter(2))};
  EXPECT_TRUE(normalize(instantiate(g)).is_zero());
}

TEST(Generators, GlSuitesAreIdentities) {
  VerifyOptions v;
  v.n = 2;
  for (std::uint64_t p : {0u, 2u}) {
    const SuiteReport r = verify_all(Alphabet::GL, 2, p, v);
    EXPECT_TRUE(r.ok()) << "p=" << p;
    EXPECT_FALSE(r.results.empty());
  }
  v.n = 3;
  v.mode = VerifyMode::Randomized;
  EXPECT_TRUE(verify_all(Alphabet::GL, 3, 0, v).ok());
}

TEST(Generators, OrthogonalSuitesAreIdentities) {
  VerifyOptions v;
  v.n = 2;
  EXPECT_TRUE(verify_all(Alphabet::O, 2, 3, v).ok());
  v.n = 3;
  v.mode = VerifyMode::Randomized;
  EXPECT_TRUE(verify_all(Alphabet::O, 3, 0, v).ok());
}

TEST(Generators, MultilinearGeneratorsOutsideTheWindowFail) {
  // |t| = n is below the window: sigma_{(1,1)} does not vanish on 2x2 matrices
  GeneratorSpec g;
  g.family = Family::MultiLinearization;
  g.n = 2;
  g.tv = {1, 1};
  const CoeffRing z = CoeffRing::integers();
  g.args = {LinComb(z, Word::letter(1)), LinComb(z, Word::letter(2))};
  VerifyOptions v;
  v.n = 2;
  EXPECT_FALSE(is_identity(instantiate(g), v).identity);
}
