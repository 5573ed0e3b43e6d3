#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "fqdist/error.hpp"
#include "fqdist/field.hpp"

using namespace fqdist;

namespace {

using Poly = std::vector<std::int64_t>;  // coefficient of X^i at position i

Poly digits(std::uint32_t idx, std::uint32_t p, std::uint32_t ell) {
  Poly c(ell);
  for (auto& x : c) {
    x = idx % p;
    idx /= p;
  }
  return c;
}

std::uint32_t pack(const Poly& c, std::uint32_t p) {
  std::uint32_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + static_cast<std::uint32_t>(c[i]);
  return idx;
}

// Schoolbook product reduced by a monic modulus.
Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, std::int64_t p) {
  const std::size_t ell = mod.size() - 1;
  Poly prod(2 * ell, 0);
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t j = 0; j < ell; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t k = prod.size(); k-- > ell;) {
    const std::int64_t lead = prod[k];
    for (std::size_t i = 0; i <= ell; ++i) {
      prod[k - ell + i] = ((prod[k - ell + i] - lead * mod[i]) % p + p) % p;
    }
  }
  prod.resize(ell);
  return prod;
}

// Remainder of a by monic-or-not b over F_p; both trimmed.
Poly polymod(Poly a, const Poly& b, std::int64_t p) {
  std::int64_t inv_lead = 1;
  while (b.back() * inv_lead % p != 1) ++inv_lead;
  while (a.size() >= b.size()) {
    const std::int64_t factor = a.back() * inv_lead % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

// Irreducibility by trial division with every monic polynomial of degree <= n/2.
bool irreducible_by_trial(const Poly& f, std::int64_t p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t deg = 1; deg <= n / 2; ++deg) {
    std::int64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      Poly g(deg + 1);
      std::int64_t c = code;
      for (std::size_t i = 0; i < deg; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[deg] = 1;
      if (polymod(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct Shape {
  std::int64_t p, ell;
};

const Shape kShapes[] = {{3, 1}, {5, 1}, {7, 1}, {13, 1}, {3, 2}, {5, 2}, {7, 2},
                         {3, 3}, {5, 3}, {3, 4}, {3, 5}, {11, 2}};

}  // namespace

TEST(FieldConstruction, Examples) {
  const FieldPtr f5 = FieldCtx::make(5, 1);
  EXPECT_EQ(f5->q(), 5u);
  EXPECT_TRUE(f5->is_prime_field());

  const FieldPtr f9 = FieldCtx::make(3, 2);
  EXPECT_EQ(f9->q(), 9u);
  const std::vector<std::uint32_t> x2_plus_1 = {1, 0, 1};
  EXPECT_TRUE(std::equal(f9->modulus().begin(), f9->modulus().end(), x2_plus_1.begin(),
                         x2_plus_1.end()));
}

TEST(FieldConstruction, RejectsBadInput) {
  auto code_of = [](std::int64_t p, std::int64_t ell) {
    try {
      FieldCtx::make(p, ell);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::IoError;
  };
  EXPECT_EQ(code_of(2, 1), Errc::EvenCharacteristic);
  EXPECT_EQ(code_of(9, 1), Errc::NonPrime);
  EXPECT_EQ(code_of(1, 1), Errc::NonPrime);
  EXPECT_EQ(code_of(-3, 1), Errc::NonPrime);
  EXPECT_EQ(code_of(3, 0), Errc::BadDegree);
  EXPECT_EQ(code_of(3, 13), Errc::FieldTooLarge);
  EXPECT_EQ(code_of(1048583, 1), Errc::FieldTooLarge);
}

TEST(FieldConstruction, ModulusIsSmallestIrreducible) {
  for (const Shape s : kShapes) {
    if (s.ell == 1) continue;
    const FieldPtr f = FieldCtx::make(s.p, s.ell);
    const Poly chosen(f->modulus().begin(), f->modulus().end());
    ASSERT_EQ(chosen.size(), static_cast<std::size_t>(s.ell + 1));
    ASSERT_EQ(chosen.back(), 1);
    EXPECT_TRUE(irreducible_by_trial(chosen, s.p));

    // Walk (c_0, ..., c_{ell-1}) as a base-p number with c_0 most significant.
    std::int64_t count = 1;
    for (int i = 0; i < s.ell; ++i) count *= s.p;
    Poly first;
    for (std::int64_t code = 0; code < count && first.empty(); ++code) {
      Poly g(static_cast<std::size_t>(s.ell) + 1);
      std::int64_t c = code;
      for (std::int64_t i = s.ell - 1; i >= 0; --i) {
        g[static_cast<std::size_t>(i)] = c % s.p;
        c /= s.p;
      }
      g.back() = 1;
      if (irreducible_by_trial(g, s.p)) first = g;
    }
    EXPECT_EQ(chosen, first) << "p=" << s.p << " ell=" << s.ell;
  }
}

TEST(FieldArithmetic, Examples) {
  const FieldPtr f5 = FieldCtx::make(5, 1);
  EXPECT_EQ(f5->mul({2}, {3}), FqElem{1});
  const FieldPtr f9 = FieldCtx::make(3, 2);
  EXPECT_EQ(f9->mul({3}, {3}), FqElem{2});  // X * X = -1
  const FieldPtr f7 = FieldCtx::make(7, 1);
  EXPECT_EQ(f7->inv({3}), FqElem{5});
}

TEST(FieldArithmetic, MatchesPolynomialOracle) {
  for (const Shape s : kShapes) {
    const FieldPtr f = FieldCtx::make(s.p, s.ell);
    const Poly mod(f->modulus().begin(), f->modulus().end());
    const auto p = static_cast<std::uint32_t>(s.p);
    const auto ell = static_cast<std::uint32_t>(s.ell);
    const std::uint32_t step = f->q() > 200 ? 7 : 1;
    for (std::uint32_t a = 0; a < f->q(); a += step) {
      const Poly pa = digits(a, p, ell);
      for (std::uint32_t b = 0; b < f->q(); ++b) {
        const Poly pb = digits(b, p, ell);
        Poly sum(ell);
        for (std::uint32_t i = 0; i < ell; ++i) sum[i] = (pa[i] + pb[i]) % s.p;
        ASSERT_EQ(f->add({a}, {b}).idx, pack(sum, p));
        if (ell == 1) {
          ASSERT_EQ(f->mul({a}, {b}).idx, (a * b) % p);
        } else {
          ASSERT_EQ(f->mul({a}, {b}).idx, pack(mulmod(pa, pb, mod, s.p), p))
              << "q=" << f->q() << " a=" << a << " b=" << b;
        }
      }
    }
  }
}

TEST(FieldArithmetic, Axioms) {
  for (const Shape s : kShapes) {
    const FieldPtr f = FieldCtx::make(s.p, s.ell);
    for (std::uint32_t a = 0; a < f->q(); ++a) {
      const FqElem x{a};
      EXPECT_EQ(f->add(x, f->neg(x)), f->zero());
      EXPECT_EQ(f->sub(x, x), f->zero());
      if (a != 0) {
        EXPECT_EQ(f->mul(x, f->inv(x)), f->one());
        EXPECT_EQ(f->div(x, x), f->one());
        EXPECT_EQ(f->pow(x, f->q() - 1), f->one());
      }
      EXPECT_EQ(f->pow(x, f->q()), x);
      EXPECT_EQ(f->sq(x), f->mul(x, x));
      const FqElem y = f->from_int(a * 31 + 7);
      const FqElem z = f->element((a * 17 + 3) % f->q());
      EXPECT_EQ(f->mul(x, f->add(y, z)), f->add(f->mul(x, y), f->mul(x, z)));
      EXPECT_EQ(f->mul(f->mul(x, y), z), f->mul(x, f->mul(y, z)));
    }
  }
}

TEST(FieldArithmetic, Errors) {
  const FieldPtr f = FieldCtx::make(3, 2);
  EXPECT_THROW(f->inv(f->zero()), Error);
  EXPECT_THROW(f->element(9), Error);
  EXPECT_THROW(f->element(-1), Error);
  try {
    f->inv(f->zero());
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
}

TEST(FieldEncoding, RoundTrip) {
  for (const Shape s : kShapes) {
    const FieldPtr f = FieldCtx::make(s.p, s.ell);
    for (std::uint32_t a = 0; a < f->q(); ++a) {
      const std::vector<std::uint32_t> c = f->coefficients({a});
      ASSERT_EQ(c.size(), static_cast<std::size_t>(s.ell));
      EXPECT_EQ(f->from_coefficients(c).idx, a);
    }
    EXPECT_EQ(f->from_int(-1), f->neg(f->one()));
  }
}

TEST(Trace, Examples) {
  const FieldPtr f5 = FieldCtx::make(5, 1);
  EXPECT_EQ(f5->trace({3}), 3u);
  const FieldPtr f9 = FieldCtx::make(3, 2);
  EXPECT_EQ(f9->trace({3}), 0u);  // X
  EXPECT_EQ(f9->trace({1}), 2u);
}

TEST(Trace, FrobeniusSumLinearAndOnto) {
  for (const Shape s : kShapes) {
    const FieldPtr f = FieldCtx::make(s.p, s.ell);
    std::vector<int> hits(static_cast<std::size_t>(s.p), 0);
    for (std::uint32_t a = 0; a < f->q(); ++a) {
      FqElem t = f->zero();
      FqElem conj{a};
      for (int i = 0; i < s.ell; ++i) {
        t = f->add(t, conj);
        conj = f->pow(conj, static_cast<std::uint64_t>(s.p));
      }
      ASSERT_LT(t.idx, f->p());
      EXPECT_EQ(f->trace({a}), t.idx);
      ++hits[f->trace({a})];
      const std::uint32_t b = (a * 5 + 1) % f->q();
      for (std::uint32_t alpha = 0; alpha < f->p(); ++alpha) {
        const FqElem combo = f->add(f->mul({alpha}, {a}), {b});
        EXPECT_EQ(f->trace(combo), (alpha * f->trace({a}) + f->trace({b})) % f->p());
      }
    }
    for (int h : hits) EXPECT_EQ(h, static_cast<int>(f->q() / f->p()));
  }
}

TEST(QuadraticCharacter, Examples) {
  const FieldPtr f5 = FieldCtx::make(5, 1);
  EXPECT_EQ(f5->eta({4}), 1);
  EXPECT_EQ(f5->eta({2}), -1);
  for (const Shape s : kShapes) EXPECT_EQ(FieldCtx::make(s.p, s.ell)->eta({0}), 0);
}

TEST(QuadraticCharacter, MatchesSquareEnumeration) {
  for (const Shape s : kShapes) {
    const FieldPtr f = FieldCtx::make(s.p, s.ell);
    std::vector<bool> square(f->q(), false);
    for (std::uint32_t x = 1; x < f->q(); ++x) square[f->sq({x}).idx] = true;
    int plus = 0;
    int minus = 0;
    for (std::uint32_t a = 1; a < f->q(); ++a) {
      EXPECT_EQ(f->eta({a}), square[a] ? 1 : -1);
      (f->eta({a}) == 1 ? plus : minus)++;
    }
    EXPECT_EQ(plus, static_cast<int>((f->q() - 1) / 2));
    EXPECT_EQ(minus, plus);
    EXPECT_EQ(f->eta_minus_one(), f->eta(f->from_int(-1)));
  }
}

TEST(QuadraticCharacter, MultiplicativeAndScaleInvariant) {
  for (const Shape s : kShapes) {
    const FieldPtr f = FieldCtx::make(s.p, s.ell);
    if (f->q() > 49) continue;
    for (std::uint32_t a = 1; a < f->q(); ++a) {
      for (std::uint32_t b = 1; b < f->q(); ++b) {
        EXPECT_EQ(f->eta(f->mul({a}, {b})), f->eta({a}) * f->eta({b}));
        EXPECT_EQ(f->eta(f->mul(f->sq({b}), {a})), f->eta({a}));
      }
    }
  }
}

TEST(Primality, SmallNumbers) {
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 1048573};
  for (std::uint64_t n : primes) EXPECT_TRUE(is_prime(n)) << n;
  for (std::uint64_t n : {0ull, 1ull, 4ull, 9ull, 15ull, 21ull, 1048575ull}) EXPECT_FALSE(is_prime(n)) << n;
}
