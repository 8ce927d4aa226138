#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cubix/cubic_form.hpp"
#include "cubix/poly.hpp"

using namespace cubix;

namespace {

// Independent discriminant oracle: disc(f) = -Res(f(x,1), f'(x,1)) / a,
// with the resultant computed as a 5x5 Sylvester determinant.
Int disc_by_resultant(const binary_cubic& f) {
  REQUIRE(f.a != 0);
  std::array<Rat, 4> fc{Rat(f.a), Rat(f.b), Rat(f.c), Rat(f.d)};
  std::array<Rat, 3> gc{Rat(3 * f.a), Rat(2 * f.b), Rat(f.c)};
  Rat m[5][5] = {};
  for (int r = 0; r < 2; ++r)
    for (int i = 0; i < 4; ++i) m[r][r + i] = fc[static_cast<size_t>(i)];
  for (int r = 0; r < 3; ++r)
    for (int i = 0; i < 3; ++i) m[2 + r][r + i] = gc[static_cast<size_t>(i)];
  // Gaussian elimination with exact rationals
  Rat det = 1;
  for (int col = 0; col < 5; ++col) {
    int piv = -1;
    for (int r = col; r < 5; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < 5; ++j) std::swap(m[piv][j], m[col][j]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < 5; ++r) {
      Rat fac = m[r][col] / m[col][col];
      for (int j = col; j < 5; ++j) m[r][j] -= fac * m[col][j];
    }
  }
  Rat out = -det / f.a;
  REQUIRE(denominator(out) == 1);
  return numerator(out);
}

}  // namespace

TEST_CASE("discriminant") {
  CHECK(binary_cubic{1, 0, 1, 1}.disc() == -31);
  CHECK(binary_cubic{1, 0, 1, 1}.disc() == disc_by_resultant({1, 0, 1, 1}));
  CHECK(binary_cubic{1, 0, 0, 0}.disc() == 0);
  CHECK(binary_cubic{1, 0, -1, 0}.disc() == 4);  // x(x-y)(x+y)
  CHECK(binary_cubic{1, 0, -1, 0}.disc() == disc_by_resultant({1, 0, -1, 0}));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-20, 20);
  for (int i = 0; i < 50; ++i) {
    binary_cubic f{coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
    if (f.a == 0) continue;
    CHECK(f.disc() == disc_by_resultant(f));
  }
}

TEST_CASE("heights") {
  binary_cubic f{1, 3, -5, 1};
  CHECK(height_balanced(f) == 5);
  CHECK(height_weighted_sq(f) == 9);  // max(|b|, sqrt|c|) = 3
  CHECK(height_weighted_sq(binary_cubic{1, 0, 9, 1}) == 9);
  CHECK(height_value(f, height_kind::weighted) == 3.0);

  // exact strict comparisons, no rounding at ties
  CHECK_FALSE(height_below(f, height_kind::weighted, Rat(3)));
  CHECK(height_below(f, height_kind::weighted, rat(31, 10)));
  CHECK_FALSE(height_below(f, height_kind::balanced, Rat(5)));
  CHECK(height_below(f, height_kind::balanced, Rat(6)));

  // agreement with the floating-point reference away from ties
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(-50, 50);
  for (int i = 0; i < 100; ++i) {
    binary_cubic g{1, coeff(rng), coeff(rng), 1};
    double h = std::max(std::abs(static_cast<double>(g.b)),
                        std::sqrt(std::abs(static_cast<double>(g.c))));
    CHECK(height_below(g, height_kind::weighted, rat(1000 * std::llround(h * 1000) + 1, 1000000)) ==
          (h < (1000.0 * std::llround(h * 1000) + 1) / 1e6));
  }
}

TEST_CASE("gl2 action") {
  binary_cubic f{3, -2, 5, 7};
  mat2 id{1, 0, 0, 1};
  CHECK(gl2_act(id, f) == f);

  mat2 swap{0, 1, 1, 0};
  CHECK(gl2_act(swap, binary_cubic{1, 2, 3, 4}) == binary_cubic{-4, -3, -2, -1});

  mat2 bad{2, 0, 0, 1};
  CHECK_THROWS_AS(gl2_act(bad, f), error);

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> small(-4, 4);
  std::uniform_int_distribution<int> coeff(-30, 30);
  int done = 0;
  while (done < 20) {
    mat2 g{small(rng), small(rng), small(rng), small(rng)};
    if (g.det() != 1 && g.det() != -1) continue;
    binary_cubic h{coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
    CHECK(gl2_act(g, h).disc() == h.disc());
    ++done;
  }
}

TEST_CASE("squarefree split") {
  auto s = squarefree_split(12);
  CHECK(s.k == 3);
  CHECK(s.m == 2);
  s = squarefree_split(1);
  CHECK(s.k == 1);
  CHECK(s.m == 1);
  s = squarefree_split(-8);
  CHECK(s.k == -2);
  CHECK(s.m == 2);
  CHECK_THROWS_AS(squarefree_split(0), error);

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long long> n(-100000, 100000);
  for (int i = 0; i < 200; ++i) {
    long long v = n(rng);
    if (v == 0) continue;
    auto sp = squarefree_split(v);
    CHECK(sp.k * sp.m * sp.m == v);
    CHECK(sp.m >= 1);
    for (auto& [p, e] : factor(sp.k)) CHECK(e == 1);
  }
}

TEST_CASE("sturm machinery") {
  poly p(std::vector<Rat>{Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1)});  // x^4 - 1
  CHECK(count_real_roots(p) == 2);
  poly q(std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)});  // x^4 + 1
  CHECK(count_real_roots(q) == 0);
  poly cube(std::vector<Rat>{Rat(0), Rat(-1), Rat(0), Rat(1)});  // x^3 - x
  CHECK(count_real_roots(cube) == 3);
  auto iv = isolate_real_roots(cube, rat(1, 100));
  REQUIRE(iv.size() == 3);
  CHECK(iv[0].second <= iv[1].first);
  CHECK(iv[1].second <= iv[2].first);
}
