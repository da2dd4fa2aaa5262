#include <doctest.h>

#include <algorithm>
#include <random>

#include "cremona/builtins.hpp"
#include "cremona/glword.hpp"
#include "cremona/gnword.hpp"
#include "cremona/monomial_map.hpp"
#include "helpers.hpp"

using namespace cremona;
using namespace cremona::test;

namespace {

const IntMatrix kDolgachev{{-1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {-1, -1, 1, 0, 0}, {0, -1, 0, 1, 0}, {-1, 0, 0, 0, 1}};

IntMatrix minus_identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = -1;
  return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  IntMatrix a = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) {
      a = IntMatrix::sign(n, i) * a;
      continue;
    }
    a = IntMatrix::elementary(n, i, j, sign(rng) ? 1 : -1) * a;
  }
  return a;
}

IntMatrix random_gl_odd(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> kind(0, 3), len(1, 6);
  IntMatrix a = IntMatrix::identity(n);
  for (int s = len(rng); s > 0; --s) {
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = i;
    std::shuffle(image.begin(), image.end(), rng);
    GlLetter g{static_cast<GlKind>(kind(rng)), Permutation{image}};
    a = a * letter_matrix(g, n);
  }
  return a;
}

}  // namespace

TEST_CASE("monomial composition") {
  MonomialMap m{{Coeff(Q, 2L), Coeff(Q, -1L)}, IntMatrix{{1, 1}, {0, 1}}};
  CHECK(monomial_compose(MonomialMap::identity(Q, 2), m) == m);
  CHECK(monomial_compose(m, MonomialMap::identity(Q, 2)) == m);
  MonomialMap s = MonomialMap::from_matrix(Q, minus_identity(3));
  CHECK(monomial_compose(s, s) == MonomialMap::identity(Q, 3));
  CHECK(monomial_compose(m, monomial_inverse(m)) == MonomialMap::identity(Q, 2));
  CHECK_THROWS(monomial_inverse(MonomialMap::from_matrix(Q, IntMatrix{{2, 0}, {0, 1}})));
}

TEST_CASE("projective form of monomial maps") {
  for (std::size_t n = 2; n <= 4; ++n)
    CHECK(to_projective(MonomialMap::from_matrix(Q, minus_identity(n))) == sigma_map(Q, n));
  for (std::size_t n = 3; n <= 4; ++n) {
    auto m = from_projective(builtin("xi", n).map);
    REQUIRE(m);
    CHECK(m->matrix == IntMatrix::elementary(n, 1, 0, 1));
    for (const auto& c : m->coeffs) CHECK(c.is_one());
  }
  auto d = from_projective(builtin("dolgachev", 5).map);
  REQUIRE(d);
  CHECK(d->matrix == kDolgachev);
  CHECK_FALSE(from_projective(builtin("tau", 3).map));
}

TEST_CASE("projective form is a homomorphism") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + t % 2;
    auto pick = [&] {
      MonomialMap m = MonomialMap::from_matrix(Q, random_unimodular(rng, n, 3));
      for (auto& c : m.coeffs)
        if (long v = coef(rng)) c = Coeff(Q, v);
      return m;
    };
    MonomialMap a = pick(), b = pick();
    CHECK(equal_up_to_scalar(to_projective(monomial_compose(a, b)), compose(to_projective(a), to_projective(b))));
  }
}

TEST_CASE("GL_odd membership") {
  for (GlKind k : {GlKind::Theta, GlKind::Mu, GlKind::Nu})
    CHECK(gl_odd_test(letter_matrix(GlLetter{k, Permutation::identity(4)}, 4)));
  CHECK_FALSE(gl_odd_test(IntMatrix::elementary(3, 1, 0, 1)));
  CHECK(gl_odd_test(kDolgachev));
  CHECK_THROWS_AS(gl_odd_test(IntMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("GL_odd is closed under products and inverses") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + t % 3;
    IntMatrix a = random_gl_odd(rng, n), b = random_gl_odd(rng, n);
    CHECK(gl_odd_test(a * b));
    CHECK(gl_odd_test(a.inverse()));
    MonomialMap ma = MonomialMap::from_matrix(Q, a), mb = MonomialMap::from_matrix(Q, b);
    CHECK(gl_odd_test(monomial_compose(ma, mb).matrix));
  }
}

TEST_CASE("GL_odd membership is the column parity condition") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 4;
    IntMatrix a = random_unimodular(rng, n, 6);
    bool odd_columns = true;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class s = 0;
      for (std::size_t i = 0; i < n; ++i) s += a(i, j);
      odd_columns = odd_columns && mpz_odd_p(s.get_mpz_t());
    }
    CHECK(gl_odd_test(a) == odd_columns);
  }
}

TEST_CASE("GL_odd decomposition") {
  IntMatrix theta = letter_matrix(GlLetter{GlKind::Theta, Permutation::identity(3)}, 3);
  GlWord w = gl_odd_decompose(theta);
  CHECK(w.letters.size() == 1);
  CHECK(w.product() == theta);
  CHECK(gl_odd_decompose(IntMatrix::identity(4)).letters.empty());
  CHECK(gl_odd_decompose(kDolgachev).product() == kDolgachev);
  CHECK_THROWS(gl_odd_decompose(IntMatrix::elementary(3, 1, 0, 1)));

  std::mt19937_64 rng(34);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + t % 2;
    IntMatrix a = random_gl_odd(rng, n);
    GlWord d = gl_odd_decompose(a);
    CHECK(d.product() == a);
    for (const auto& g : d.letters) CHECK(g.kind != GlKind::Transvection);
  }
}

TEST_CASE("full unimodular decomposition") {
  GlWord t = gl_full_decompose(IntMatrix{{1, 1}, {0, 1}});
  REQUIRE(t.letters.size() == 1);
  CHECK(t.letters[0].kind == GlKind::Transvection);
  GlWord s = gl_full_decompose(IntMatrix{{-1, 0}, {0, 1}});
  REQUIRE(s.letters.size() == 1);
  CHECK(s.letters[0].kind == GlKind::Theta);

  std::mt19937_64 rng(35);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 4;
    IntMatrix a = random_unimodular(rng, n, 4 * static_cast<int>(n));
    CHECK(gl_full_decompose(a).product() == a);
  }
}

TEST_CASE("index of GL_odd") {
  CHECK(f2_orbit_index(2) == 3);
  CHECK(f2_orbit_index(3) == 7);
  CHECK(f2_orbit_index(5) == 31);
}
