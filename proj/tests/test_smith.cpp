#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chevalley/roots.hpp"
#include "chevalley/smith.hpp"
#include "support.hpp"

using namespace chevalley;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = Integer(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound);
    }
  }
  return m;
}

// Laplace expansion along the first row.
Integer cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = m(r, c);
      }
    }
    const Integer term = m(0, j) * cofactor_determinant(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors, which equals d_1 ... d_k.
Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs;
  std::vector<std::vector<std::size_t>> cs;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rs);
  subsets(m.cols(), k, 0, cur, cs);
  Integer g = 0;
  for (const auto& r : rs) {
    for (const auto& c : cs) {
      IntMatrix minor(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(r[i], c[j]);
      }
      const Integer d = cofactor_determinant(minor);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  }
  return g;
}

std::vector<Integer> ones_then(std::size_t n, std::vector<long> tail) {
  std::vector<Integer> out(n - tail.size(), Integer(1));
  for (long t : tail) out.emplace_back(t);
  return out;
}

}  // namespace

TEST_CASE("random matrices: U M V = D, unimodular, divisibility chain") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, rows, cols, i % 2 == 0 ? 4 : 30);
    const SmithForm s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(s.d.is_diagonal());
    CHECK(abs(cofactor_determinant(s.u)) == 1);
    CHECK(abs(cofactor_determinant(s.v)) == 1);
    const auto d = s.d.diagonal();
    for (std::size_t k = 0; k < d.size(); ++k) {
      CHECK(d[k] >= 0);
      if (k + 1 < d.size() && d[k] != 0) CHECK(d[k + 1] % d[k] == 0);
      if (d[k] == 0 && k + 1 < d.size()) CHECK(d[k + 1] == 0);
    }
    if (rows <= 4 && cols <= 4) {
      Integer product = 1;
      for (std::size_t k = 0; k < d.size(); ++k) {
        product *= d[k];
        CHECK(determinantal_divisor(m, k + 1) == product);
      }
    }
  }
}

TEST_CASE("determinant against cofactor expansion") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const IntMatrix m = random_matrix(rng, n, n, 9);
    CHECK(determinant(m) == cofactor_determinant(m));
  }
  const std::vector<std::pair<std::string, long>> cartan_dets{
      {"A4", 5}, {"B3", 2}, {"C5", 2}, {"D5", 4}, {"D6", 4}, {"E6", 3}, {"E7", 2}, {"E8", 1}, {"F4", 1}, {"G2", 1}};
  for (const auto& [name, det] : cartan_dets) {
    CAPTURE(name);
    const IntMatrix a(cartan_matrix(RootSystemType::parse(name)));
    CHECK(determinant(a) == det);
    CHECK(cofactor_determinant(a) == det);
  }
  CHECK_THROWS_KIND(determinant(IntMatrix(2, 3)), NotSquare);
}

TEST_CASE("invariant factors of Cartan matrices") {
  const std::vector<std::pair<std::string, std::vector<Integer>>> table{
      {"A1", ones_then(1, {2})},    {"A5", ones_then(5, {6})},    {"B4", ones_then(4, {2})},
      {"C3", ones_then(3, {2})},    {"D4", ones_then(4, {2, 2})}, {"D5", ones_then(5, {4})},
      {"D6", ones_then(6, {2, 2})}, {"E6", ones_then(6, {3})},    {"E7", ones_then(7, {2})},
      {"E8", ones_then(8, {})},     {"F4", ones_then(4, {})},     {"G2", ones_then(2, {})},
  };
  for (const auto& [name, factors] : table) {
    CAPTURE(name);
    const IntMatrix a(cartan_matrix(RootSystemType::parse(name)));
    const SmithForm s = smith_normal_form(a);
    CHECK(s.d.diagonal() == factors);
    CHECK(s.u * a * s.v == s.d);
    // Transposing does not change the invariant factors.
    CHECK(smith_normal_form(a.transpose()).d.diagonal() == factors);
  }
}

TEST_CASE("edge shapes") {
  const SmithForm zero = smith_normal_form(IntMatrix(2, 3));
  CHECK(zero.d == IntMatrix(2, 3));
  IntMatrix m(1, 3);
  m(0, 0) = 6;
  m(0, 1) = 10;
  m(0, 2) = 15;
  CHECK(smith_normal_form(m).d.diagonal() == std::vector<Integer>{Integer(1)});
  IntMatrix big(2, 2);
  big(0, 0) = Integer("123456789012345678901234567890");
  big(1, 1) = Integer("987654321098765432109876543210");
  const SmithForm s = smith_normal_form(big);
  CHECK(s.u * big * s.v == s.d);
  CHECK(s.d(0, 0) * s.d(1, 1) == big(0, 0) * big(1, 1));
}
