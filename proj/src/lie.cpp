#include "chevalley/lie.hpp"

#include <algorithm>

#include "chevalley/error.hpp"

namespace chevalley {

ChevalleyBasis::ChevalleyBasis(RootSystem roots) : roots_(std::move(roots)) {
  const std::size_t n = roots_.size();
  const int l = roots_.rank();
  n_.assign(n * n, 0);
  build_structure_constants();

  coroots_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Root& r = roots_.root(static_cast<int>(a));
    const long length = roots_.inner(r, r);
    auto& c = coroots_[a];
    c.resize(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
      const long w = roots_.gram()[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
      c[static_cast<std::size_t>(i)] = static_cast<int>(r[static_cast<std::size_t>(i)] * w / length);
    }
  }

  const int dim = static_cast<int>(dimension());
  ad_.resize(static_cast<std::size_t>(dim));
  for (int a = 0; a < dim; ++a) {
    auto& columns = ad_[static_cast<std::size_t>(a)];
    columns.resize(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) columns[static_cast<std::size_t>(j)] = bracket(a, j);
  }

  exp_.resize(n);
  for (int a = 0; a < static_cast<int>(n); ++a) {
    auto& columns = exp_[static_cast<std::size_t>(a)];
    columns.resize(static_cast<std::size_t>(dim));
    const auto& ad = ad_[static_cast<std::size_t>(a)];
    for (int j = 0; j < dim; ++j) {
      auto& terms = columns[static_cast<std::size_t>(j)];
      std::vector<long> v(static_cast<std::size_t>(dim), 0);
      v[static_cast<std::size_t>(j)] = 1;
      for (int k = 0;; ++k) {
        bool nonzero = false;
        for (int r = 0; r < dim; ++r) {
          if (v[static_cast<std::size_t>(r)] != 0) {
            terms.push_back({r, k, v[static_cast<std::size_t>(r)]});
            nonzero = true;
          }
        }
        if (!nonzero) break;
        std::vector<long> next(static_cast<std::size_t>(dim), 0);
        for (int r = 0; r < dim; ++r) {
          const long x = v[static_cast<std::size_t>(r)];
          if (x == 0) continue;
          for (const auto& [row, c] : ad[static_cast<std::size_t>(r)]) next[static_cast<std::size_t>(row)] += x * c;
        }
        for (auto& x : next) {
          if (x % (k + 1) != 0) throw Error(ErrorKind::SingularMatrix, "non-integral divided power");
          x /= k + 1;
        }
        v = std::move(next);
      }
    }
  }
}

long ChevalleyBasis::signed_constant(int r, int s) const {
  const int t_index = roots_.sum_index(r, s);
  if (t_index < 0) return 0;
  const bool rp = roots_.is_positive(r);
  const bool sp = roots_.is_positive(s);
  if (rp && sp) return structure_constant(r, s);
  if (!rp && !sp) return -structure_constant(roots_.negative_of(r), roots_.negative_of(s));
  if (!rp) return -signed_constant(s, r);
  // r > 0 > s.  With t = -(r+s): N_{r,s}/(t,t) = N_{s,t}/(r,r) = N_{t,r}/(s,s).
  auto length = [&](int k) { return roots_.inner(roots_.root(k), roots_.root(k)); };
  const int xi = t_index;
  if (roots_.is_positive(xi)) {
    const int t = roots_.negative_of(xi);
    const long value = -length(t) * structure_constant(roots_.negative_of(s), xi);
    return value / length(r);
  }
  const int t = roots_.negative_of(xi);
  return length(t) * signed_constant(t, r) / length(s);
}

void ChevalleyBasis::build_structure_constants() {
  const int n = static_cast<int>(roots_.size());
  std::vector<int> positive;
  for (int k = 0; k < n; ++k) {
    if (roots_.is_positive(k)) positive.push_back(k);
  }
  std::stable_sort(positive.begin(), positive.end(),
                   [&](int a, int b) { return height(roots_.root(a)) < height(roots_.root(b)); });
  auto length = [&](int k) { return roots_.inner(roots_.root(k), roots_.root(k)); };
  auto set = [&](int a, int b, long value) {
    n_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = static_cast<int>(value);
    n_[static_cast<std::size_t>(b) * static_cast<std::size_t>(n) + static_cast<std::size_t>(a)] = static_cast<int>(-value);
  };

  for (int xi : positive) {
    if (height(roots_.root(xi)) < 2) continue;
    // Extraspecial pair: γ = α_i for the smallest i with ξ - α_i a root.
    int gamma = -1, delta = -1;
    for (int i = 0; i < roots_.rank() && gamma < 0; ++i) {
      const int candidate = roots_.sum_index(xi, roots_.negative_of(roots_.simple_index(i)));
      if (candidate >= 0) {
        gamma = roots_.simple_index(i);
        delta = candidate;
      }
    }
    int p = 0;
    for (int k = delta; (k = roots_.sum_index(k, roots_.negative_of(gamma))) >= 0;) ++p;
    const long n_gamma_delta = p + 1;
    set(gamma, delta, n_gamma_delta);

    for (int alpha : positive) {
      const int beta = roots_.sum_index(xi, roots_.negative_of(alpha));
      if (beta < 0 || !roots_.is_positive(beta)) continue;
      if (alpha == gamma || alpha == delta) continue;
      if (height(roots_.root(alpha)) > height(roots_.root(beta))) continue;
      // Four-root identity on γ + δ - α - β = 0.
      const int neg_alpha = roots_.negative_of(alpha);
      const int neg_beta = roots_.negative_of(beta);
      Rational total(0);
      const int d_minus_a = roots_.sum_index(delta, neg_alpha);
      if (d_minus_a >= 0) {
        total += Rational(Integer(signed_constant(delta, neg_alpha) * signed_constant(gamma, neg_beta)),
                          Integer(length(d_minus_a)));
      }
      const int g_minus_a = roots_.sum_index(gamma, neg_alpha);
      if (g_minus_a >= 0) {
        total += Rational(Integer(signed_constant(neg_alpha, gamma) * signed_constant(delta, neg_beta)),
                          Integer(length(g_minus_a)));
      }
      total *= Rational(Integer(length(xi)), Integer(n_gamma_delta));
      if (!total.is_integer()) throw Error(ErrorKind::SingularMatrix, "non-integral structure constant");
      set(alpha, beta, total.numerator().get_si());
    }
  }

  std::vector<int> full(n_.size(), 0);
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      full[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(s)] =
          static_cast<int>(signed_constant(r, s));
    }
  }
  n_ = std::move(full);
}

SparseVector ChevalleyBasis::bracket(int a, int b) const {
  const int n = static_cast<int>(roots_.size());
  const bool ar = a < n;
  const bool br = b < n;
  if (!ar && !br) return {};
  if (!ar) {
    const int c = roots_.cartan_number(roots_.simple_index(a - n), b);
    if (c == 0) return {};
    return {{b, c}};
  }
  if (!br) {
    const int c = roots_.cartan_number(roots_.simple_index(b - n), a);
    if (c == 0) return {};
    return {{a, -c}};
  }
  if (roots_.negative_of(a) == b) {
    SparseVector out;
    const auto& c = coroot(a);
    for (int i = 0; i < rank(); ++i) {
      if (c[static_cast<std::size_t>(i)] != 0) out.emplace_back(n + i, c[static_cast<std::size_t>(i)]);
    }
    return out;
  }
  const int sum = roots_.sum_index(a, b);
  if (sum < 0) return {};
  return {{sum, structure_constant(a, b)}};
}

std::vector<Integer> ChevalleyBasis::bracket(const std::vector<Integer>& u, const std::vector<Integer>& v) const {
  const std::size_t dim = dimension();
  std::vector<Integer> out(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    if (u[a] == 0) continue;
    for (std::size_t b = 0; b < dim; ++b) {
      if (v[b] == 0) continue;
      const Integer coefficient = u[a] * v[b];
      for (const auto& [k, c] : bracket(static_cast<int>(a), static_cast<int>(b))) {
        out[static_cast<std::size_t>(k)] += coefficient * c;
      }
    }
  }
  return out;
}

IntMatrix ChevalleyBasis::ad_matrix(int a) const {
  const std::size_t dim = dimension();
  IntMatrix m(dim, dim);
  const auto& columns = ad_columns(a);
  for (std::size_t j = 0; j < dim; ++j) {
    for (const auto& [k, c] : columns[j]) m(static_cast<std::size_t>(k), j) = c;
  }
  return m;
}

IntMatrix ChevalleyBasis::ad_matrix(std::string_view text) const { return ad_matrix(coordinate(text)); }

std::string ChevalleyBasis::label(int k) const {
  if (is_root_coordinate(k)) return "x" + format_root(roots_.root(k));
  return "h" + std::to_string(k - static_cast<int>(roots_.size()) + 1);
}

int ChevalleyBasis::coordinate(std::string_view text) const {
  auto unknown = [&]() {
    return Error(ErrorKind::UnknownLabel,
                 "'" + std::string(text) + "' is not a basis label of " + roots_.type().name());
  };
  if (text.size() < 2) throw unknown();
  if (text.front() == 'x') {
    try {
      const int index = roots_.index_of(parse_root(text.substr(1)));
      if (index >= 0 && roots_.root(index).size() == static_cast<std::size_t>(rank())) return index;
    } catch (const Error&) {
    }
    throw unknown();
  }
  if (text.front() == 'h') {
    const auto digits = text.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits.size() > 3) {
      throw unknown();
    }
    const int i = std::stoi(std::string(digits));
    if (i < 1 || i > rank()) throw unknown();
    return cartan_coordinate(i - 1);
  }
  throw unknown();
}

ChevalleyBasis build_chevalley_basis(const RootSystem& roots) { return ChevalleyBasis(roots); }

}  // namespace chevalley
