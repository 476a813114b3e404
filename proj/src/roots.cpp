#include "chevalley/roots.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <tuple>

#include "chevalley/error.hpp"

namespace chevalley {
namespace {

struct Gram {
  std::vector<std::vector<long>> matrix;
  long long_length = 2;
};

Gram simple_gram(RootSystemType type) {
  const int l = type.rank;
  Gram g;
  g.matrix.assign(static_cast<std::size_t>(l), std::vector<long>(static_cast<std::size_t>(l), 0));
  auto& s = g.matrix;
  auto edge = [&](int i, int j, long value) {
    s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
    s[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = value;
  };
  for (int i = 0; i < l; ++i) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1, -1);
      break;
    case Family::B:
      // α_l short.
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1, -1);
      s[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(l - 1)] = 1;
      break;
    case Family::C:
      // α_l long; lengths scaled by 2.
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1, -1);
      edge(l - 2, l - 1, -2);
      s[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(l - 1)] = 4;
      g.long_length = 4;
      break;
    case Family::D:
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1, -1);
      edge(l - 3, l - 1, -1);
      break;
    case Family::E:
      // Chain α_1..α_{l-3}; α_{l-3} meets α_{l-2} (leaf) and α_{l-1}; α_{l-1} meets α_l.
      for (int i = 0; i + 4 < l; ++i) edge(i, i + 1, -1);
      edge(l - 4, l - 3, -1);
      edge(l - 4, l - 2, -1);
      edge(l - 2, l - 1, -1);
      break;
    case Family::F:
      // α_1, α_2 short; α_3, α_4 long.
      s[2][2] = 4;
      s[3][3] = 4;
      edge(0, 1, -1);
      edge(1, 2, -2);
      edge(2, 3, -2);
      g.long_length = 4;
      break;
    case Family::G:
      // α_1 short, α_2 long.
      s[1][1] = 6;
      edge(0, 1, -3);
      g.long_length = 6;
      break;
  }
  return g;
}

}  // namespace

void RootSystemType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 3; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw Error(ErrorKind::InvalidRank, "no irreducible root system " + name());
}

std::string RootSystemType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c);
  }
  throw Error(ErrorKind::ParseError, "unknown root system family '" + std::string(text) + "'");
}

RootSystemType RootSystemType::parse(std::string_view text) {
  if (text.size() < 2) throw Error(ErrorKind::ParseError, "bad root system type '" + std::string(text) + "'");
  RootSystemType type{parse_family(text.substr(0, 1)), 0};
  const Integer rank = parse_integer(text.substr(1));
  if (!rank.fits_sint_p()) throw Error(ErrorKind::InvalidRank, "rank too large");
  type.rank = static_cast<int>(rank.get_si());
  type.validate();
  return type;
}

std::string format_root(const Root& root) {
  std::string out = "[";
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(root[i]);
  }
  return out + "]";
}

Root parse_root(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw Error(ErrorKind::ParseError, "root must look like [c1,...,cl]: '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  Root root;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const Integer c = parse_integer(trim(text.substr(0, comma)));
    if (!c.fits_sint_p()) throw Error(ErrorKind::ParseError, "root coefficient too large");
    root.push_back(static_cast<int>(c.get_si()));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return root;
}

int height(const Root& root) { return std::accumulate(root.begin(), root.end(), 0); }

std::vector<std::vector<int>> cartan_matrix(RootSystemType type) {
  type.validate();
  const auto gram = simple_gram(type).matrix;
  const auto l = static_cast<std::size_t>(type.rank);
  std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) a[i][j] = static_cast<int>(2 * gram[i][j] / gram[i][i]);
  }
  return a;
}

std::vector<int> decomposition_index_set(RootSystemType type) {
  type.validate();
  const int l = type.rank;
  std::vector<int> set;
  auto range = [&](int from, int to) {  // 1-based inclusive
    for (int i = from; i <= to; ++i) set.push_back(i - 1);
  };
  switch (type.family) {
    case Family::A: range(1, l - 1); break;
    case Family::B: range(2, l); break;
    case Family::C: range(1, l - 1); break;
    case Family::D: range(1, l - 2); break;
    case Family::E:
      if (l == 8) {
        range(1, 8);
      } else {
        range(1, l - 3);
        set.push_back(l - 2);  // α_{l-1}
      }
      break;
    case Family::F:
    case Family::G: range(1, l); break;
  }
  return set;
}

RootSystem::RootSystem(RootSystemType type) : type_(type) {
  type_.validate();
  const auto gram = simple_gram(type_);
  gram_ = gram.matrix;
  long_length_ = gram.long_length;
  cartan_ = cartan_matrix(type_);
  index_set_ = decomposition_index_set(type_);
  const int l = type_.rank;

  // Positive roots level by level via root strings.
  std::set<Root> positive;
  std::vector<Root> level;
  for (int i = 0; i < l; ++i) {
    Root r(static_cast<std::size_t>(l), 0);
    r[static_cast<std::size_t>(i)] = 1;
    level.push_back(r);
    positive.insert(r);
  }
  while (!level.empty()) {
    std::set<Root> next;
    for (const auto& beta : level) {
      for (int i = 0; i < l; ++i) {
        int p = 0;
        Root down = beta;
        for (;;) {
          down[static_cast<std::size_t>(i)] -= 1;
          if (!positive.count(down)) break;
          ++p;
        }
        int pairing_value = 0;
        for (int j = 0; j < l; ++j) {
          pairing_value += beta[static_cast<std::size_t>(j)] * cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        if (p - pairing_value > 0) {
          Root up = beta;
          up[static_cast<std::size_t>(i)] += 1;
          if (!positive.count(up)) next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    positive.insert(next.begin(), next.end());
  }

  for (const auto& r : positive) {
    roots_.push_back(r);
    Root neg = r;
    for (auto& c : neg) c = -c;
    roots_.push_back(neg);
  }
  auto outside = [&](const Root& r) {
    for (int i = 0; i < l; ++i) {
      if (r[static_cast<std::size_t>(i)] != 0 &&
          std::find(index_set_.begin(), index_set_.end(), i) == index_set_.end()) {
        return 1;
      }
    }
    return 0;
  };
  std::sort(roots_.begin(), roots_.end(), [&](const Root& x, const Root& y) {
    return std::make_tuple(outside(x), height(x), x) < std::make_tuple(outside(y), height(y), y);
  });

  const std::size_t n = roots_.size();
  for (std::size_t k = 0; k < n; ++k) lookup_.emplace(roots_[k], static_cast<int>(k));
  simple_.resize(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    Root r(static_cast<std::size_t>(l), 0);
    r[static_cast<std::size_t>(i)] = 1;
    simple_[static_cast<std::size_t>(i)] = index_of(r);
  }
  negative_.resize(n);
  sums_.assign(n * n, -1);
  cartan_numbers_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    Root neg = roots_[a];
    for (auto& c : neg) c = -c;
    negative_[a] = index_of(neg);
    for (std::size_t b = 0; b < n; ++b) {
      Root sum = roots_[a];
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += roots_[b][i];
      sums_[a * n + b] = index_of(sum);
      cartan_numbers_[a * n + b] = static_cast<int>(2 * inner(roots_[a], roots_[b]) / inner(roots_[a], roots_[a]));
    }
  }
}

int RootSystem::index_of(const Root& root) const {
  const auto it = lookup_.find(root);
  return it == lookup_.end() ? -1 : it->second;
}

int RootSystem::require_index(const Root& root) const {
  const int index = index_of(root);
  if (index < 0) throw Error(ErrorKind::NotARoot, format_root(root) + " is not a root of " + type_.name());
  return index;
}

long RootSystem::inner(const Root& a, const Root& b) const {
  long total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) total += a[i] * gram_[i][j] * b[j];
  }
  return total;
}

Rational RootSystem::squared_length(const Root& root) const {
  return Rational(Integer(2 * inner(root, root)), Integer(long_length_));
}

std::vector<Rational> RootSystem::simple_squared_lengths() const {
  std::vector<Rational> out;
  for (int i = 0; i < rank(); ++i) out.push_back(squared_length(root(simple_index(i))));
  return out;
}

int RootSystem::cartan_number(const Root& alpha, const Root& beta) const {
  return cartan_number(require_index(alpha), require_index(beta));
}

int RootSystem::pairing(const Root& beta, int alpha_index) const {
  const Root& alpha = root(alpha_index);
  return static_cast<int>(2 * inner(alpha, beta) / inner(alpha, alpha));
}

bool RootSystem::supported_on_index_set(int index) const {
  const Root& r = root(index);
  for (int i = 0; i < rank(); ++i) {
    if (r[static_cast<std::size_t>(i)] != 0 &&
        std::find(index_set_.begin(), index_set_.end(), i) == index_set_.end()) {
      return false;
    }
  }
  return true;
}

RootSystem enumerate_roots(RootSystemType type) { return RootSystem(type); }

namespace {

int permutation_order(const std::vector<int>& perm) {
  int order = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int length = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++length;
    }
    order = std::lcm(order, length);
  }
  return order;
}

DiagramSymmetry make_symmetry(const RootSystem& roots, const std::vector<int>& perm) {
  DiagramSymmetry sym;
  sym.permutation = perm;
  sym.order = permutation_order(perm);
  sym.root_permutation.resize(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const Root& r = roots.root(static_cast<int>(k));
    Root image(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) image[static_cast<std::size_t>(perm[i])] = r[i];
    sym.root_permutation[k] = roots.require_index(image);
  }
  return sym;
}

void extend(const std::vector<std::vector<int>>& a, std::vector<int>& perm, std::vector<bool>& used,
            std::vector<std::vector<int>>& out) {
  const std::size_t i = perm.size();
  if (i == a.size()) {
    out.push_back(perm);
    return;
  }
  for (std::size_t target = 0; target < a.size(); ++target) {
    if (used[target]) continue;
    bool ok = a[target][target] == a[i][i];
    for (std::size_t j = 0; ok && j < i; ++j) {
      const auto pj = static_cast<std::size_t>(perm[j]);
      ok = a[target][pj] == a[i][j] && a[pj][target] == a[j][i];
    }
    if (!ok) continue;
    used[target] = true;
    perm.push_back(static_cast<int>(target));
    extend(a, perm, used, out);
    perm.pop_back();
    used[target] = false;
  }
}

}  // namespace

std::vector<DiagramSymmetry> diagram_symmetries(const RootSystem& roots) {
  std::vector<std::vector<int>> perms;
  std::vector<int> perm;
  std::vector<bool> used(static_cast<std::size_t>(roots.rank()), false);
  extend(roots.cartan(), perm, used, perms);
  std::vector<DiagramSymmetry> out;
  for (const auto& p : perms) out.push_back(make_symmetry(roots, p));
  return out;
}

DiagramSymmetry find_symmetry(const RootSystem& roots, const std::vector<int>& permutation) {
  for (auto& sym : diagram_symmetries(roots)) {
    if (sym.permutation == permutation) return sym;
  }
  std::string text;
  for (int p : permutation) text += std::to_string(p + 1) + " ";
  throw Error(ErrorKind::NoSuchSymmetry, "no diagram symmetry of " + roots.type().name() + " sends simple roots to " + text);
}

}  // namespace chevalley
