#include "chevalley/io.hpp"

#include <cctype>

#include "chevalley/error.hpp"

namespace chevalley {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Json string_row(const std::vector<Integer>& values) {
  Json row = Json::array();
  for (const auto& v : values) row.push_back(v.get_str());
  return row;
}

}  // namespace

std::vector<std::string> split_list(std::string_view text, char separator) {
  std::vector<std::string> out;
  text = trim(text);
  if (text.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == separator && depth == 0)) {
      out.emplace_back(trim(text.substr(start, i - start)));
      start = i + 1;
    } else if (text[i] == '(' || text[i] == '[') {
      ++depth;
    } else if (text[i] == ')' || text[i] == ']') {
      --depth;
    }
  }
  return out;
}

AnyField parse_field(std::string_view text) {
  text = trim(text);
  if (text == "Q") return RationalField{};
  if (text == "Q(T)") return RationalFunctionField{};
  constexpr std::string_view prefix = "Q(sqrt(";
  constexpr std::string_view suffix = "))";
  if (text.size() > prefix.size() + suffix.size() && text.substr(0, prefix.size()) == prefix &&
      text.substr(text.size() - suffix.size()) == suffix) {
    const auto digits = trim(text.substr(prefix.size(), text.size() - prefix.size() - suffix.size()));
    const Integer d = parse_integer(digits);
    if (!d.fits_slong_p()) throw Error(ErrorKind::IncompatibleField, "radicand too large");
    return QuadraticField(d.get_si());
  }
  throw Error(ErrorKind::ParseError, "unknown field '" + std::string(text) + "'; use Q, Q(sqrt(d)) or Q(T)");
}

std::string field_name(const AnyField& field) {
  return std::visit([](const auto& f) { return f.name(); }, field);
}

FieldAutomorphism parse_field_automorphism(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "id" || text == "identity") return FieldAutomorphism::identity();
  if (text == "conj" || text == "conjugation") return FieldAutomorphism::conjugation();
  constexpr std::string_view prefix = "mobius(";
  if (text.substr(0, prefix.size()) == prefix && text.back() == ')') {
    const auto entries = split_list(text.substr(prefix.size(), text.size() - prefix.size() - 1));
    if (entries.size() == 4) {
      return FieldAutomorphism::mobius(Rational::parse(entries[0]), Rational::parse(entries[1]),
                                       Rational::parse(entries[2]), Rational::parse(entries[3]));
    }
  }
  throw Error(ErrorKind::ParseError,
              "unknown field automorphism '" + std::string(text) + "'; use id, conj or mobius(a,b,c,d)");
}

std::string format_field_automorphism(const FieldAutomorphism& delta) { return delta.to_string(); }

template <class Field>
Word<Field> parse_word(const ChevalleyGroup<Field>& group, std::string_view text) {
  Word<Field> word;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::ParseError, "cannot parse element '" + std::string(text) + "': " + why);
  };
  for (;;) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    const char kind = text[pos];
    if (kind != 'x' && kind != 'h' && kind != 'n') throw fail(std::string("unknown generator '") + kind + "'");
    ++pos;
    if (pos >= text.size() || text[pos] != '(') throw fail("expected '(' after " + std::string(1, kind));
    const std::size_t open = ++pos;
    int depth = 1;
    while (pos < text.size() && depth > 0) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')') --depth;
      ++pos;
    }
    if (depth != 0) throw fail("unbalanced parentheses");
    const std::string_view body = text.substr(open, pos - 1 - open);
    const auto semicolon = body.find(';');
    if (semicolon == std::string_view::npos) throw fail("expected 'root;scalar'");
    const Root root = parse_root(body.substr(0, semicolon));
    if (root.size() != static_cast<std::size_t>(group.rank())) throw fail("root has the wrong length");
    Generator<Field> g{kind, group.roots().require_index(root), group.field().parse(body.substr(semicolon + 1))};
    if (kind != 'x' && g.parameter.is_zero()) {
      throw Error(ErrorKind::NonInvertibleScalar, std::string(1, kind) + "_α(0) is not defined");
    }
    word.push_back(std::move(g));
  }
  return word;
}

template <class Field>
std::string format_word(const ChevalleyGroup<Field>& group, const Word<Field>& word) {
  std::string out;
  for (const auto& g : word) {
    if (!out.empty()) out += ' ';
    out += std::string(1, g.kind) + "(" + format_root(group.roots().root(g.root)) + ";" +
           group.field().format(g.parameter) + ")";
  }
  return out;
}

Json root_system_json(const RootSystem& roots) {
  Json j;
  j["type"] = roots.type().name();
  j["rank"] = roots.rank();
  j["count"] = roots.size();
  j["positive"] = roots.positive_count();
  Json list = Json::array();
  for (const auto& r : roots.roots()) list.push_back(r);
  j["roots"] = list;
  j["cartan_matrix"] = roots.cartan();
  Json lengths = Json::array();
  for (const auto& x : roots.simple_squared_lengths()) lengths.push_back(x.to_string());
  j["squared_lengths"] = lengths;
  Json index_set = Json::array();
  for (int i : roots.index_set()) index_set.push_back(i + 1);
  j["index_set"] = index_set;
  return j;
}

Json int_matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(row);
  }
  return rows;
}

IntMatrix int_matrix_from_json(const Json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw Error(ErrorKind::ParseError, "ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_integer(j[r][c].get<std::string>());
  }
  return m;
}

Json smith_json(const SmithForm& snf) {
  Json j;
  j["diagonal"] = string_row(snf.d.diagonal());
  j["D"] = int_matrix_json(snf.d);
  j["U"] = int_matrix_json(snf.u);
  j["V"] = int_matrix_json(snf.v);
  return j;
}

Json structure_constants_json(const ChevalleyBasis& basis) {
  const RootSystem& roots = basis.roots();
  Json list = Json::array();
  for (int a = 0; a < static_cast<int>(roots.size()); ++a) {
    for (int b = 0; b < static_cast<int>(roots.size()); ++b) {
      const int n = basis.structure_constant(a, b);
      if (n == 0) continue;
      list.push_back(Json::array({roots.root(a), roots.root(b), n}));
    }
  }
  return list;
}

template <class Field>
Json group_element_json(const ChevalleyGroup<Field>& group, const Matrix<Field>& x) {
  Json j;
  j["type"] = group.roots().type().name();
  j["rank"] = group.rank();
  j["field"] = group.field().name();
  Json rows = Json::array();
  for (std::size_t r = 0; r < x.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < x.size(); ++c) row.push_back(group.field().format(x(r, c)));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  return j;
}

template <class Field>
Matrix<Field> group_element_from_json(const ChevalleyGroup<Field>& group, const Json& j) {
  if (j.at("type").get<std::string>() != group.roots().type().name()) {
    throw Error(ErrorKind::FieldMismatch, "element of " + j.at("type").get<std::string>() + " given to " +
                                              group.roots().type().name());
  }
  if (j.at("field").get<std::string>() != group.field().name()) {
    throw Error(ErrorKind::FieldMismatch, j.at("field").get<std::string>() + " vs " + group.field().name());
  }
  const Json& rows = j.at("matrix");
  const std::size_t n = group.dimension();
  if (rows.size() != n) throw Error(ErrorKind::ParseError, "matrix has the wrong size");
  Matrix<Field> x(group.field(), n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw Error(ErrorKind::ParseError, "matrix has the wrong size");
    for (std::size_t c = 0; c < n; ++c) x(r, c) = group.field().parse(rows[r][c].get<std::string>());
  }
  return x;
}

Json certificate_json(const WitnessCertificate& cert) {
  Json j;
  j["type"] = cert.type.name();
  j["rank"] = cert.type.rank;
  j["field"] = cert.field;
  Json automorphism;
  if (cert.rho.empty()) {
    automorphism["rho"] = nullptr;
  } else {
    Json rho = Json::array();
    for (int i : cert.rho) rho.push_back(i + 1);
    automorphism["rho"] = rho;
  }
  automorphism["delta"] = format_field_automorphism(cert.delta);
  automorphism["chi"] = cert.chi.empty() ? Json(nullptr) : Json(cert.chi);
  automorphism["inner"] = cert.inner.empty() ? Json(nullptr) : Json(cert.inner);
  j["automorphism"] = automorphism;
  j["m"] = cert.m;
  j["strategy"] = std::string(1, cert.strategy);
  j["invariant_kind"] = cert.invariant == InvariantKind::trace ? "trace" : "charpoly";
  if (!cert.symbolic.empty()) j["symbolic"] = cert.symbolic;
  Json elements = Json::array();
  for (const auto& e : cert.elements) {
    Json element;
    Json construction;
    if (cert.strategy == 'P') {
      construction["primes"] = string_row(e.primes);
    } else {
      construction["point"] = e.point;
    }
    element["construction"] = construction;
    element["invariant"] = e.invariant;
    elements.push_back(element);
  }
  j["elements"] = elements;
  j["distinct"] = cert.distinct;
  j["seed"] = cert.seed;
  j["candidates"] = cert.candidates;
  j["notes"] = cert.notes;
  return j;
}

WitnessCertificate certificate_from_json(const Json& j) {
  try {
    WitnessCertificate cert;
    cert.type = RootSystemType::parse(j.at("type").get<std::string>());
    cert.field = j.at("field").get<std::string>();
    const Json& automorphism = j.at("automorphism");
    if (!automorphism.at("rho").is_null()) {
      for (const auto& i : automorphism.at("rho")) cert.rho.push_back(i.get<int>() - 1);
    }
    cert.delta = parse_field_automorphism(automorphism.at("delta").get<std::string>());
    if (!automorphism.at("chi").is_null()) cert.chi = automorphism.at("chi").get<std::vector<std::string>>();
    if (!automorphism.at("inner").is_null()) cert.inner = automorphism.at("inner").get<std::string>();
    cert.m = j.at("m").get<int>();
    const auto strategy = j.at("strategy").get<std::string>();
    if (strategy != "P" && strategy != "T") throw Error(ErrorKind::ParseError, "unknown strategy " + strategy);
    cert.strategy = strategy[0];
    cert.invariant = j.at("invariant_kind").get<std::string>() == "charpoly" ? InvariantKind::charpoly
                                                                             : InvariantKind::trace;
    if (j.contains("symbolic")) cert.symbolic = j.at("symbolic").get<std::string>();
    for (const auto& e : j.at("elements")) {
      WitnessElement element;
      const Json& construction = e.at("construction");
      if (construction.contains("primes")) {
        for (const auto& p : construction.at("primes")) element.primes.push_back(parse_integer(p.get<std::string>()));
      }
      if (construction.contains("point")) element.point = construction.at("point").get<std::string>();
      element.invariant = e.at("invariant").get<std::string>();
      cert.elements.push_back(std::move(element));
    }
    cert.distinct = j.at("distinct").get<bool>();
    cert.seed = j.at("seed").get<std::uint64_t>();
    cert.candidates = j.at("candidates").get<std::size_t>();
    cert.notes = j.at("notes").get<std::vector<std::string>>();
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed certificate: ") + e.what());
  }
}

template <class Field>
Json refutation_json(const ChevalleyGroup<Field>& group, const Refutation<Field>& refutation) {
  Json j;
  j["z1"] = format_word(group, refutation.z1);
  j["z2"] = format_word(group, refutation.z2);
  j["psi_xy"] = group.field().format(refutation.psi_xy);
  j["psi_e"] = group.field().format(refutation.psi_e);
  j["attempts"] = refutation.attempts;
  return j;
}

#define CHEVALLEY_IO_INSTANTIATE(F)                                                     \
  template Word<F> parse_word(const ChevalleyGroup<F>&, std::string_view);              \
  template std::string format_word(const ChevalleyGroup<F>&, const Word<F>&);           \
  template Json group_element_json(const ChevalleyGroup<F>&, const Matrix<F>&);         \
  template Matrix<F> group_element_from_json(const ChevalleyGroup<F>&, const Json&);    \
  template Json refutation_json(const ChevalleyGroup<F>&, const Refutation<F>&);

CHEVALLEY_IO_INSTANTIATE(RationalField)
CHEVALLEY_IO_INSTANTIATE(QuadraticField)
CHEVALLEY_IO_INSTANTIATE(RationalFunctionField)

#undef CHEVALLEY_IO_INSTANTIATE

}  // namespace chevalley
