#include "chevalley/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chevalley/error.hpp"
#include "chevalley/io.hpp"
#include "chevalley/twisted.hpp"

namespace chevalley {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Request {
  std::string type;
  std::string family;
  int rank = 0;
  std::string ranks;
  std::string field = "Q";
  std::string format = "json";
  std::uint64_t seed = 0;

  std::string rho;
  std::string delta = "id";
  std::string diag;
  std::string inner;

  std::string expr;
  std::string times;
  bool invert = false;
  std::string chi;

  std::size_t n = 2;
  std::string strategy = "P";
  std::size_t budget = 0;
  std::string invariant = "trace";
  std::size_t length = 3;
  std::string certificate;
};

RootSystemType request_type(const Request& r) {
  if (!r.type.empty()) return RootSystemType::parse(r.type);
  if (r.family.empty() || r.rank == 0) throw UsageError("give --type (e.g. A3) or both --family and --rank");
  RootSystemType type{parse_family(r.family), r.rank};
  type.validate();
  return type;
}

std::shared_ptr<const ChevalleyBasis> request_basis(const Request& r) {
  return std::make_shared<const ChevalleyBasis>(RootSystem(request_type(r)));
}

// Aligned plain-text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) line += "  ";
        line += row[c] + std::string(width[c] - row[c].size(), ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string diag_string(const std::vector<Integer>& d) {
  std::vector<std::string> parts;
  for (const auto& x : d) parts.push_back(x.get_str());
  return "diag(" + join(parts, ",") + ")";
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--ranks expects a..b, got '" + text + "'");
  }
}

template <class Field>
AutomorphismParts<Field> request_parts(const Request& r, const ChevalleyGroup<Field>& group) {
  AutomorphismParts<Field> parts;
  if (!r.rho.empty()) {
    for (const auto& s : split_list(r.rho)) {
      int image = 0;
      try {
        image = std::stoi(s);
      } catch (const std::exception&) {
        throw UsageError("--rho expects comma-separated simple-root indices, got '" + r.rho + "'");
      }
      parts.rho.push_back(image - 1);
    }
  }
  parts.delta = parse_field_automorphism(r.delta);
  if (!r.diag.empty()) {
    Character<Field> chi;
    for (const auto& s : split_list(r.diag)) chi.values.push_back(group.field().parse(s));
    parts.chi = chi;
  }
  parts.inner = parse_word(group, r.inner);
  return parts;
}

template <class Field>
void write_matrix_table(std::ostream& out, const ChevalleyGroup<Field>& group, const Matrix<Field>& x) {
  std::vector<std::string> header{""};
  for (std::size_t c = 0; c < x.size(); ++c) header.push_back(group.basis().label(static_cast<int>(c)));
  Table table(header);
  for (std::size_t row = 0; row < x.size(); ++row) {
    std::vector<std::string> line{group.basis().label(static_cast<int>(row))};
    for (std::size_t c = 0; c < x.size(); ++c) line.push_back(group.field().format(x(row, c)));
    table.add(line);
  }
  table.print(out);
}

void cmd_roots(const Request& r, std::ostream& out) {
  const RootSystem roots(request_type(r));
  if (r.format == "json") return emit(out, root_system_json(roots));
  Table table({"index", "root", "height", "supported on I"});
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const auto& root = roots.root(static_cast<int>(k));
    table.add({std::to_string(k), format_root(root), std::to_string(height(root)),
               roots.supported_on_index_set(static_cast<int>(k)) ? "yes" : "no"});
  }
  table.print(out);
  out << roots.type().name() << ": " << roots.size() << " roots, " << roots.positive_count() << " positive\n";
}

void cmd_cartan(const Request& r, std::ostream& out) {
  const RootSystem roots(request_type(r));
  const IntMatrix a(roots.cartan());
  const Integer det = determinant(a);
  if (r.format == "json") {
    Json j;
    j["type"] = roots.type().name();
    j["cartan_matrix"] = roots.cartan();
    j["determinant"] = det.get_str();
    Json lengths = Json::array();
    for (const auto& x : roots.simple_squared_lengths()) lengths.push_back(x.to_string());
    j["squared_lengths"] = lengths;
    return emit(out, j);
  }
  out << a.to_string() << "determinant " << det.get_str() << '\n';
}

void cmd_smith(const Request& r, std::ostream& out) {
  const RootSystem roots(request_type(r));
  const SmithForm snf = smith_normal_form(IntMatrix(roots.cartan()));
  if (r.format == "json") {
    Json j;
    j["type"] = roots.type().name();
    j["smith"] = smith_json(snf);
    return emit(out, j);
  }
  out << diag_string(snf.d.diagonal()) << "\nU\n" << snf.u.to_string() << "V\n" << snf.v.to_string();
}

void cmd_basis(const Request& r, std::ostream& out) {
  const auto basis = request_basis(r);
  if (r.format == "json") {
    Json j;
    j["type"] = basis->roots().type().name();
    j["dimension"] = basis->dimension();
    j["structure_constants"] = structure_constants_json(*basis);
    return emit(out, j);
  }
  Table table({"alpha", "beta", "N"});
  const auto& roots = basis->roots();
  for (int a = 0; a < static_cast<int>(roots.size()); ++a) {
    for (int b = 0; b < static_cast<int>(roots.size()); ++b) {
      const int n = basis->structure_constant(a, b);
      if (n != 0) table.add({format_root(roots.root(a)), format_root(roots.root(b)), std::to_string(n)});
    }
  }
  table.print(out);
  out << "dimension " << basis->dimension() << '\n';
}

template <class Field>
void cmd_element(const Request& r, const ChevalleyGroup<Field>& group, std::ostream& out) {
  Matrix<Field> x = group.evaluate(parse_word(group, r.expr));
  if (!r.times.empty()) x = x * group.evaluate(parse_word(group, r.times));
  if (r.invert) x = x.inverse();
  if (r.format == "json") return emit(out, group_element_json(group, x));
  write_matrix_table(out, group, x);
}

template <class Field>
void cmd_decompose(const Request& r, const ChevalleyGroup<Field>& group, std::ostream& out) {
  Character<Field> chi;
  for (const auto& s : split_list(r.chi)) chi.values.push_back(group.field().parse(s));
  if (chi.values.size() != static_cast<std::size_t>(group.rank())) {
    throw UsageError("--chi needs " + std::to_string(group.rank()) + " values");
  }
  const auto d = group.decompose_torus(chi);
  const Field& f = group.field();
  auto strings = [&](const std::vector<typename Field::Element>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(f.format(x));
    return s;
  };
  bool fixes = true;
  for (int i : group.roots().index_set()) {
    if (!d.h2.character.values[static_cast<std::size_t>(i)].is_one()) fixes = false;
  }
  const bool product = d.h1.matrix * d.h2.matrix == group.torus_from_character(chi).matrix;
  if (r.format == "json") {
    Json j;
    j["type"] = group.roots().type().name();
    j["field"] = f.name();
    j["chi"] = strings(chi.values);
    j["t"] = strings(d.t);
    j["h1"] = strings(d.h1.character.values);
    j["h2"] = strings(d.h2.character.values);
    Json index_set = Json::array();
    for (int i : group.roots().index_set()) index_set.push_back(i + 1);
    j["index_set"] = index_set;
    j["h2_fixes_index_set"] = fixes;
    j["h_equals_h1_h2"] = product;
    return emit(out, j);
  }
  out << "t   = (" << join(strings(d.t), ", ") << ")\n"
      << "h1  = (" << join(strings(d.h1.character.values), ", ") << ")\n"
      << "h2  = (" << join(strings(d.h2.character.values), ", ") << ")\n"
      << "h2 fixes x_{alpha_i}, i in I: " << (fixes ? "yes" : "no") << "\n"
      << "h = h1*h2: " << (product ? "yes" : "no") << '\n';
}

void cmd_ktable(const Request& r, std::ostream& out) {
  if (r.family.empty()) throw UsageError("ktable needs --family");
  const Family family = parse_family(r.family);
  auto [low, high] = r.ranks.empty() ? std::pair{r.rank, r.rank} : parse_range(r.ranks);
  if (low <= 0 || high < low) throw UsageError("--ranks must be a nonempty range of positive ranks");
  Json rows = Json::array();
  Table table({"type", "|Phi|", "k", "formula", "match"});
  for (int l = low; l <= high; ++l) {
    const RootSystemType type{family, l};
    type.validate();
    const RootSystem roots(type);
    const int k = count_k(roots);
    const int formula = k_formula(type);
    table.add({type.name(), std::to_string(roots.size()), std::to_string(k), std::to_string(formula),
               k == formula ? "yes" : "no"});
    Json row;
    row["type"] = type.name();
    row["roots"] = roots.size();
    row["k"] = k;
    row["formula"] = formula;
    row["match"] = k == formula;
    rows.push_back(row);
  }
  if (r.format == "json") return emit(out, rows);
  table.print(out);
}

void cmd_degrees(const Request& r, std::ostream& out) {
  const RootSystem roots(request_type(r));
  const TorusDegrees d = torus_degrees(roots);
  if (r.format == "json") {
    Json j;
    j["type"] = roots.type().name();
    Json list = Json::array();
    for (std::size_t k = 0; k < roots.size(); ++k) {
      list.push_back(Json::array({roots.root(static_cast<int>(k)), d.degree[k]}));
    }
    j["degrees"] = list;
    j["max_abs"] = d.max_abs;
    j["argmax"] = roots.root(d.argmax);
    j["listed"] = d.listed;
    j["listed_degree"] = d.listed_degree;
    j["listed_attains_max"] = d.listed_attains_max;
    j["other_maximizers"] = d.other_maximizers;
    return emit(out, j);
  }
  Table table({"root", "degree"});
  for (std::size_t k = 0; k < roots.size(); ++k) {
    table.add({format_root(roots.root(static_cast<int>(k))), std::to_string(d.degree[k])});
  }
  table.print(out);
  out << "max |d| = " << d.max_abs << " at " << format_root(roots.root(d.argmax)) << "\n"
      << "listed root " << format_root(d.listed) << " has d = " << d.listed_degree
      << (d.listed_attains_max ? " (attains the maximum)" : " (does not attain the maximum)") << '\n';
}

template <class Field>
void cmd_witness(const Request& r, const ChevalleyGroup<Field>& group, std::ostream& out) {
  WitnessOptions options;
  options.n = r.n;
  if (r.strategy != "P" && r.strategy != "T") throw UsageError("--strategy must be P or T");
  options.strategy = r.strategy[0];
  options.budget = r.budget == 0 ? 1000 : r.budget;
  options.seed = r.seed;
  if (r.invariant != "trace" && r.invariant != "charpoly") throw UsageError("--invariant must be trace or charpoly");
  options.invariant = r.invariant == "trace" ? InvariantKind::trace : InvariantKind::charpoly;
  const auto phi = make_automorphism(group, request_parts(r, group));
  const auto cert = r_infinity_witness(group, phi, options);
  if (r.format == "json") return emit(out, certificate_json(cert));
  out << cert.type.name() << " over " << cert.field << ", m = " << cert.m << ", strategy " << cert.strategy << '\n';
  if (!cert.symbolic.empty()) out << "psi(g(T)) = " << cert.symbolic << '\n';
  Table table({"#", "construction", "invariant"});
  for (std::size_t i = 0; i < cert.elements.size(); ++i) {
    const auto& e = cert.elements[i];
    std::string construction = e.point;
    if (cert.strategy == 'P') {
      std::vector<std::string> primes;
      for (const auto& p : e.primes) primes.push_back(p.get_str());
      construction = join(primes, ",");
    }
    table.add({std::to_string(i + 1), construction, e.invariant});
  }
  table.print(out);
  for (const auto& note : cert.notes) out << "note: " << note << '\n';
}

template <class Field>
void cmd_refute(const Request& r, const ChevalleyGroup<Field>& group, std::ostream& out) {
  const auto phi = reduce_mod_inner(group, make_automorphism(group, request_parts(r, group)));
  const std::size_t budget = r.budget == 0 ? 10000 : r.budget;
  const auto found = unit_class_refutation(group, phi, budget, r.seed, r.length);
  Json j;
  j["type"] = group.roots().type().name();
  j["field"] = group.field().name();
  j["budget"] = budget;
  j["seed"] = r.seed;
  j["refutation"] = found ? refutation_json(group, *found) : Json(nullptr);
  if (r.format == "json") return emit(out, j);
  if (!found) {
    out << "NoRefutation after " << budget << " candidates\n";
    return;
  }
  out << "z1 = " << j["refutation"]["z1"].get<std::string>() << "\n"
      << "z2 = " << j["refutation"]["z2"].get<std::string>() << "\n"
      << "psi(xy) = " << found->psi_xy.to_string() << " != psi(e) = " << found->psi_e.to_string() << '\n';
}

bool cmd_verify(const Request& r, std::ostream& out) {
  std::string text;
  if (r.certificate == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(r.certificate);
    if (!in) throw UsageError("cannot read certificate file '" + r.certificate + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("certificate is not JSON: ") + e.what());
  }
  const auto report = verify_certificate(certificate_from_json(j));
  if (r.format == "json") {
    Json result;
    result["valid"] = report.valid;
    result["problems"] = report.problems;
    emit(out, result);
  } else {
    out << (report.valid ? "certificate valid" : "certificate INVALID") << '\n';
    for (const auto& p : report.problems) out << "  " << p << '\n';
  }
  return report.valid;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chevalley groups, torus decompositions and twisted-conjugacy certificates", "chevalley"};
  app.require_subcommand(1);
  Request r;

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", r.type, "root system type such as A3 or E6");
    sub->add_option("--family", r.family, "family letter A..G");
    sub->add_option("--rank", r.rank, "rank");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", r.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_field = [&](CLI::App* sub) { sub->add_option("--field", r.field, "Q, Q(sqrt(d)) or Q(T)"); };
  auto add_automorphism = [&](CLI::App* sub) {
    sub->add_option("--rho", r.rho, "diagram symmetry as images of 1..l, e.g. 2,1");
    sub->add_option("--delta", r.delta, "field automorphism: id, conj, mobius(a,b,c,d)");
    sub->add_option("--diag", r.diag, "torus character values chi(alpha_1),...,chi(alpha_l)");
    sub->add_option("--inner", r.inner, "inner part as a generator word");
    sub->add_option("--seed", r.seed, "random seed");
  };

  auto* roots = app.add_subcommand("roots", "enumerate the roots");
  add_type(roots);
  add_format(roots);
  auto* cartan = app.add_subcommand("cartan", "Cartan matrix and determinant");
  add_type(cartan);
  add_format(cartan);
  auto* smith = app.add_subcommand("smith", "Smith normal form of the Cartan matrix");
  add_type(smith);
  add_format(smith);
  auto* basis = app.add_subcommand("basis", "structure constants of the Chevalley basis");
  add_type(basis);
  add_format(basis);
  auto* element = app.add_subcommand("element", "build, multiply or invert a group element");
  add_type(element);
  add_format(element);
  add_field(element);
  element->add_option("--expr", r.expr, "generator word, e.g. \"x([1,0];2) h([0,1];3)\"")->required();
  element->add_option("--times", r.times, "right factor as a generator word");
  element->add_flag("--invert", r.invert, "invert the result");
  auto* decompose = app.add_subcommand("decompose", "torus decomposition h = h1*h2");
  add_type(decompose);
  add_format(decompose);
  add_field(decompose);
  decompose->add_option("--chi", r.chi, "character values chi(alpha_1),...,chi(alpha_l)")->required();
  auto* ktable = app.add_subcommand("ktable", "k counts across a rank range");
  ktable->add_option("--family", r.family, "family letter A..G")->required();
  ktable->add_option("--ranks", r.ranks, "rank range a..b");
  ktable->add_option("--rank", r.rank, "single rank");
  add_format(ktable);
  auto* degrees = app.add_subcommand("degrees", "torus degree table of g(T)");
  add_type(degrees);
  add_format(degrees);
  auto* witness = app.add_subcommand("witness", "certificate of n pairwise non-conjugate elements");
  add_type(witness);
  add_format(witness);
  add_field(witness);
  add_automorphism(witness);
  witness->add_option("--n", r.n, "number of elements");
  witness->add_option("--strategy", r.strategy, "P (primes) or T (g(T) evaluations)");
  witness->add_option("--budget", r.budget, "candidate budget (default 1000)");
  witness->add_option("--invariant", r.invariant, "trace or charpoly");
  auto* refute = app.add_subcommand("refute", "search for x, y in [e]_phi with xy outside it");
  add_type(refute);
  add_format(refute);
  add_field(refute);
  add_automorphism(refute);
  refute->add_option("--budget", r.budget, "candidate budget (default 10000)");
  refute->add_option("--length", r.length, "generator word length");
  auto* verify = app.add_subcommand("verify", "recheck a witness certificate");
  add_format(verify);
  verify->add_option("--certificate", r.certificate, "certificate file, or - for stdin")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    auto with_group = [&](auto&& body) {
      const auto basis_ptr = request_basis(r);
      std::visit(
          [&](const auto& field) {
            using Field = std::decay_t<decltype(field)>;
            const ChevalleyGroup<Field> group(basis_ptr, field);
            body(group);
          },
          parse_field(r.field));
    };
    if (roots->parsed()) cmd_roots(r, out);
    if (cartan->parsed()) cmd_cartan(r, out);
    if (smith->parsed()) cmd_smith(r, out);
    if (basis->parsed()) cmd_basis(r, out);
    if (element->parsed()) with_group([&](const auto& g) { cmd_element(r, g, out); });
    if (decompose->parsed()) with_group([&](const auto& g) { cmd_decompose(r, g, out); });
    if (ktable->parsed()) cmd_ktable(r, out);
    if (degrees->parsed()) cmd_degrees(r, out);
    if (witness->parsed()) with_group([&](const auto& g) { cmd_witness(r, g, out); });
    if (refute->parsed()) with_group([&](const auto& g) { cmd_refute(r, g, out); });
    if (verify->parsed() && !cmd_verify(r, out)) return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace chevalley
