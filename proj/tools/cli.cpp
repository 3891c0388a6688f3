#include "cli.hpp"

#include "reproduce.hpp"

#include "schurlab/schurlab.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace schurlab::cli {

namespace {

// Bad paths and unreadable files; reported with exit code 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  Json inputs = Json::array();
  Json outputs = Json::array();

  std::string read(const std::string& path) {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw IoError("cannot read " + path);
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    inputs.push_back({{"path", path}, {"sha256", sha256_hex(text)}});
    return text;
  }

  // Writes to `path`, or to stdout when path is empty.
  void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
      out << text;
    } else {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw IoError("cannot write " + path);
      f << text;
      if (!f) throw IoError("cannot write " + path);
    }
    outputs.push_back({{"path", path.empty() ? "-" : path}, {"sha256", sha256_hex(text)}});
  }
};

// Objects and arrays of objects are laid out one member per line; everything
// else (coordinate lists, tensors, tables) stays on a single line.
void format_json(const Json& j, int indent, std::ostream& os) {
  const bool expand = j.is_object() || (j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& e) {
                                         return e.is_object();
                                       }));
  if (!expand || j.empty()) {
    os << j.dump();
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  os << (j.is_object() ? "{\n" : "[\n");
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    os << (first ? "" : ",\n") << pad;
    if (j.is_object()) os << Json(it.key()).dump() << ": ";
    format_json(*it, indent + 2, os);
    first = false;
  }
  os << '\n' << std::string(static_cast<std::size_t>(indent), ' ') << (j.is_object() ? '}' : ']');
}

std::string format_json(const Json& j) {
  std::ostringstream os;
  format_json(j, 0, os);
  os << '\n';
  return os.str();
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  return parts;
}

long parse_integer(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos, 0);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigurationError("bad " + what + ": '" + s + "'");
}

// "(0,2,0);(0,0,2)" -> vectors over Z_4.
std::vector<ZmVector> parse_w(const std::string& text, int n) {
  std::vector<ZmVector> gens;
  for (std::string item : split(text, ';')) {
    if (item.empty()) continue;
    if (item.front() == '(' && item.back() == ')') item = item.substr(1, item.size() - 2);
    std::vector<int> coords;
    for (const auto& c : split(item, ',')) coords.push_back(static_cast<int>(parse_integer(c, "W coordinate")));
    if (static_cast<int>(coords.size()) != n) {
      throw ConfigurationError("W generator (" + item + ") needs " + std::to_string(n) + " coordinates");
    }
    gens.emplace_back(4, Eigen::Map<const ZRowVector>(coords.data(), static_cast<Eigen::Index>(coords.size())));
  }
  return gens;
}

Slope parse_slope(const std::string& s) {
  if (s == "inf") return std::nullopt;
  const long v = parse_integer(s, "slope");
  if (v < 0) throw ConfigurationError("bad slope: '" + s + "'");
  return static_cast<GF2n::Element>(v);
}

std::string summary(const AssociationScheme& s) {
  std::ostringstream os;
  os << "|X| = " << s.num_points() << ", valencies " << join(s.valencies())
     << ", symmetric: " << (s.is_symmetric() ? "yes" : "no");
  return os.str();
}

AssociationScheme load_scheme(Context& ctx, const std::string& path) {
  const std::string text = ctx.read(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
  try {
    return scheme_from_partition(scheme_file_from_json(j).partition);
  } catch (const std::invalid_argument& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::string render(const GaussMatrix& m) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.rows()));
  std::size_t width = 1;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      cells[static_cast<std::size_t>(r)].push_back(to_string(m(r, c)));
      width = std::max(width, cells[static_cast<std::size_t>(r)].back().size());
    }
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) os << "  " << std::setw(static_cast<int>(width)) << row[c];
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

struct ConstructOptions {
  int n = 0;
  std::string p1;
  std::string p3;
  std::string w;
  bool all_w = false;
  std::string poly;
  std::string out;
  bool force = false;
};

std::optional<Gf2Poly> parse_poly(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const long v = parse_integer(s, "polynomial");
  if (v <= 1) throw ConfigurationError("bad polynomial: '" + s + "'");
  return static_cast<Gf2Poly>(v);
}

int construct_z2(Context& ctx, const ConstructOptions& o) {
  if (o.n < 1) throw ConfigurationError("--n must be at least 1");
  if (o.n > 5 && !o.force) throw ConfigurationError("--n above 5 needs --force");
  if (o.p1.empty() != o.p3.empty()) throw ConfigurationError("--p1 and --p3 go together");

  const auto poly = parse_poly(o.poly);
  if (poly && !is_primitive_poly(*poly, o.n)) throw ConfigurationError("polynomial is not primitive of degree --n");
  const GF2n field = poly ? GF2n(o.n, *poly) : GF2n(o.n);

  LineSpread spread = make_line_spread(field);
  if (!o.p1.empty()) {
    LineAssignment a;
    for (const auto& s : split(o.p1, ',')) a.p1.push_back(parse_slope(s));
    a.p3 = parse_slope(o.p3);
    try {
      spread = make_line_spread(field, a);
    } catch (const std::invalid_argument& e) {
      throw ConfigurationError(e.what());
    }
  }

  const AssociationScheme s = scheme_from_partition(lines_z2(spread));
  Json doc = scheme_to_json(s);
  Json p1 = Json::array();
  Json p3;
  for (std::size_t i = 0; i < spread.slopes.size(); ++i) {
    if (spread.part[i] == 1) p1.push_back(slope_to_string(spread.slopes[i]));
    if (spread.part[i] == 3) p3 = slope_to_string(spread.slopes[i]);
  }
  doc["construction"] = {{"family", "z2"}, {"n", o.n}, {"poly", field.modulus()}, {"p1", p1}, {"p3", p3}};
  ctx.emit(format_json(doc), o.out);
  (o.out.empty() ? ctx.err : ctx.out) << summary(s) << '\n';
  return kExitOk;
}

std::string w_to_string(const std::vector<ZmVector>& gens) {
  std::string s;
  for (const auto& g : gens) s += (s.empty() ? "" : ";") + g.to_string();
  return s;
}

int construct_z4(Context& ctx, const ConstructOptions& o) {
  if (o.n < 1) throw ConfigurationError("--n must be at least 1");
  if (o.n > 4 && !o.force) throw ConfigurationError("--n above 4 needs --force");
  if (o.all_w && !o.w.empty()) throw ConfigurationError("--w and --all-w are exclusive");

  const auto poly = parse_poly(o.poly);
  const CompanionLift lift = poly ? lift_primitive(o.n, *poly) : lift_primitive(o.n);

  std::vector<OrbitSpec> specs;
  if (o.all_w) {
    specs = enumerate_W(o.n, lift);
  } else if (!o.w.empty()) {
    try {
      specs.push_back(make_orbit_spec(o.n, parse_w(o.w, o.n), lift));
    } catch (const std::invalid_argument& e) {
      throw ConfigurationError(std::string("invalid W: ") + e.what());
    }
  } else {
    specs.push_back(enumerate_W(o.n, lift).front());
  }

  Json docs = Json::array();
  std::ostringstream summaries;
  for (const OrbitSpec& spec : specs) {
    const AssociationScheme s = scheme_from_partition(orbits_z4(spec));
    Json doc = scheme_to_json(s);
    doc["construction"] = {{"family", "z4"},
                           {"n", o.n},
                           {"poly", lift.primitive_poly},
                           {"lift", matrix_to_json(lift.P)},
                           {"w", w_to_string(spec.w_generators)}};
    docs.push_back(std::move(doc));
    summaries << "W = " << (spec.w_generators.empty() ? "0" : w_to_string(spec.w_generators)) << ": " << summary(s)
              << '\n';
  }
  ctx.emit(format_json(o.all_w ? docs : docs.front()), o.out);
  (o.out.empty() ? ctx.err : ctx.out) << summaries.str();
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ReportOptions {
  std::string scheme;
  bool json = false;
  std::string out;
  std::uint64_t seed = 1;
  int samples = 64;
  bool gens = false;
};

struct Check {
  std::string name;
  std::vector<std::string> failures;
};

Json checks_to_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"ok", c.failures.empty()}, {"failures", c.failures}});
  return arr;
}

std::string checks_to_text(const std::vector<Check>& checks) {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.failures.empty() ? "ok    " : "FAIL  ") << c.name << '\n';
    for (const auto& f : c.failures) os << "      " << f << '\n';
  }
  return os.str();
}

bool all_ok(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.failures.empty(); });
}

int cmd_verify(Context& ctx, const ReportOptions& o) {
  const std::string text = ctx.read(o.scheme);
  const SchemeFile file = [&] {
    try {
      return scheme_file_from_json(Json::parse(text));
    } catch (const std::exception& e) {
      throw IoError(o.scheme + ": " + e.what());
    }
  }();

  std::vector<Check> checks;
  const SchurValidation v = validate_schur(file.partition);
  checks.push_back({"schur-ring", {}});
  if (!v.ok()) checks.back().failures.push_back(to_string(v.failure->kind) + ": " + v.failure->message);

  if (v.ok()) {
    const AssociationScheme s = scheme_from_partition(file.partition);
    Check stored{"stored-parameters", {}};
    if (file.valencies && *file.valencies != s.valencies()) stored.failures.push_back("valencies differ from the classes");
    if (file.pairing && *file.pairing != s.pairing()) stored.failures.push_back("pairing differs from the classes");
    if (file.p && !(*file.p == s.p())) stored.failures.push_back("intersection numbers differ from the classes");
    checks.push_back(stored);

    checks.push_back({"commutative", {}});
    if (!s.is_commutative()) checks.back().failures.push_back("p_ij^k != p_ji^k for some i, j, k");

    checks.push_back({"representatives", {}});
    try {
      verify_representatives(s, o.samples, o.seed);
    } catch (const SchemeError& e) {
      checks.back().failures.push_back(e.what());
    }

    if (s.is_commutative()) {
      try {
        const CharacterTable t = character_table(s);
        checks.push_back({"orthogonality", verify_orthogonality(t).failures});
        checks.push_back({"kernel-lemma", verify_kernel_lemma(s, t).failures});
      } catch (const SchemeError& e) {
        checks.push_back({"character-table", {e.what()}});
      }
    }
  }

  const bool ok = all_ok(checks);
  if (o.json) {
    ctx.emit(format_json(Json{{"ok", ok}, {"checks", checks_to_json(checks)}}), o.out);
  } else {
    ctx.emit(checks_to_text(checks), o.out);
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_chartable(Context& ctx, const ReportOptions& o) {
  const AssociationScheme s = load_scheme(ctx, o.scheme);
  const CharacterTable t = character_table(s);
  const std::vector<Check> checks = {{"orthogonality", verify_orthogonality(t).failures},
                                     {"kernel-lemma", verify_kernel_lemma(s, t).failures}};
  const auto tmpl = template_match(t);
  const auto dual = self_dual_check(t);

  if (o.json) {
    Json doc = character_table_to_json(t);
    doc["template"] = tmpl ? Json(to_string(*tmpl)) : Json(nullptr);
    doc["self_dual"] = dual ? Json(*dual) : Json(nullptr);
    doc["checks"] = checks_to_json(checks);
    ctx.emit(format_json(doc), o.out);
  } else {
    std::ostringstream os;
    os << render(t.entries);
    os << "valencies: " << join(t.valencies, " ") << '\n';
    os << "multiplicities: " << join(t.multiplicities, " ") << '\n';
    os << "template: " << (tmpl ? to_string(*tmpl) : "none") << '\n';
    os << "self-dual: ";
    if (dual) {
      os << "yes (row order";
      for (int r : *dual) os << ' ' << r;
      os << ")\n";
    } else {
      os << "no\n";
    }
    os << checks_to_text(checks);
    ctx.emit(os.str(), o.out);
  }
  return all_ok(checks) ? kExitOk : kExitCheckFailed;
}

int cmd_pgd(Context& ctx, const ReportOptions& o) {
  const AssociationScheme s = load_scheme(ctx, o.scheme);
  const auto suite = pgd_suite(s);
  bool ok = true;
  Json arr = Json::array();
  std::ostringstream os;
  os << std::left << std::setw(10) << "relation" << std::setw(8) << "k" << std::setw(10) << "alpha" << std::setw(8)
     << "beta"
     << "verdict\n";
  for (const auto& e : suite) {
    std::int64_t k = 0;
    for (int c : e.class_set) k += s.valencies()[static_cast<std::size_t>(c)];
    ok = ok && e.certificate.has_value();
    arr.push_back({{"relation", e.label}, {"classes", e.class_set}, {"k", k},
                   {"certificate", pgd_certificate_to_json(e.certificate)}});
    const std::string alpha =
        e.certificate ? (e.certificate->alpha ? std::to_string(*e.certificate->alpha) : "vacuous") : "-";
    const std::string beta = e.certificate ? std::to_string(e.certificate->beta) : "-";
    os << std::setw(10) << e.label << std::setw(8) << k << std::setw(10) << alpha << std::setw(8) << beta
       << (e.certificate ? "partial geometric" : "not partial geometric") << '\n';
  }
  ctx.emit(o.json ? format_json(Json{{"ok", ok}, {"relations", arr}}) : os.str(), o.out);
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_aut(Context& ctx, const ReportOptions& o) {
  const AssociationScheme s = load_scheme(ctx, o.scheme);
  const AutGroupResult r = automorphism_group(s);
  if (o.json) {
    Json doc = {{"order", r.order.str()}, {"base", r.base}, {"orbit_lengths", r.orbit_lengths}};
    if (o.gens) doc["generators"] = r.generators;
    ctx.emit(format_json(doc), o.out);
  } else {
    std::ostringstream os;
    os << "order: " << r.order.str() << '\n';
    os << "base:";
    for (auto b : r.base) os << ' ' << b;
    os << "\norbit lengths:";
    for (auto l : r.orbit_lengths) os << ' ' << l;
    os << '\n';
    if (o.gens) {
      for (const auto& g : r.generators) {
        os << '[';
        for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
        os << "]\n";
      }
    }
    ctx.emit(os.str(), o.out);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_reproduce(Context& ctx, int jobs, bool json, const std::string& out) {
  const auto rows = reproduce_all(jobs);
  const auto tmpl_str = [](const std::optional<XuTemplate>& t) { return t ? to_string(*t) : std::string("none"); };

  const ReproRow* first_bad = nullptr;
  for (const auto& r : rows) {
    if (!r.ok() && !first_bad) first_bad = &r;
  }

  if (json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json pgd = Json::array();
      for (const auto& e : r.pgd) pgd.push_back({{"relation", e.label}, {"certificate", pgd_certificate_to_json(e.certificate)}});
      arr.push_back({{"construction", r.construction},
                     {"n", r.n},
                     {"w", r.w},
                     {"points", r.points},
                     {"symmetric", r.symmetric},
                     {"template", r.matched ? Json(to_string(*r.matched)) : Json(nullptr)},
                     {"expected_template", tmpl_str(r.expected)},
                     {"self_dual", r.duality ? Json(*r.duality) : Json(nullptr)},
                     {"pgd", pgd},
                     {"aut_order", r.aut_order ? Json(*r.aut_order) : Json(nullptr)},
                     {"expected_aut_order", r.expected_aut_order ? Json(*r.expected_aut_order) : Json(nullptr)},
                     {"failures", r.failures}});
    }
    ctx.emit(format_json(Json{{"ok", first_bad == nullptr}, {"rows", arr}}), out);
  } else {
    std::ostringstream os;
    os << std::left << std::setw(5) << "fam" << std::setw(3) << "n" << std::setw(18) << "W" << std::setw(6) << "|X|"
       << std::setw(5) << "sym" << std::setw(15) << "template" << std::setw(10) << "self-dual" << std::setw(10) << "PGD"
       << std::setw(8) << "|Aut|"
       << "status\n";
    for (const auto& r : rows) {
      const bool pgd_ok = !r.pgd.empty() && std::all_of(r.pgd.begin(), r.pgd.end(), [](const PgdSuiteEntry& e) {
        return e.certificate.has_value();
      });
      os << std::setw(5) << r.construction << std::setw(3) << r.n << std::setw(18) << (r.w.empty() ? "-" : r.w)
         << std::setw(6) << r.points << std::setw(5) << (r.symmetric ? "yes" : "no") << std::setw(15)
         << tmpl_str(r.matched) << std::setw(10) << (r.duality ? "yes" : "no") << std::setw(10)
         << (pgd_ok ? "3/3" : "fail") << std::setw(8) << r.aut_order.value_or("-") << (r.ok() ? "ok" : "FAIL") << '\n';
    }
    if (first_bad) {
      os << "first failed claim: " << first_bad->construction << " n=" << first_bad->n
         << (first_bad->w.empty() ? "" : " W=" + first_bad->w) << ": " << first_bad->failures.front() << '\n';
    } else {
      os << "all claims hold\n";
    }
    ctx.emit(os.str(), out);
  }
  return first_bad ? kExitCheckFailed : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-4 self-dual association schemes over abelian 2-groups", "schurlab"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  std::string manifest;
  app.add_option("--manifest", manifest, "Write a run manifest (inputs, outputs, hashes) to FILE");

  ConstructOptions co;
  CLI::App* construct = app.add_subcommand("construct", "Build a scheme and write it as JSON");
  construct->require_subcommand(1);
  CLI::App* z2 = construct->add_subcommand("z2", "Line partition of Z_2^{2n}");
  CLI::App* z4 = construct->add_subcommand("z4", "Orbit partition of Z_4^n");
  for (CLI::App* sub : {z2, z4}) {
    sub->add_option("--n", co.n, "Field degree")->required();
    sub->add_option("--poly", co.poly, "Primitive polynomial as a bit mask, e.g. 0xb");
    sub->add_option("--out", co.out, "Output file (default stdout)");
    sub->add_flag("--force", co.force, "Allow n beyond the default cap");
  }
  z2->add_option("--p1", co.p1, "Slopes of the lines in P1, comma separated ('inf' for the vertical line)");
  z2->add_option("--p3", co.p3, "Slope of the line in P3");
  z4->add_option("--w", co.w, "Generators of W, e.g. \"(0,2,0);(0,0,2)\"");
  z4->add_flag("--all-w", co.all_w, "Emit a JSON array with one scheme per index-2 subgroup W");

  ReportOptions ro;
  const auto add_report = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--scheme", ro.scheme, "Scheme JSON file ('-' for stdin)")->required();
    sub->add_flag("--json", ro.json, "Machine-readable output");
    sub->add_option("--out", ro.out, "Output file (default stdout)");
    return sub;
  };
  CLI::App* verify = add_report("verify", "Check every scheme axiom of a scheme file");
  verify->add_option("--seed", ro.seed, "Seed for the sampled representative check");
  verify->add_option("--samples", ro.samples, "Number of sampled pairs")->check(CLI::NonNegativeNumber);
  CLI::App* chartable = add_report("chartable", "Character table, template and self-duality");
  CLI::App* pgd = add_report("pgd", "Partial geometric designs of R1, R2 and R0 u R3");
  CLI::App* aut = add_report("aut", "Order of the automorphism group");
  aut->add_flag("--gens", ro.gens, "Also print a strong generating set");

  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool repro_json = false;
  std::string repro_out;
  CLI::App* reproduce = app.add_subcommand("reproduce-paper", "Rebuild every published instance and check its claims");
  reproduce->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  reproduce->add_flag("--json", repro_json, "Machine-readable output");
  reproduce->add_option("--out", repro_out, "Output file (default stdout)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? kExitOk : kExitUsage;
  }

  Context ctx{out, err};
  int code = kExitOk;
  try {
    if (z2->parsed()) code = construct_z2(ctx, co);
    else if (z4->parsed()) code = construct_z4(ctx, co);
    else if (verify->parsed()) code = cmd_verify(ctx, ro);
    else if (chartable->parsed()) code = cmd_chartable(ctx, ro);
    else if (pgd->parsed()) code = cmd_pgd(ctx, ro);
    else if (aut->parsed()) code = cmd_aut(ctx, ro);
    else if (reproduce->parsed()) code = cmd_reproduce(ctx, jobs, repro_json, repro_out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    // Construction-time assertions are fatal; in the report commands a scheme
    // that fails to build is a failed check.
    err << "error: " << e.what() << '\n';
    return construct->parsed() ? kExitConstruction : kExitCheckFailed;
  }

  if (!manifest.empty()) {
    Json m = {{"version", kVersion},
              {"command", args},
              {"inputs", ctx.inputs},
              {"outputs", ctx.outputs},
              {"exit_code", code}};
    std::ofstream f(manifest, std::ios::binary);
    if (!f || !(f << format_json(m))) {
      err << "error: cannot write " << manifest << '\n';
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace schurlab::cli
