#include "lcaframe/serialize.hpp"

#include "lcaframe/error.hpp"

#include <cstdio>
#include <sstream>

namespace lcaframe {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  fail(ErrorKind::Schema, "at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(path + "/" + key, "missing field");
  return *it;
}

const Json* optional_field(const Json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::int64_t as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
  return j;
}

std::vector<std::int64_t> int_list(const Json& j, const std::string& path) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  for (const auto& x : as_array(j, path)) out.push_back(as_int(x, path + "/" + std::to_string(i++)));
  return out;
}

std::vector<Rational> rational_list(const Json& j, const std::string& path) {
  std::vector<Rational> out;
  std::size_t i = 0;
  for (const auto& x : as_array(j, path)) out.push_back(rational_from_json(x, path + "/" + std::to_string(i++)));
  return out;
}

Json steps_to_json(const std::vector<Rational>& steps) {
  Json a = Json::array();
  for (const auto& s : steps) a.push_back(rational_to_json(s));
  return a;
}

int log2_exact(std::int64_t n) {
  int m = 0;
  while ((std::int64_t{1} << m) < n) ++m;
  return (std::int64_t{1} << m) == n ? m : -1;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Schema, "malformed JSON in " + source + ": " + e.what());
  }
}

std::string format_seed(std::uint64_t seed) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%llX", static_cast<unsigned long long>(seed));
  return buf;
}

std::uint64_t parse_seed(const std::string& text) {
  std::string t = text;
  if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) t = t.substr(2);
  require(!t.empty() && t.find_first_not_of("0123456789abcdefABCDEF") == std::string::npos, ErrorKind::Schema,
          "seed '" + text + "' is not hexadecimal");
  require(t.size() <= 16, ErrorKind::Schema, "seed '" + text + "' exceeds 64 bits");
  return std::stoull(t, nullptr, 16);
}

Json rational_to_json(const Rational& r) {
  if (is_integer(r)) return r.numerator();
  return to_string(r);
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      schema(path, e.what());
    }
  }
  if (j.is_number_float()) {
    try {
      return rational_from_dyadic(j.get<double>());
    } catch (const Error&) {
      schema(path, "decimal value is not dyadic; write it as \"p/q\"");
    }
  }
  schema(path, "expected an integer, a dyadic number or a \"p/q\" string");
}

Json point_to_json(const ExactPoint& p) { return steps_to_json(p); }

ExactPoint point_from_json(const Json& j, const std::string& path) { return rational_list(j, path); }

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    schema(path, "expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json domain_to_json(const Domain& d) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntegerInterval>) {
          return {{"interval", {v.lo, v.hi}}};
        } else if constexpr (std::is_same_v<T, HalfOpenBox>) {
          return {{"box", {{"lo", point_to_json(v.lo)}, {"hi", point_to_json(v.hi)}}}};
        } else if constexpr (std::is_same_v<T, FiniteSubset>) {
          Json pts = Json::array();
          for (const auto& p : v.points) pts.push_back(point_to_json(p));
          return {{"points", pts}};
        } else if constexpr (std::is_same_v<T, Ball>) {
          return {{"ball", {{"radius", rational_to_json(v.radius)}, {"dimension", v.dimension}}}};
        } else if constexpr (std::is_same_v<T, WholeGroup>) {
          return {{"whole", true}};
        } else {
          Json shifts = Json::array();
          for (const auto& s : v.shifts) shifts.push_back(point_to_json(s));
          return {{"coset_union", {{"base", domain_to_json(*v.base)}, {"shifts", shifts}}}};
        }
      },
      d.variant());
}

Domain domain_from_json(const Json& j, const std::string& path) {
  if (!j.is_object() || j.size() != 1) schema(path, "expected a single-key domain object");
  const auto& [key, v] = *j.items().begin();
  const std::string p = path + "/" + key;
  if (key == "interval") {
    auto b = int_list(v, p);
    if (b.size() != 2) schema(p, "expected [lo, hi]");
    return IntegerInterval{b[0], b[1]};
  }
  if (key == "box") {
    HalfOpenBox box{point_from_json(field(v, "lo", p), p + "/lo"), point_from_json(field(v, "hi", p), p + "/hi")};
    if (box.lo.size() != box.hi.size() || box.lo.empty()) schema(p, "lo and hi need the same nonzero length");
    return box;
  }
  if (key == "points") {
    FiniteSubset s;
    std::size_t i = 0;
    for (const auto& x : as_array(v, p)) s.points.push_back(point_from_json(x, p + "/" + std::to_string(i++)));
    return s;
  }
  if (key == "ball") {
    return Ball{rational_from_json(field(v, "radius", p), p + "/radius"),
                static_cast<int>(as_int(field(v, "dimension", p), p + "/dimension"))};
  }
  if (key == "whole") return WholeGroup{};
  if (key == "coset_union") {
    Domain base = domain_from_json(field(v, "base", p), p + "/base");
    std::vector<ExactPoint> shifts;
    std::size_t i = 0;
    for (const auto& x : as_array(field(v, "shifts", p), p + "/shifts"))
      shifts.push_back(point_from_json(x, p + "/shifts/" + std::to_string(i++)));
    return Domain::coset_union(std::move(base), std::move(shifts));
  }
  schema(p, "unknown domain kind '" + key + "'");
}

Json filter_to_json(const PeriodicFilter& f) {
  Json j;
  if (const auto* t = f.trig()) {
    j["kind"] = "trig";
    j["periodicity"] = steps_to_json(f.periodicity().steps());
    j["gain_sq"] = rational_to_json(f.gain_sq());
    j["eta"] = point_to_json(t->eta);
    j["shifts"] = t->shifts;
    Json c = Json::array();
    for (auto z : t->coeffs) c.push_back(complex_to_json(z));
    j["coeffs"] = c;
  } else if (const auto* pw = f.piecewise()) {
    j["kind"] = "piecewise";
    j["periodicity"] = steps_to_json(f.periodicity().steps());
    j["gain_sq"] = rational_to_json(f.gain_sq());
    j["anchor"] = point_to_json(pw->anchor);
    Json pieces = Json::array();
    for (const auto& piece : pw->pieces)
      pieces.push_back({{"domain", domain_to_json(piece.domain)}, {"value", complex_to_json(piece.value)}});
    j["pieces"] = pieces;
    j["default"] = complex_to_json(pw->otherwise);
  } else {
    const auto* tab = f.tabulated();
    j["kind"] = "tabulated";
    j["periodicity"] = steps_to_json(f.periodicity().steps());
    j["anchor"] = point_to_json(tab->anchor);
    j["grid"] = tab->grid;
    Json vals = Json::array();
    for (auto z : tab->values) vals.push_back(complex_to_json(z));
    j["values"] = vals;
  }
  return j;
}

PeriodicFilter filter_from_json(const Json& j, const GroupSpec& group, const std::string& path) {
  const std::string kind = as_string(field(j, "kind", path), path + "/kind");
  Lattice per(group.dual(), rational_list(field(j, "periodicity", path), path + "/periodicity"), true);
  auto gain = [&] {
    const Json* g = optional_field(j, "gain_sq");
    return g ? rational_from_json(*g, path + "/gain_sq") : Rational(1);
  };
  if (kind == "trig") {
    TrigPolynomial t;
    t.eta = point_from_json(field(j, "eta", path), path + "/eta");
    t.shifts = int_list(field(j, "shifts", path), path + "/shifts");
    std::size_t i = 0;
    for (const auto& c : as_array(field(j, "coeffs", path), path + "/coeffs"))
      t.coeffs.push_back(complex_from_json(c, path + "/coeffs/" + std::to_string(i++)));
    if (t.coeffs.size() != t.shifts.size()) schema(path, "coeffs and shifts differ in length");
    return PeriodicFilter(group, per, t, gain());
  }
  if (kind == "piecewise") {
    CosetPiecewise pw;
    pw.anchor = point_from_json(field(j, "anchor", path), path + "/anchor");
    std::size_t i = 0;
    for (const auto& piece : as_array(field(j, "pieces", path), path + "/pieces")) {
      const std::string p = path + "/pieces/" + std::to_string(i++);
      pw.pieces.push_back({domain_from_json(field(piece, "domain", p), p + "/domain"),
                           complex_from_json(field(piece, "value", p), p + "/value")});
    }
    if (const Json* d = optional_field(j, "default")) pw.otherwise = complex_from_json(*d, path + "/default");
    return PeriodicFilter(per, pw, gain());
  }
  if (kind == "tabulated") {
    Tabulated tab;
    tab.anchor = point_from_json(field(j, "anchor", path), path + "/anchor");
    const Json& grid = as_array(field(j, "grid", path), path + "/grid");
    try {
      tab.grid = grid.get<std::vector<Point>>();
    } catch (const Json::exception&) {
      schema(path + "/grid", "expected a list of coordinate lists");
    }
    std::size_t i = 0;
    for (const auto& v : as_array(field(j, "values", path), path + "/values"))
      tab.values.push_back(complex_from_json(v, path + "/values/" + std::to_string(i++)));
    if (tab.values.size() != tab.grid.size()) schema(path, "grid and values differ in length");
    return PeriodicFilter(per, tab);
  }
  schema(path + "/kind", "unknown filter kind '" + kind + "'");
}

Json sequence_to_json(const Sequence& s) {
  Json vals = Json::array();
  for (auto z : s.values) vals.push_back(complex_to_json(z));
  return {{"support_start", s.start}, {"values", vals}};
}

Sequence sequence_from_json(const Json& j, const std::string& path) {
  Sequence s;
  s.start = as_int(field(j, "support_start", path), path + "/support_start");
  std::size_t i = 0;
  for (const auto& v : as_array(field(j, "values", path), path + "/values"))
    s.values.push_back(complex_from_json(v, path + "/values/" + std::to_string(i++)));
  return s;
}

Json chain_to_json(const LatticeChain& c) {
  Json levels = Json::array();
  for (int k = c.first_level(); k <= c.last_level(); ++k) {
    const auto& L = c.level(k);
    Json lv{{"k", k},
            {"lattice", steps_to_json(L.lattice.steps())},
            {"annihilator", steps_to_json(L.annihilator.steps())},
            {"Q", domain_to_json(L.Q)},
            {"V", domain_to_json(L.V)}};
    if (c.has_level(k + 1)) {
      lv["d"] = c.index(k);
      Json nu = Json::array();
      for (const auto& p : c.nu(k)) nu.push_back(point_to_json(p));
      lv["nu"] = nu;
    }
    levels.push_back(lv);
  }
  const auto& p = c.params();
  Json params = Json::object();
  switch (p.variant) {
    case ChainVariant::Integers:
    case ChainVariant::Cyclic: params["M"] = p.M; break;
    case ChainVariant::Torus: params["M_seq"] = p.M_seq; break;
    case ChainVariant::EuclideanDiagonal: params["M_table"] = p.M_table; break;
  }
  return {{"group", c.group().name()}, {"params", params}, {"levels", levels}};
}

Json verification_to_json(const VerificationReport& r) {
  return {{"residual", r.max_residual},
          {"samples", r.samples},
          {"worst_point", r.worst_point},
          {"certification", r.certification()}};
}

Json report_to_json(const CertifyReport& r, Suite suite) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json x{{"suite", c.suite},       {"condition", c.condition}, {"scope", c.scope},
           {"status", to_string(c.status)}, {"residual", c.residual}, {"tolerance", c.tolerance},
           {"samples", c.samples},   {"certification", c.certification}};
    if (!c.note.empty()) x["note"] = c.note;
    checks.push_back(x);
  }
  return {{"suite", suite_name(suite)},
          {"passed", r.passed()},
          {"counts",
           {{"pass", r.count(CheckStatus::Pass)}, {"fail", r.count(CheckStatus::Fail)}, {"skip", r.count(CheckStatus::Skip)}}},
          {"checks", checks}};
}

SystemDescriptor parse_descriptor(const Json& j) {
  if (!j.is_object()) schema("", "descriptor must be a JSON object");
  SystemDescriptor d;
  const Json& g = field(j, "group", "");
  const std::string variant = as_string(field(g, "variant", "/group"), "/group/variant");
  const Json* params = optional_field(g, "params");
  if (variant == "integers") {
    d.group = GroupSpec::integers();
    d.chain.variant = ChainVariant::Integers;
    d.chain.M = static_cast<int>(as_int(field(j, "M", ""), "/M"));
  } else if (variant == "cyclic") {
    if (!params) schema("/group/params", "missing field");
    const std::int64_t N = as_int(field(*params, "N", "/group/params"), "/group/params/N");
    const int m = log2_exact(N);
    require(N >= 2 && m > 0, ErrorKind::Domain, "cyclic chains need N = 2^M with M >= 1 (got N = " + std::to_string(N) + ")");
    if (const Json* M = optional_field(j, "M"))
      require(as_int(*M, "/M") == m, ErrorKind::Domain, "M disagrees with N = 2^M");
    d.group = GroupSpec::cyclic(N);
    d.chain.variant = ChainVariant::Cyclic;
    d.chain.M = m;
  } else if (variant == "torus") {
    d.group = GroupSpec::torus();
    d.chain.variant = ChainVariant::Torus;
    d.chain.M_seq = int_list(field(j, "M_seq", ""), "/M_seq");
  } else if (variant == "euclidean") {
    d.chain.variant = ChainVariant::EuclideanDiagonal;
    std::size_t r = 0;
    for (const auto& row : as_array(field(j, "M_table", ""), "/M_table"))
      d.chain.M_table.push_back(int_list(row, "/M_table/" + std::to_string(r++)));
    std::int64_t s = static_cast<std::int64_t>(d.chain.M_table.size());
    if (params) s = as_int(field(*params, "s", "/group/params"), "/group/params/s");
    require(s == static_cast<std::int64_t>(d.chain.M_table.size()), ErrorKind::Domain,
            "M_table needs one row per axis (s = " + std::to_string(s) + ")");
    require(s >= 1, ErrorKind::Domain, "euclidean group needs s >= 1");
    d.group = GroupSpec::euclidean(static_cast<int>(s));
  } else {
    schema("/group/variant", "unknown variant '" + variant + "'");
  }

  const Json& fam = field(j, "family", "");
  if (!fam.is_object() || fam.size() != 1) schema("/family", "expected exactly one of bspline, charfun");
  if (const Json* b = optional_field(fam, "bspline")) {
    d.family = {FamilyKind::BSpline, static_cast<int>(as_int(field(*b, "order", "/family/bspline"), "/family/bspline/order"))};
  } else if (const Json* c = optional_field(fam, "charfun")) {
    const std::string mode = as_string(field(*c, "mode", "/family/charfun"), "/family/charfun/mode");
    require(d.group.kind() != GroupKind::Integers, ErrorKind::Unsupported,
            "characteristic-function systems on Z have no finite time-domain generators");
    if (mode == "shannon") {
      d.family = {FamilyKind::CharShannon, 1};
    } else if (mode == "proper") {
      d.family = {FamilyKind::CharProper, 1};
      ExampleSpec ex;
      const Json& L = field(*c, "L", "/family/charfun");
      switch (d.group.kind()) {
        case GroupKind::FiniteCyclic:
          ex.kind = ExampleKind::Z2M;
          ex.M = d.chain.M;
          ex.L = rational_list(L, "/family/charfun/L");
          break;
        case GroupKind::Torus:
          ex.kind = ExampleKind::TorusT;
          ex.M_seq = d.chain.M_seq;
          ex.L = rational_list(L, "/family/charfun/L");
          break;
        case GroupKind::Euclidean: {
          ex.M_table = d.chain.M_table;
          if (const Json* sh = optional_field(*c, "shape")) d.shape = as_string(*sh, "/family/charfun/shape");
          if (d.shape == "ball") {
            ex.kind = ExampleKind::RsBall;
            ex.L = rational_list(L, "/family/charfun/L");
          } else if (d.shape == "box") {
            ex.kind = ExampleKind::RsSeparable;
            std::size_t r = 0;
            for (const auto& row : as_array(L, "/family/charfun/L")) {
              ex.L_table.push_back(rational_list(row, "/family/charfun/L/" + std::to_string(r)));
              ++r;
            }
          } else {
            schema("/family/charfun/shape", "expected box or ball");
          }
          break;
        }
        case GroupKind::Integers:
          break;
      }
      d.example = ex;
    } else {
      schema("/family/charfun/mode", "expected proper or shannon");
    }
  } else {
    schema("/family", "expected exactly one of bspline, charfun");
  }

  if (const Json* k = optional_field(j, "k0")) d.k0 = static_cast<int>(as_int(*k, "/k0"));
  if (const Json* k = optional_field(j, "k1")) d.k1 = static_cast<int>(as_int(*k, "/k1"));
  if (const Json* s = optional_field(j, "seed")) {
    if (s->is_number_unsigned() || s->is_number_integer()) {
      d.seed = s->get<std::uint64_t>();
    } else {
      try {
        d.seed = parse_seed(as_string(*s, "/seed"));
      } catch (const Error& e) {
        schema("/seed", e.what());
      }
    }
  }
  if (const Json* o = optional_field(j, "out")) d.out = as_string(*o, "/out");
  return d;
}

Json descriptor_to_json(const SystemDescriptor& d) {
  Json j;
  Json g{{"variant", ""}};
  switch (d.group.kind()) {
    case GroupKind::Integers: g["variant"] = "integers"; break;
    case GroupKind::FiniteCyclic: g["variant"] = "cyclic"; g["params"] = {{"N", d.group.modulus()}}; break;
    case GroupKind::Torus: g["variant"] = "torus"; break;
    case GroupKind::Euclidean: g["variant"] = "euclidean"; g["params"] = {{"s", d.group.dimension()}}; break;
  }
  j["group"] = g;
  switch (d.chain.variant) {
    case ChainVariant::Integers:
    case ChainVariant::Cyclic: j["M"] = d.chain.M; break;
    case ChainVariant::Torus: j["M_seq"] = d.chain.M_seq; break;
    case ChainVariant::EuclideanDiagonal: j["M_table"] = d.chain.M_table; break;
  }
  if (d.family.kind == FamilyKind::BSpline) {
    j["family"] = {{"bspline", {{"order", d.family.order}}}};
  } else {
    Json c{{"mode", d.family.kind == FamilyKind::CharShannon ? "shannon" : "proper"}};
    if (d.example) {
      if (d.example->kind == ExampleKind::RsSeparable) {
        Json rows = Json::array();
        for (const auto& row : d.example->L_table) rows.push_back(steps_to_json(row));
        c["L"] = rows;
      } else {
        c["L"] = steps_to_json(d.example->L);
      }
    }
    if (d.group.kind() == GroupKind::Euclidean) c["shape"] = d.shape;
    j["family"] = {{"charfun", c}};
  }
  if (d.k0) j["k0"] = *d.k0;
  if (d.k1) j["k1"] = *d.k1;
  j["seed"] = format_seed(d.seed);
  if (d.out) j["out"] = *d.out;
  return j;
}

FrameSystem build_system(const SystemDescriptor& d) {
  std::optional<OmegaChain> omega;
  std::shared_ptr<const LatticeChain> chain;
  if (d.example) {
    omega = instantiate_example(*d.example);
    chain = omega->chain_ptr();
  } else {
    chain = std::make_shared<LatticeChain>(build_chain(d.chain));
  }
  const int k0 = d.k0.value_or(chain->first_level());
  const int k1 = d.k1.value_or(chain->last_level());
  return FrameSystem::build(chain, d.family, k0, k1, omega);
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t descriptor_hash(const SystemDescriptor& d) {
  Json j = descriptor_to_json(d);
  j.erase("out");
  return fnv1a(j.dump());
}

Json system_to_json(const SystemDescriptor& d, const FrameSystem& s) {
  SystemDescriptor resolved = d;
  resolved.k0 = s.k0();
  resolved.k1 = s.k1();
  Json levels = Json::array();
  for (const auto& bank : s.filters()) {
    Json G = Json::array();
    for (const auto& g : bank.G) G.push_back(filter_to_json(g));
    levels.push_back({{"k", bank.k},
                      {"d", s.chain().index(bank.k)},
                      {"rho", bank.G.size()},
                      {"H", filter_to_json(bank.H)},
                      {"G", G}});
  }
  return {{"format", "lcaframe-system"},
          {"version", 1},
          {"descriptor", descriptor_to_json(resolved)},
          {"k0", s.k0()},
          {"k1", s.k1()},
          {"levels", levels}};
}

LoadedSystem system_from_json(const Json& j) {
  if (!j.is_object()) schema("", "expected an object");
  if (!j.contains("format")) {
    SystemDescriptor d = parse_descriptor(j);
    return {d, build_system(d)};
  }
  if (as_string(j["format"], "/format") != "lcaframe-system") schema("/format", "not an lcaframe system file");
  SystemDescriptor d;
  try {
    d = parse_descriptor(field(j, "descriptor", ""));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Schema) throw;
    std::string msg = e.what();
    fail(ErrorKind::Schema, "in /descriptor, " + msg.substr(msg.find(':') + 2));
  }
  d.k0 = static_cast<int>(as_int(field(j, "k0", ""), "/k0"));
  d.k1 = static_cast<int>(as_int(field(j, "k1", ""), "/k1"));
  FrameSystem built = build_system(d);
  const GroupSpec& g = built.chain().group();
  std::vector<LevelFilters> banks;
  std::size_t i = 0;
  for (const auto& lv : as_array(field(j, "levels", ""), "/levels")) {
    const std::string p = "/levels/" + std::to_string(i++);
    LevelFilters bank{static_cast<int>(as_int(field(lv, "k", p), p + "/k")),
                      filter_from_json(field(lv, "H", p), g, p + "/H"),
                      {}};
    std::size_t m = 0;
    for (const auto& x : as_array(field(lv, "G", p), p + "/G"))
      bank.G.push_back(filter_from_json(x, g, p + "/G/" + std::to_string(m++)));
    banks.push_back(std::move(bank));
  }
  return {d, FrameSystem::from_filters(built.chain_ptr(), built.family(), built.k0(), built.k1(), built.omega(),
                                       std::move(banks))};
}

}  // namespace lcaframe
