#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cremona/affine.hpp"
#include "cremona/builtins.hpp"
#include "cremona/certify.hpp"
#include "cremona/errors.hpp"
#include "cremona/json_io.hpp"
#include "cremona/polytext.hpp"
#include "cremona/selftest.hpp"

namespace {

using namespace cremona;

enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2, kGuardrail = 3 };

struct Report {
  int code = kOk;
  std::string text;
  json data = json::object();
};

struct Settings {
  std::string field = "rationals";
  std::string output = "text";
  std::size_t n = 0;
  std::string matrix, map, word, name, params, only;
  std::string first, second;
};

// An argument naming an existing file is replaced by the file's contents.
std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (arg.empty() || !std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON input");
  return j;
}

ProjMap read_map(const std::string& arg, Field f) {
  std::string s = read_input(arg);
  std::size_t start = s.find_first_not_of(" \t\n");
  if (start != std::string::npos && s[start] == '{') return map_from_json(parse_json(s), f);
  return parse_map(s, f);
}

BuiltinParams parse_params(const std::string& text) {
  BuiltinParams out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("parameters are written key=value, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

std::vector<unsigned> parse_exponents(const std::string& text) {
  std::vector<unsigned> v;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ':')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("exponent vectors are written like 1:0:2");
    v.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (v.empty()) throw ParseError("empty exponent vector");
  return v;
}

std::string arg(const Settings& s, std::size_t i, const char* what) {
  const std::string& v = i == 0 ? s.first : s.second;
  if (v.empty()) throw CLI::ValidationError(std::string("missing ") + what);
  return v;
}

Report map_report(const ProjMap& f) {
  Report r;
  r.text = format_map(f);
  r.data = to_json(f);
  r.data["degree"] = f.degree();
  return r;
}

std::string describe(const ObstructionReport& o) {
  std::ostringstream os;
  os << "verdict: " << to_string(o.verdict) << "\njacobian: " << format_poly(o.jacobian);
  if (o.witness_factor)
    os << "\nwitness: " << format_poly(*o.witness_factor) << " with multiplicity " << *o.witness_multiplicity;
  if (!o.reason.empty()) os << "\nreason: " << o.reason;
  return os.str();
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Obstructed: return kNegative;
    case Verdict::NoObstruction: return kOk;
    case Verdict::Inapplicable: return kGuardrail;
  }
  return kGuardrail;
}

std::string describe(const SqfDecomp& d) {
  std::ostringstream os;
  os << "unit: " << d.unit.to_string();
  for (const auto& f : d.factors) os << "\n(" << format_poly(f.poly) << ")^" << f.multiplicity;
  return os.str();
}

std::string describe(const GlWord& w) {
  std::ostringstream os;
  os << w.letters.size() << " letters";
  for (const auto& g : w.letters) {
    os << "\n" << to_string(g.kind);
    if (g.exp < 0) os << "^-1";
    if (g.kind == GlKind::Transvection) os << " E(" << g.i << "," << g.j << ")" << (g.sign < 0 ? " sign -1" : "");
    if (!g.perm.is_identity()) {
      os << " perm";
      for (auto p : g.perm.image) os << " " << p;
    }
  }
  return os.str();
}

Report certificate_report(const Certificate& c) {
  Report r;
  r.data = to_json(c);
  if (c.has_word()) {
    r.text = "certified: word of " + std::to_string(c.word().letters.size()) + " letters evaluates to " +
             format_map(c.target);
  } else {
    r.text = "obstructed: " + format_map(c.target) + "\n" + describe(c.obstruction());
    r.code = kNegative;
  }
  return r;
}

Report cmd_certify(const Settings& s, Field f) {
  if (!s.matrix.empty() || !s.map.empty()) {
    MonomialMap m;
    if (!s.matrix.empty()) {
      IntMatrix a = parse_matrix(read_input(s.matrix));
      if (!a.is_unimodular()) throw ParseError("matrix is not unimodular");
      m = MonomialMap::from_matrix(f, a);
    } else {
      auto got = from_projective(read_map(s.map, f));
      if (!got) return Report{kNegative, "not a monomial map", json{{"monomial", false}}};
      m = *got;
    }
    if (s.n != 0 && s.n != m.dim()) throw ParseError("--n does not match the input dimension");
    Certifier cert(m.dim(), f);
    return certificate_report(cert.certify_monomial(m));
  }
  if (s.name.empty()) throw CLI::ValidationError("certify needs --matrix, --map or --name");
  BuiltinParams params = parse_params(s.params);
  if (s.name == "nagata") {
    NagataCheck nc = verify_nagata(f);
    bool ok = nc.identity_holds && nc.word_holds && nc.inverse_holds;
    Report r;
    r.code = ok ? kOk : kNegative;
    r.text = std::string("identity: ") + (nc.identity_holds ? "holds" : "fails") +
             "\nword: " + (nc.word_holds ? "holds" : "fails") + " (" + std::to_string(nc.word.letters.size()) +
             " letters)\ninverse: " + (nc.inverse_holds ? "holds" : "fails");
    r.data = json{{"target", format_map(nc.nagata)},
                  {"identity", nc.identity_holds},
                  {"verified", nc.word_holds},
                  {"inverse", nc.inverse_holds},
                  {"word", to_json(nc.word)}};
    return r;
  }
  if (s.name == "tame-elementary") {
    if (!params.count("v")) throw ParseError("tame-elementary needs v=a2:...:an");
    std::vector<unsigned> v = parse_exponents(params.at("v"));
    Coeff c = parse_coeff(params.count("c") ? params.at("c") : "1", f);
    Certifier cert(v.size() + 1, f);
    if (s.n != 0 && s.n != cert.dim()) throw ParseError("--n does not match the exponent vector");
    GnWord w = cert.certify_tame_elementary(v, c);
    Report r;
    ProjMap target = cert.tame_elementary_map(v, c);
    r.text = std::string("certified (") + to_string(tame_branch(cert.dim(), v)) + "): word of " +
             std::to_string(w.letters.size()) + " letters evaluates to " + format_map(target);
    r.data = json{{"target", format_map(target)},
                  {"verified", true},
                  {"branch", to_string(tame_branch(cert.dim(), v))},
                  {"length", w.letters.size()},
                  {"word", to_json(w)}};
    return r;
  }
  if (s.n == 0) throw CLI::ValidationError("certify --name needs --n");
  Certifier cert(s.n, f);
  Builtin b = builtin(s.name, cert, params);
  Certificate c;
  c.target = b.map;
  if (b.word) {
    GnWord w = b.word->flatten(s.n, f);
    if (!equal_up_to_scalar(eval_word(w), b.map)) throw std::logic_error("builtin word does not evaluate to its map");
    c.result = std::move(w);
    c.verified = true;
    return certificate_report(c);
  }
  ObstructionReport o = gn_obstruction(b.map);
  if (o.verdict == Verdict::Obstructed) {
    c.result = std::move(o);
    c.verified = true;
    return certificate_report(c);
  }
  Report r;
  r.code = o.verdict == Verdict::Inapplicable ? kGuardrail : kNegative;
  r.text = "no word and no obstruction for " + s.name + "\n" + describe(o);
  r.data = json{{"target", format_map(b.map)}, {"result", "none"}, {"obstruction", to_json(o)}};
  return r;
}

Report cmd_builtin(const Settings& s, Field f) {
  Report r;
  if (s.name.empty()) {
    json list = json::array();
    std::ostringstream os;
    for (const auto& b : builtin_catalog()) {
      list.push_back(json{{"name", b.name}, {"summary", b.summary}, {"minN", b.min_n}});
      os << b.name << " (n >= " << b.min_n << "): " << b.summary << "\n";
    }
    r.text = os.str();
    if (!r.text.empty()) r.text.pop_back();
    r.data = list;
    return r;
  }
  if (s.n == 0) throw CLI::ValidationError("builtin needs --n");
  Certifier cert(s.n, f);
  Builtin b = builtin(s.name, cert, parse_params(s.params));
  r.data = json{{"name", b.name}, {"n", b.n}, {"map", format_map(b.map)}, {"degree", b.map.degree()}};
  r.text = b.name + " = " + format_map(b.map) + "\ndegree: " + std::to_string(b.map.degree());
  if (b.word) {
    GnWord w = b.word->flatten(s.n, f);
    r.data["word"] = to_json(w);
    r.text += "\nword: " + std::to_string(w.letters.size()) + " letters";
  } else {
    r.data["word"] = nullptr;
    r.text += "\nword: none";
  }
  return r;
}

Report cmd_verify_word(const Settings& s, Field f) {
  if (s.word.empty()) throw CLI::ValidationError("verify-word needs --word");
  json j = parse_json(read_input(s.word));
  if (j.contains("word") && j["word"].is_object()) j = j["word"];
  Field wf = j.contains("field") ? Field::parse(j["field"].get<std::string>()) : f;
  GnWord w = gnword_from_json(j, wf);
  ProjMap got = eval_word(w);
  Report r = map_report(got);
  r.data = json{{"map", to_json(got)}, {"length", w.letters.size()}};
  if (!s.map.empty()) {
    bool ok = equal_up_to_scalar(got, read_map(s.map, wf));
    r.data["matches"] = ok;
    r.text += ok ? "\nmatches target" : "\ndoes not match target";
    if (!ok) r.code = kNegative;
  }
  return r;
}

Report run(const std::string& sub, const Settings& s) {
  const Field f = Field::parse(s.field);
  if (sub == "compose") {
    ProjMap a = read_map(arg(s, 0, "first map"), f), b = read_map(arg(s, 1, "second map"), f);
    if (a.dim() != b.dim()) throw ParseError("maps live on different projective spaces");
    return map_report(compose(a, b));
  }
  if (sub == "degree") {
    ProjMap a = read_map(arg(s, 0, "map"), f);
    return Report{kOk, std::to_string(a.degree()), json{{"degree", a.degree()}}};
  }
  if (sub == "jacobian") {
    std::string j = format_poly(jacobian(read_map(arg(s, 0, "map"), f)));
    return Report{kOk, j, json{{"jacobian", j}}};
  }
  if (sub == "affine-jacobian") {
    RatFunc j = affine_jacobian(to_affine(read_map(arg(s, 0, "map"), f)));
    return Report{kOk, format_ratfunc(j),
                  json{{"numerator", format_poly(j.num())}, {"denominator", format_poly(j.den())}}};
  }
  if (sub == "square-test") {
    ProjMap a = read_map(arg(s, 0, "map"), f);
    BuiltinParams params = parse_params(s.params);
    if (params.count("k")) {
      long k = std::stol(params.at("k"));
      if (k < 2) throw ParseError("k must be at least 2");
      PowerTest t = kth_power_test(jacobian(a), static_cast<unsigned>(k));
      Report r;
      r.code = t.holds ? kOk : kNegative;
      r.text = t.holds ? "Jacobian is a " + std::to_string(k) + "-th power times a constant: root " + format_poly(*t.root)
                       : "not a " + std::to_string(k) + "-th power: (" + format_poly(t.witness->poly) + ")^" +
                             std::to_string(t.witness->multiplicity);
      r.data = json{{"holds", t.holds}, {"k", k}};
      if (t.decomposition) r.data["decomposition"] = to_json(*t.decomposition);
      if (t.root) r.data["root"] = format_poly(*t.root);
      if (t.witness)
        r.data["witness"] = json{{"poly", format_poly(t.witness->poly)}, {"mult", t.witness->multiplicity}};
      return r;
    }
    ObstructionReport o = gn_obstruction(a);
    return Report{verdict_code(o.verdict), describe(o), to_json(o)};
  }
  if (sub == "discrepancy") {
    ProjMap a = read_map(arg(s, 0, "map"), f);
    MultiPoly h = parse_poly(read_input(arg(s, 1, "hypersurface")), f, a.dim() + 1);
    unsigned d = discrepancy(a, h);
    return Report{kOk, std::to_string(d), json{{"discrepancy", d}}};
  }
  if (sub == "contracted") {
    SqfDecomp d = contracted_report(read_map(arg(s, 0, "map"), f));
    return Report{kOk, describe(d), to_json(d)};
  }
  if (sub == "monomial-check") {
    auto m = from_projective(read_map(arg(s, 0, "map"), f));
    if (!m) return Report{kNegative, "not monomial", json{{"monomial", false}}};
    Report r;
    bool odd = gl_odd_test(m->matrix);
    json coeffs = json::array();
    std::string ctext;
    for (const auto& c : m->coeffs) {
      coeffs.push_back(c.to_string());
      ctext += (ctext.empty() ? "" : " ") + c.to_string();
    }
    r.data = json{{"monomial", true}, {"matrix", to_json(m->matrix)}, {"coeffs", coeffs}, {"glOdd", odd}};
    r.text = "monomial\nmatrix: " + m->matrix.to_string() + "\ncoefficients: " + ctext +
             "\nGL_odd: " + (odd ? "yes" : "no");
    return r;
  }
  if (sub == "monomial-decompose") {
    if (s.matrix.empty()) throw CLI::ValidationError("monomial-decompose needs --matrix");
    IntMatrix a = parse_matrix(read_input(s.matrix));
    if (!a.is_unimodular()) throw ParseError("matrix is not unimodular");
    const bool odd = gl_odd_test(a);
    GlWord w = odd ? gl_odd_decompose(a) : gl_full_decompose(a);
    Report r;
    r.data = to_json(w);
    r.data["generators"] = odd ? "odd" : "full";
    r.text = std::string(odd ? "GL_odd generators: " : "full generators: ") + describe(w);
    return r;
  }
  if (sub == "certify") return cmd_certify(s, f);
  if (sub == "verify-word") return cmd_verify_word(s, f);
  if (sub == "builtin") return cmd_builtin(s, f);
  if (sub == "embed") return map_report(linear_embed(read_map(arg(s, 0, "map"), f)));
  if (sub == "f2-index") {
    if (s.n == 0) throw CLI::ValidationError("f2-index needs --n");
    std::size_t idx = f2_orbit_index(s.n);
    return Report{kOk, std::to_string(idx), json{{"n", s.n}, {"index", idx}}};
  }
  if (sub == "selftest") {
    selftest::Options opts;
    opts.only = s.only;
    auto outcomes = selftest::run(opts);
    if (outcomes.empty()) throw CLI::ValidationError("--only matched no criterion");
    std::ostringstream os;
    selftest::print(os, outcomes);
    Report r;
    r.text = os.str();
    r.text.pop_back();
    r.code = selftest::all_passed(outcomes) ? kOk : kNegative;
    json list = json::array();
    for (const auto& o : outcomes)
      list.push_back(json{{"id", o.criterion.id},
                          {"name", o.criterion.name},
                          {"passed", o.passed},
                          {"detail", o.detail},
                          {"seconds", o.seconds}});
    r.data = json{{"criteria", list}, {"passed", r.code == kOk}};
    return r;
  }
  throw CLI::ValidationError("unknown subcommand " + sub);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cremona group toolkit: birational maps, Jacobian obstructions and generator certificates"};
  app.require_subcommand(1, 1);
  Settings s;
  app.add_option("--field", s.field, "coefficient field: rationals or fp:P")->capture_default_str();
  app.add_option("--output", s.output, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  struct Spec {
    const char* name;
    const char* help;
    const char* positional;
  };
  const Spec specs[] = {
      {"compose", "compose two maps, f o g", "map f"},
      {"degree", "degree of a map", "map"},
      {"jacobian", "Jacobian determinant of a map", "map"},
      {"affine-jacobian", "Jacobian of the map in the chart x0 = 1", "map"},
      {"square-test", "odd-dimension square obstruction, or k-th power test with --params k=K", "map"},
      {"discrepancy", "multiplicity of a hypersurface in the Jacobian", "map"},
      {"contracted", "squarefree decomposition of the Jacobian", "map"},
      {"monomial-check", "recognize a monomial map and test GL_odd", "map"},
      {"monomial-decompose", "decompose a unimodular matrix into generator letters", nullptr},
      {"certify", "certify membership by a generator word, or report an obstruction", nullptr},
      {"verify-word", "evaluate a generator word, optionally against --map", nullptr},
      {"builtin", "list builtins or show one with its word", nullptr},
      {"embed", "linear embedding of a map on P^n into P^(n+1)", "map"},
      {"f2-index", "index of GL(n,Z)_odd from the orbit on F2^n", nullptr},
      {"selftest", "run the acceptance criteria", nullptr},
  };
  for (const auto& sp : specs) {
    CLI::App* sub = app.add_subcommand(sp.name, sp.help);
    sub->fallthrough();
    const std::string name = sp.name;
    if (sp.positional) {
      sub->add_option("first", s.first, std::string(sp.positional) + " (inline or file)");
      if (name == "compose") sub->add_option("second", s.second, "map g (inline or file)");
      if (name == "discrepancy") sub->add_option("second", s.second, "hypersurface equation (inline or file)");
    }
    if (name == "certify" || name == "builtin" || name == "f2-index") sub->add_option("--n", s.n, "dimension");
    if (name == "certify" || name == "monomial-decompose") sub->add_option("--matrix", s.matrix, "integer matrix");
    if (name == "certify" || name == "verify-word") sub->add_option("--map", s.map, "target map");
    if (name == "verify-word") sub->add_option("--word", s.word, "word JSON (inline or file)");
    if (name == "certify" || name == "builtin") sub->add_option("--name", s.name, "builtin name");
    if (name == "certify" || name == "builtin" || name == "square-test")
      sub->add_option("--params", s.params, "key=value list, vectors as a:b:c");
    if (name == "selftest") sub->add_option("--only", s.only, "criterion names or ids, comma-separated");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  Report r;
  try {
    r = run(sub, s);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegreeGuardrail& e) {
    std::cerr << "guardrail: " << e.what() << "\n";
    return kGuardrail;
  } catch (const UnsupportedCharacteristic& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kGuardrail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (s.output == "json") {
    json out = r.data;
    if (out.is_object()) out["exitCode"] = r.code;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.text << "\n";
  }
  return r.code;
}
