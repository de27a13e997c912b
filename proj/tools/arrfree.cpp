#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "arrfree/arrangement_io.hpp"
#include "arrfree/corpus.hpp"
#include "arrfree/freeness.hpp"
#include "arrfree/lattice.hpp"
#include "arrfree/report_json.hpp"
#include "arrfree/restriction.hpp"
#include "arrfree/series.hpp"

using namespace arrfree;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitUsage = 64;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string corpus;
  std::filesystem::path input;
  long seed = -1;
  bool json = false;

  void attach(CLI::App* app) {
    auto* c = app->add_option("--corpus", corpus, "corpus spec name:params, e.g. boolean:3, braid:4, "
                                                  "braid_essential:4, generic:3:4:1");
    auto* i = app->add_option("--input", input, "arrangement JSON file")->check(CLI::ExistingFile);
    c->excludes(i);
    app->add_option("--seed", seed, "seed for generic:l:m when none is given after the counts");
    app->add_flag("--json", json, "emit JSON instead of text");
  }

  Multiarrangement load() const {
    if (!corpus.empty()) {
      std::string spec = corpus;
      if (seed >= 0 && spec.rfind("generic:", 0) == 0 && std::count(spec.begin(), spec.end(), ':') == 2)
        spec += ":" + std::to_string(seed);
      return Multiarrangement::simple(corpus_from_spec(spec));
    }
    if (!input.empty()) return read_arrangement_file(input);
    throw UsageError("one of --corpus or --input is required");
  }

  Arrangement load_simple() const {
    Multiarrangement ma = load();
    if (!ma.is_simple()) throw UsageError("this subcommand needs a simple arrangement (all multiplicities 1)");
    return ma.base();
  }
};

std::vector<std::size_t> hyperplanes(const std::string& spec, std::size_t m) {
  std::vector<std::size_t> out;
  if (spec == "all") {
    for (std::size_t i = 0; i < m; ++i) out.push_back(i);
    return out;
  }
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(spec, &pos);
  } catch (const std::exception&) {
    throw UsageError("--hyperplane must be an index or 'all'");
  }
  if (pos != spec.size() || v < 1 || static_cast<std::size_t>(v) > m)
    throw UsageError("--hyperplane must be between 1 and " + std::to_string(m));
  out.push_back(static_cast<std::size_t>(v - 1));
  return out;
}

void emit(const std::string& kind, ojson payload) { std::cout << envelope(kind, std::move(payload)).dump(2) << "\n"; }

std::string describe(const Multiarrangement& ma) {
  std::ostringstream os;
  os << "l = " << ma.dim() << ", m = " << ma.size() << ", |k| = " << ma.total_multiplicity() << "\n";
  for (std::size_t i = 0; i < ma.size(); ++i) {
    os << "  H" << i + 1 << ": " << ma[i].to_string();
    if (ma.multiplicity(i) != 1) os << "  (multiplicity " << ma.multiplicity(i) << ")";
    os << "\n";
  }
  return os.str();
}

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string certificate_text(const FreenessCertificate& c) {
  if (c.free) return "Free, exponents " + join(c.exponents);
  return "NonFree (" + to_string(c.witness.kind) + ", " + std::to_string(c.witness.count) + " generators, degree " +
         std::to_string(c.witness.degree) + ")";
}

int cmd_corpus(const Source& src) {
  Multiarrangement ma = src.load();
  if (src.json) emit("corpus", arrangement_to_json(ma));
  else std::cout << describe(ma);
  return kExitOk;
}

int cmd_lattice(const Source& src) {
  Arrangement arr = src.load_simple();
  IntersectionLattice lat(arr);
  if (src.json) {
    emit("lattice", lattice_to_json(arr, lat));
    return kExitOk;
  }
  std::cout << "rank " << lat.rank() << ", " << lat.flats().size() << " flats\n";
  for (std::size_t i = 0; i < lat.flats().size(); ++i) {
    const Flat& f = lat.flats()[i];
    std::cout << "  codim " << f.codim << "  mu " << lat.mobius()[i] << "  {";
    for (std::size_t j = 0; j < f.hyperplanes.size(); ++j) std::cout << (j ? "," : "") << "H" << f.hyperplanes[j] + 1;
    std::cout << "}\n";
  }
  return kExitOk;
}

int cmd_charpoly(const Source& src) {
  Arrangement arr = src.load_simple();
  UniPoly chi = char_poly(arr);
  if (src.json) {
    ojson j;
    j["char_poly"] = poly_to_json(chi);
    j["reduced_char_poly"] = arr.size() ? poly_to_json(reduced_char_poly(arr)) : ojson(nullptr);
    emit("charpoly", j);
    return kExitOk;
  }
  std::cout << "chi(A,t)  = " << chi.to_string() << "\n";
  if (arr.size()) std::cout << "chi0(A,t) = " << reduced_char_poly(arr).to_string() << "\n";
  return kExitOk;
}

int cmd_restrict(const Source& src, const std::string& hspec) {
  Arrangement arr = src.load_simple();
  auto hs = hyperplanes(hspec, arr.size());
  ojson out = ojson::array();
  for (std::size_t h : hs) {
    RestrictionData rd = ziegler_restriction(arr, h);
    if (src.json) {
      out.push_back(restriction_to_json(rd));
    } else {
      std::cout << "H" << h + 1 << " = " << arr[h].to_string() << ": restriction in coordinates x1..x" << arr.dim() - 1
                << "\n" << describe(rd.restricted);
    }
  }
  if (src.json) emit("restrict", out);
  return kExitOk;
}

int cmd_freeness(const Source& src) {
  Multiarrangement ma = src.load();
  FreenessCertificate cert = freeness_der(ma);
  if (src.json) {
    emit("certificate", certificate_to_json(ma, cert));
    return kExitOk;
  }
  std::cout << certificate_text(cert) << "\n";
  if (cert.free) {
    std::cout << "Saito scalar " << to_string(cert.saito_scalar) << "\n";
    for (std::size_t i = 0; i < cert.basis.size(); ++i) {
      std::cout << "  theta" << i + 1 << " (degree " << cert.basis[i].degree << "):";
      for (std::size_t j = 0; j < cert.basis[i].coeffs.size(); ++j)
        std::cout << (j ? ", " : " ") << cert.basis[i].coeffs[j].to_string();
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const std::filesystem::path& path, bool json) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (j.contains("result") && j.contains("schema")) j = j["result"];
  Multiarrangement ma;
  FreenessCertificate cert = certificate_from_json(j, ma);
  CertificateCheck check = verify_certificate(ma, cert);
  if (json) {
    ojson o;
    o["accepted"] = check.ok;
    o["reason"] = check.reason;
    emit("verification", o);
  } else {
    std::cout << (check.ok ? "ACCEPTED" : "REJECTED: " + check.reason) << "\n";
  }
  return check.ok ? kExitOk : kExitError;
}

int cmd_coker(const Source& src, const std::string& hspec, const std::string& side, int p, int lo, int hi) {
  Arrangement arr = src.load_simple();
  auto hs = hyperplanes(hspec, arr.size());
  if (side != "der" && side != "form") throw UsageError("--side must be der or form");
  if (side == "form" && (p < 0 || p > static_cast<int>(arr.dim()))) throw UsageError("--p out of range");
  if (hi == INT_MIN) hi = static_cast<int>(arr.size()) + 3;
  if (hi < lo) throw UsageError("empty degree window");
  ojson out = ojson::array();
  for (std::size_t h : hs) {
    RestrictionWorkspace ws(arr, h);
    HilbertFunction source, image;
    if (side == "der") {
      source = hilbert_function([&](int d) { return static_cast<long>(ws.restricted().der_dim(d)); }, lo, hi);
      image = hilbert_function([&](int d) { return static_cast<long>(ws.image_der_dim(d)); }, lo, hi);
    } else {
      source = hilbert_function([&](int d) { return static_cast<long>(ws.restricted().omega_dim(p, d)); }, lo, hi);
      image = hilbert_function([&](int d) { return static_cast<long>(ws.image_form_dim(p, d)); }, lo, hi);
    }
    HilbertFunction coker = coker_dims(ws, side == "der" ? CokerSide::Derivations : CokerSide::Forms, p, lo, hi);
    if (src.json) {
      ojson o;
      o["hyperplane"] = h + 1;
      o["side"] = side;
      o["p"] = side == "form" ? ojson(p) : ojson(nullptr);
      o["target"] = hilbert_to_json(source);
      o["image"] = hilbert_to_json(image);
      o["cokernel"] = hilbert_to_json(coker);
      out.push_back(o);
    } else {
      std::cout << "H" << h + 1 << " " << (side == "der" ? std::string("derivations") : "forms p=" + std::to_string(p))
                << "\n  degree   target    image   coker\n";
      for (int d = lo; d <= hi; ++d) {
        std::size_t i = static_cast<std::size_t>(d - lo);
        char line[80];
        std::snprintf(line, sizeof line, "  %6d %8ld %8ld %7ld\n", d, source.dims[i], image.dims[i], coker.dims[i]);
        std::cout << line;
      }
    }
  }
  if (src.json) emit("coker", out);
  return kExitOk;
}

struct IdentityOutcome {
  std::string identity;
  long hyperplane;  // 0 when not applicable
  std::string status;  // PASS, FAIL, SKIP
  std::string lhs;
  std::string rhs;
  std::string note;
  ojson series = nullptr;
};

int cmd_series(const Source& src, const std::string& identity, const std::string& hspec, int top, int stab,
               bool allow_large) {
  Arrangement arr = src.load_simple();
  static const std::vector<std::string> known{"eq33", "eq34", "eq35", "eq36", "eq37", "all"};
  if (std::find(known.begin(), known.end(), identity) == known.end())
    throw UsageError("--identity must be one of eq33, eq34, eq35, eq36, eq37, all");
  if (arr.dim() > 4 && !allow_large) throw UsageError("series checks are limited to l <= 4 (use --allow-large)");
  if (arr.dim() < 2) throw UsageError("series checks need l >= 2");
  FitOptions opt;
  opt.stabilization = stab;
  auto want = [&](const char* id) { return identity == "all" || identity == id; };
  auto hs = hyperplanes(hspec, arr.size());
  std::vector<IdentityOutcome> outs;
  LogModules mods(Multiarrangement::simple(arr));
  if (want("eq35")) {
    BivariateSeries phi = phi_series(mods, opt);
    UniPoly lhs = char_via_limit(phi);
    UniPoly rhs = char_poly(arr);
    outs.push_back({"eq35", 0, lhs == rhs ? "PASS" : "FAIL", lhs.to_string(), rhs.to_string(), "", bivariate_to_json(phi)});
  }
  for (std::size_t h : hs) {
    RestrictionWorkspace ws(arr, h);
    long hh = static_cast<long>(h) + 1;
    if (want("eq33")) {
      Eq33Result r = verify_eq33(ws, top);
      outs.push_back({"eq33", hh, r.holds ? "PASS" : "FAIL", "x(1-x)Phi(A)", "(x+y)P(M)",
                      r.holds ? "x-degrees " + std::to_string(r.lo) + ".." + std::to_string(r.top)
                              : r.mismatches.front()});
    }
    if (want("eq34")) {
      FreenessCertificate c = freeness_der(ws.data().restricted);
      if (!c.free) {
        outs.push_back({"eq34", hh, "SKIP", "", "", "restriction is not free"});
      } else {
        BivariateSeries phi = restricted_phi_series(ws, opt);
        UniPoly lhs = char_via_limit(phi);
        UniPoly rhs = product_of_roots(c.exponents);
        outs.push_back({"eq34", hh, lhs == rhs ? "PASS" : "FAIL", lhs.to_string(), rhs.to_string(), "",
                        bivariate_to_json(phi)});
      }
    }
    if (want("eq36")) {
      BivariateSeries image = image_series(ws, opt);
      UniPoly lhs = char_via_limit(image);
      UniPoly rhs = reduced_char_poly(arr);
      outs.push_back({"eq36", hh, lhs == rhs ? "PASS" : "FAIL", lhs.to_string(), rhs.to_string(), "",
                      bivariate_to_json(image)});
    }
    if (want("eq37")) {
      Eq37Result r = verify_eq37(ws, opt);
      outs.push_back({"eq37", hh, r.holds ? "PASS" : "FAIL", r.lhs.to_string(), r.rhs.to_string(), "",
                      bivariate_to_json(coker_series(ws, opt))});
    }
  }
  bool ok = std::none_of(outs.begin(), outs.end(), [](const IdentityOutcome& o) { return o.status == "FAIL"; });
  if (src.json) {
    ojson arrj = ojson::array();
    for (const auto& o : outs) {
      ojson j;
      j["identity"] = o.identity;
      j["hyperplane"] = o.hyperplane ? ojson(o.hyperplane) : ojson(nullptr);
      j["status"] = o.status;
      j["lhs"] = o.lhs;
      j["rhs"] = o.rhs;
      j["note"] = o.note;
      j["series"] = o.series;
      arrj.push_back(j);
    }
    emit("series-check", arrj);
  } else {
    for (const auto& o : outs) {
      std::cout << o.status << " " << o.identity;
      if (o.hyperplane) std::cout << " H" << o.hyperplane;
      if (!o.lhs.empty()) std::cout << ": " << o.lhs << "  ==  " << o.rhs;
      if (!o.note.empty()) std::cout << "  [" << o.note << "]";
      std::cout << "\n";
    }
  }
  return ok ? kExitOk : kExitError;
}

int cmd_theorem1(const Source& src, const std::string& hspec, const std::string& assume, bool cross) {
  Arrangement arr = src.load_simple();
  Tameness t = parse_tameness(assume);
  auto hs = hyperplanes(hspec, arr.size());
  std::optional<FreenessCertificate> direct;
  if (cross) direct = freeness_der(Multiarrangement::simple(arr));
  std::vector<Theorem1Report> reps;
  for (std::size_t h : hs) reps.push_back(direct ? theorem1_test(arr, h, t, *direct) : theorem1_test(arr, h, t, false));
  bool same = std::all_of(reps.begin(), reps.end(), [&](const Theorem1Report& r) { return r.verdict == reps[0].verdict; });
  if (!same && arr.dim() <= 4) throw InternalInconsistency("verdict depends on the chosen hyperplane");
  if (src.json) {
    ojson j;
    j["dim"] = arr.dim();
    j["hyperplane_count"] = arr.size();
    j["assumption"] = to_string(t);
    auto a = ojson::array();
    for (const auto& r : reps) a.push_back(theorem1_to_json(r));
    j["reports"] = a;
    j["verdicts_agree"] = same;
    emit("theorem1", j);
  } else {
    for (const auto& r : reps) {
      std::cout << "H" << r.h + 1 << ": A^H " << certificate_text(r.restriction_certificate) << "; chi0 = "
                << r.chi0.to_string();
      if (r.restriction_certificate.free)
        std::cout << "; product = " << r.eq2.rhs.to_string() << (r.eq2.holds ? " (equal)" : " (different)");
      std::cout << "; " << to_string(r.applicability) << "; verdict " << to_string(r.verdict);
      if (r.cross_check) std::cout << "; direct " << certificate_text(*r.cross_check) << (r.agrees ? ", agrees" : "");
      std::cout << "\n";
    }
  }
  bool inapplicable =
      std::any_of(reps.begin(), reps.end(), [](const Theorem1Report& r) { return r.verdict == Verdict::Inapplicable; });
  return inapplicable ? kExitInapplicable : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Freeness of hyperplane arrangements via multirestriction"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand help for every subcommand");
  app.footer(
      "Corpus specs (--corpus):\n"
      "  boolean:L              coordinate hyperplanes in L variables\n"
      "  braid:N                x_i - x_j in N variables\n"
      "  braid_essential:N      braid arrangement in N - 1 coordinates\n"
      "  generic:L:M[:SEED]     M generic hyperplanes in L variables (seed 1, or --seed)\n"
      "Hyperplane indices are 1-based. Exit codes: 0 ok, 1 error or rejected certificate,\n"
      "2 inapplicable verdict, 64 usage error.");

  Source corpus_src, lattice_src, char_src, restrict_src, free_src, coker_src, series_src, thm_src;
  auto* corpus = app.add_subcommand("corpus", "print an arrangement");
  corpus_src.attach(corpus);
  auto* lattice = app.add_subcommand("lattice", "intersection lattice with Mobius values");
  lattice_src.attach(lattice);
  auto* charpoly = app.add_subcommand("charpoly", "characteristic and reduced characteristic polynomial");
  char_src.attach(charpoly);

  std::string restrict_h = "all";
  auto* restrict = app.add_subcommand("restrict", "restriction to a hyperplane with natural multiplicities");
  restrict_src.attach(restrict);
  restrict->add_option("--hyperplane", restrict_h, "1-based index or 'all'");

  auto* freeness = app.add_subcommand("freeness", "Saito certificate search for D(A,k)");
  free_src.attach(freeness);

  std::filesystem::path cert_path;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify-certificate", "re-check a certificate produced by 'freeness --json'");
  verify->add_option("--certificate", cert_path, "certificate JSON file")->required()->check(CLI::ExistingFile);
  verify->add_flag("--json", verify_json, "emit JSON");

  std::string coker_h = "1", side = "der";
  int coker_p = 1, lo = 0, hi = INT_MIN;
  auto* coker = app.add_subcommand("coker", "graded dimensions of restriction images and cokernels");
  coker_src.attach(coker);
  coker->add_option("--hyperplane", coker_h, "1-based index or 'all'");
  coker->add_option("--side", side, "der or form")->check(CLI::IsMember({"der", "form"}));
  coker->add_option("--p", coker_p, "form degree for --side form");
  coker->add_option("--lo", lo, "lowest degree (default 0)");
  coker->add_option("--hi", hi, "highest degree (default m + 3)");

  std::string identity = "all", series_h = "all";
  int top = 12, stab = 4;
  bool allow_large = false;
  auto* series = app.add_subcommand("series-check", "Poincare series identities and limit formulas");
  series_src.attach(series);
  series->add_option("--identity", identity, "eq33, eq34, eq35, eq36, eq37 or all")
      ->check(CLI::IsMember({"eq33", "eq34", "eq35", "eq36", "eq37", "all"}));
  series->add_option("--hyperplane", series_h, "1-based index or 'all'");
  series->add_option("--top", top, "truncation degree for the coefficientwise identity");
  series->add_option("--stabilization", stab, "vanishing finite differences required by series fits")
      ->check(CLI::Range(1, 20));
  series->add_flag("--allow-large", allow_large, "permit l >= 5");

  std::string thm_h = "all", assume = "none";
  bool cross = false;
  auto* thm = app.add_subcommand("theorem1", "freeness from the restriction and the reduced characteristic polynomial");
  thm_src.attach(thm);
  thm->add_option("--hyperplane", thm_h, "1-based index or 'all'");
  thm->add_option("--assume", assume, "none, weakly-tame or weakly-dually-tame")
      ->check(CLI::IsMember({"none", "weakly-tame", "weakly-dually-tame"}));
  thm->add_flag("--cross-check", cross, "compare with a direct Saito certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*corpus) return cmd_corpus(corpus_src);
    if (*lattice) return cmd_lattice(lattice_src);
    if (*charpoly) return cmd_charpoly(char_src);
    if (*restrict) return cmd_restrict(restrict_src, restrict_h);
    if (*freeness) return cmd_freeness(free_src);
    if (*verify) return cmd_verify(cert_path, verify_json);
    if (*coker) return cmd_coker(coker_src, coker_h, side, coker_p, lo, hi);
    if (*series) return cmd_series(series_src, identity, series_h, top, stab, allow_large);
    if (*thm) return cmd_theorem1(thm_src, thm_h, assume, cross);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BadParams& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
