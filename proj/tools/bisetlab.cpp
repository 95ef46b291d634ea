#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bisetlab/algebra.hpp"
#include "bisetlab/errors.hpp"
#include "bisetlab/parallel.hpp"
#include "bisetlab/report.hpp"

using namespace bisetlab;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;

struct Options {
  std::string l, t = "C1", h, g, k, c;
  std::string field = "rational";
  std::string probes;
  int cap = kDefaultOrderCap;
  std::string out;
  int threads = 1;
  std::string catalog;
  std::string fixture;
  std::string module;
  std::string file;
};

std::string catalog_path(const Options& o) {
  if (!o.catalog.empty()) return o.catalog;
  if (const char* env = std::getenv("BISETLAB_CATALOG"); env && *env) return env;
  return "bisetlab_catalog.json";
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

GroupPtr need(const Catalog& cat, const std::string& name, const char* flag) {
  if (name.empty()) throw InvalidInput(std::string("missing ") + flag);
  return cat.get(name);
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void emit(const Options& o, const json& report) {
  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + o.out);
  f << text;
  std::cout << render_report(report);
}

FiniteDimAlgebra load_fixture(const std::string& name) {
  for (const auto& f : fixture_names())
    if (f == name) return fixture_algebra(name);
  if (std::filesystem::exists(name)) return algebra_from_json(read_json(name));
  throw InvalidInput("unknown fixture \"" + name + "\"");
}

int run(const std::string& cmd, const Options& o) {
  set_thread_count(o.threads);
  if (o.cap <= 0) throw InvalidInput("--cap must be positive");
  const Catalog cat = Catalog::with_file(catalog_path(o), o.cap);
  RunContext ctx{cmd, cat.hash_hex(), o.cap, split_names(o.probes)};
  const FieldMode mode = parse_field(o.field);

  if (cmd == "gram") {
    const GroupPtr h = need(cat, o.h, "--H"), l = need(cat, o.l, "--L"), t = need(cat, o.t, "--T");
    const GramReport g = gram_matrix(h, l, t, mode, o.cap);
    emit(o, gram_report(ctx, h, l, t, mode, g));
    return g.symmetric && g.integer && g.positive_definite ? kPass : kFail;
  }
  if (cmd == "nondeg") {
    const GroupPtr h = need(cat, o.h, "--H"), l = need(cat, o.l, "--L"), t = need(cat, o.t, "--T");
    const NondegeneracyReport n = check_pairing_nondegenerate(h, l, t, mode, o.cap);
    emit(o, nondegeneracy_report(ctx, h, l, t, mode, n));
    return n.pass ? kPass : kFail;
  }
  if (cmd == "radical") {
    const FiniteDimAlgebra a = o.fixture.empty()
                                   ? build_endo_algebra(need(cat, o.l, "--L"), need(cat, o.t, "--T"), mode, o.cap)
                                   : load_fixture(o.fixture);
    const RadicalReport r = radical_via_trace_form(a);
    emit(o, radical_report(ctx, a, r));
    return r.dimension == 0 ? kPass : kFail;
  }
  if (cmd == "certify") {
    const GroupPtr l = need(cat, o.l, "--L"), t = need(cat, o.t, "--T");
    std::vector<GroupPtr> probes;
    for (const auto& p : ctx.probes) probes.push_back(cat.get(p));
    std::optional<FiniteDimAlgebra> fixture;
    if (!o.fixture.empty()) fixture = load_fixture(o.fixture);
    const SemisimplicityCertificate c = certify_semisimple(l, t, mode, probes, o.cap, fixture ? &*fixture : nullptr);
    json report = certificate_report(ctx, c);
    report["essential_dim"] = essential_algebra(l, t, mode, cat, o.cap).quotient_dim;
    report["aut_multiplicities"] = json::object();
    if (!o.c.empty()) {
      const AutReport a = aut_multiplicities(l, t, cat.get(o.c), o.cap);
      report["aut_multiplicities"] = aut_report(ctx, l, t, cat.get(o.c), a).at("aut_multiplicities");
    }
    emit(o, report);
    return c.pass ? kPass : kFail;
  }
  if (cmd == "essential") {
    const GroupPtr g = need(cat, o.g, "--G"), t = need(cat, o.t, "--T");
    emit(o, essential_report(ctx, g, t, mode, essential_algebra(g, t, mode, cat, o.cap)));
    return kPass;
  }
  if (cmd == "oracle") {
    const GroupPtr h = need(cat, o.h, "--H"), l = need(cat, o.l, "--L"), t = need(cat, o.t, "--T");
    const GroupPtr k = o.k.empty() ? l : cat.get(o.k);
    const OracleReport r = linearization_oracle(h, l, k, t, o.cap);
    emit(o, oracle_report(ctx, h, l, k, t, r));
    return r.pass() ? kPass : kFail;
  }
  if (cmd == "autmult") {
    const GroupPtr l = o.l.empty() ? cat.get("C1") : cat.get(o.l);
    const GroupPtr t = need(cat, o.t, "--T"), c = need(cat, o.c, "--C");
    const AutReport a = aut_multiplicities(l, t, c, o.cap);
    emit(o, aut_report(ctx, l, t, c, a));
    int total = 0;
    bool ok = a.relations_hold && a.projectors_ok;
    for (const auto& comp : a.components) {
      ok = ok && comp.isotypic_dim >= 0;
      total += comp.isotypic_dim;
    }
    return ok && total == a.module_dim ? kPass : kFail;
  }
  if (cmd == "eval") {
    const GroupPtr c = need(cat, o.c, "--C"), g = need(cat, o.g, "--G"), t = need(cat, o.t, "--T");
    if (o.module.empty()) throw InvalidInput("missing --module");
    const ModuleData v = module_from_json(read_json(o.module), *MorphismSpace::get(c, c, t, mode, o.cap));
    const EvaluationReport e = eval_simple_quotient(c, v, g, t, mode, o.cap);
    json r = report_header(ctx);
    r["C"] = c->name();
    r["G"] = g->name();
    r["T"] = t->name();
    r["field"] = field_name(mode);
    r["dim_tensor"] = e.dim_tensor;
    r["dim_L"] = e.dim_l;
    r["dim_J"] = e.dim_j;
    r["dim_S"] = e.dim_s;
    std::cout << r.dump(2) << "\n";
    return kPass;
  }
  throw InvalidInput("unknown command " + cmd);
}

int run_catalog(const std::string& action, const Options& o) {
  const std::string path = catalog_path(o);
  if (action == "list") {
    const Catalog cat = Catalog::with_file(path, o.cap);
    for (const auto& g : cat.groups()) std::cout << g->name() << "\t" << g->order() << "\n";
    return kPass;
  }
  if (action == "add") {
    if (o.file.empty()) throw InvalidInput("catalog add needs a descriptor file");
    for (const auto& name : append_to_catalog_file(path, o.file, o.cap)) std::cout << "added " << name << "\n";
    std::cout << path << ": " << Catalog::with_file(path, o.cap).groups().size() << " groups\n";
    return kPass;
  }
  if (action == "validate") {
    const std::string target = o.file.empty() ? path : o.file;
    std::size_t n = 0;
    if (std::filesystem::exists(target)) n = load_descriptor_file(target, o.cap).size();
    else if (!o.file.empty()) throw InvalidInput("cannot read " + target);
    const Catalog cat = Catalog::with_file(path, o.cap);
    std::cout << target << ": " << n << " valid descriptor(s); catalog " << cat.hash_hex() << "\n";
    return kPass;
  }
  throw InvalidInput("unknown catalog action " + action);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with shifted Green biset functors"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--L", o.l, "group L");
  app.add_option("--T", o.t, "shift group T")->capture_default_str();
  app.add_option("--H", o.h, "probe group H");
  app.add_option("--G", o.g, "group G (essential, eval)");
  app.add_option("--K", o.k, "source group of the inner biset (oracle, default L)");
  app.add_option("--C", o.c, "cyclic group C (autmult, eval, certify)");
  app.add_option("--field", o.field, "split | rational")->capture_default_str();
  app.add_option("--probes", o.probes, "comma-separated probe groups");
  app.add_option("--cap", o.cap, "order cap on group products")->capture_default_str();
  app.add_option("--out", o.out, "write the JSON report here and print a table");
  app.add_option("--threads", o.threads, "worker threads")->capture_default_str();
  app.add_option("--catalog", o.catalog, "catalog file (else $BISETLAB_CATALOG, else ./bisetlab_catalog.json)");
  app.add_option("--fixture", o.fixture, "algebra fixture name or file (radical, certify)");
  app.add_option("--module", o.module, "module file {\"dim\", \"action\"} (eval)");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"gram", "Gram matrix of the pairing on A(H x L)"},
      {"nondeg", "rank test for the pairing A(H x L) x A(L x H)"},
      {"radical", "radical of A(L x L) or of a fixture algebra"},
      {"certify", "semisimplicity certificate for (L, T, field, probes)"},
      {"essential", "dimension of the essential algebra at G"},
      {"oracle", "Burnside linearization cross-check"},
      {"autmult", "Aut(C) multiplicities on A(C x L)"},
      {"eval", "dimensions of L, J, S for a module V"}};
  std::string cmd;
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->callback([&cmd, n = name] { cmd = n; });

  auto* catalog = app.add_subcommand("catalog", "list | add <file> | validate [file]");
  std::string action;
  catalog->add_option("action", action)->required()->check(CLI::IsMember({"list", "add", "validate"}));
  catalog->add_option("file", o.file);
  catalog->callback([&cmd] { cmd = "catalog"; });

  auto* render = app.add_subcommand("render", "print a report as a table");
  render->add_option("report", o.file)->required();
  render->callback([&cmd] { cmd = "render"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (cmd == "catalog") return run_catalog(action, o);
    if (cmd == "render") {
      std::cout << render_report(read_json(o.file));
      return kPass;
    }
    return run(cmd, o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::logic_error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kFail;
  }
}
