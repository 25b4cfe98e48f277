#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "apncodes/apncodes.hpp"

namespace {

using namespace apncodes;

enum Exit { kGreen = 0, kFailures = 1, kUsage = 2 };

struct CodeArgs {
  std::string family;
  unsigned q = 2;
  unsigned m = 0;
  unsigned h = 0;
  unsigned kappa = 0;
  std::string u = "1";
  std::uint64_t exponent = 1;
  std::string modulus;
  bool differential = false;
};

void add_code_options(CLI::App* cmd, CodeArgs& a) {
  cmd->set_help_flag("--help", "print this help message and exit");  // --h is a family parameter
  cmd->add_option("--family", a.family, "function family (see catalog)")->required();
  cmd->add_option("--q", a.q, "prime base field size")->default_val(2);
  cmd->add_option("--m", a.m, "extension degree")->required();
  cmd->add_option("--h", a.h, "family parameter h");
  cmd->add_option("--kappa", a.kappa, "Dembowski-Ostrom parameter kappa");
  cmd->add_option("--u", a.u, "trinomial coefficient u (e.g. 1, -1, alpha, alpha^5)");
  cmd->add_option("--exponent", a.exponent, "exponent for the generic family x^e");
  cmd->add_option("--modulus", a.modulus, "primitive modulus, e.g. x^7+x+1 (default: embedded or searched)");
  cmd->add_flag("--differential", a.differential, "use Tr(f(x+1)-f(x)) instead of Tr(f(x+1))");
}

BuildRequest to_request(const CodeArgs& a) {
  BuildRequest r;
  r.family = parse_family(a.family);
  r.q = a.q;
  r.m = a.m;
  r.h = a.h;
  r.kappa = a.kappa;
  r.u = a.u;
  r.exponent = a.exponent;
  if (!a.modulus.empty()) r.modulus = a.modulus;
  r.kind = a.differential ? SequenceKind::Differential : SequenceKind::Defining;
  return r;
}

std::string csv_row(const BuildRequest& r, const BuildResult& b) {
  std::ostringstream out;
  out << r.q << ',' << r.m << ',' << r.h << ',' << r.kappa << ','
      << (r.family == Family::Trinomial ? r.u : "") << ',' << family_name(r.family) << ',' << b.code.n
      << ',' << b.code.k << ',' << b.code.redundancy() << ',' << b.d.lo << ',' << b.d.hi << ",\""
      << b.code.generator.to_coeff_list() << "\",";
  for (std::size_t i = 0; i < b.code.zero_set.size(); ++i) out << (i ? " " : "") << b.code.zero_set[i];
  out << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic codes from APN and planar functions"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}))->default_val("json");

  unsigned fq = 2, fm = 0;
  std::string fmod;
  bool ftable = false;
  auto* field = app.add_subcommand("field", "describe GF(q^m) and its primitive modulus");
  field->add_option("--q", fq)->default_val(2);
  field->add_option("--m", fm)->required();
  field->add_option("--modulus", fmod);
  field->add_flag("--table", ftable, "include the alpha^i table");

  unsigned cq = 2, cm = 0;
  std::uint32_t cn = 0;
  auto* cosets = app.add_subcommand("cosets", "q-cyclotomic cosets modulo n (n defaults to q^m - 1)");
  cosets->add_option("--q", cq)->default_val(2);
  cosets->add_option("--m", cm);
  cosets->add_option("--n", cn);

  CodeArgs bargs;
  auto* build = app.add_subcommand("build", "build the code of one function instance");
  add_code_options(build, bargs);

  CodeArgs dargs;
  unsigned max_weight = 0;
  double max_seconds = 60;
  auto* distance = app.add_subcommand("distance", "bounds and minimum distance of one code");
  add_code_options(distance, dargs);
  distance->add_option("--max-weight", max_weight, "stop the low-weight search after this weight");
  distance->add_option("--max-seconds", max_seconds, "time budget")->default_val(60);

  std::string filter;
  auto* verify = app.add_subcommand("verify-examples", "rebuild every embedded worked example and compare");
  verify->add_option("--filter", filter, "only records whose id or family contains this text");

  std::string sweep_id;
  SweepRange range;
  unsigned sq = 0;
  auto* sweep = app.add_subcommand("sweep", "measure codes over an open-problem parameter range");
  sweep->add_option("--id", sweep_id, "sweep id or alias (see catalog)")->required();
  sweep->add_option("--q", sq, "base field (default depends on the sweep)");
  sweep->add_option("--m-min", range.m_min)->default_val(2);
  sweep->add_option("--m-max", range.m_max)->required();
  sweep->add_option("--h-min", range.h_min)->default_val(1);
  sweep->add_option("--h-max", range.h_max, "default: m");
  sweep->add_option("--cap", range.cap, "largest q^m")->default_val(std::uint64_t{1} << 14);

  auto* catalog = app.add_subcommand("catalog", "list function families and sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kGreen : kUsage;
  }

  try {
    if (*field) {
      FieldCtx ctx = fmod.empty() ? default_field(fq, fm) : build_field(fq, fm, fmod);
      Json j;
      j["q"] = ctx.q();
      j["m"] = ctx.m();
      j["n"] = ctx.n();
      j["modulus"] = ctx.modulus().to_string();
      if (ftable) {
        Json t = Json::array();
        for (std::uint32_t i = 0; i < ctx.n(); ++i) t.push_back(Json::array({i, ctx.to_vector(FieldElement{i})}));
        j["powers"] = t;
      }
      std::cout << j.dump(2) << '\n';
    } else if (*cosets) {
      if (cn == 0) cn = static_cast<std::uint32_t>(ipow(cq, cm) - 1);
      const auto t = build_cosets(cq, cn);
      if (format == "csv") {
        std::cout << "leader,size,elements\n";
        for (const auto& c : t.cosets()) {
          std::cout << c.leader << ',' << c.size() << ',';
          for (std::size_t i = 0; i < c.elements.size(); ++i) std::cout << (i ? " " : "") << c.elements[i];
          std::cout << '\n';
        }
      } else {
        Json j = Json::array();
        for (const auto& c : t.cosets()) j.push_back({{"leader", c.leader}, {"elements", c.elements}});
        std::cout << j.dump(2) << '\n';
      }
    } else if (*build || *distance) {
      BuildRequest r = to_request(*build ? bargs : dargs);
      if (*distance) {
        r.distance.max_weight = max_weight;
        r.distance.max_seconds = max_seconds;
      } else {
        r.distance.strategy = DistanceStrategy::BoundsOnly;
      }
      const BuildResult b = build_code(r);
      if (format == "csv") {
        std::cout << kSweepHeader << '\n' << csv_row(r, b);
      } else if (*distance) {
        Json j;
        j["n"] = b.code.n;
        j["k"] = b.code.k;
        j["bounds"] = bounds_json(b.bounds, b.d);
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << code_record(r, b).dump(2) << '\n';
      }
    } else if (*verify) {
      const RunReport rep = verify_examples(filter);
      if (format == "csv") {
        std::cout << "id,pass,generator,nk,prediction,distance,dual,erratum,seconds\n";
        for (std::size_t i = 0; i < rep.outcomes.size(); ++i) {
          const auto& o = rep.outcomes[i];
          std::cout << o.id << ',' << o.pass() << ',' << o.generator_ok << ',' << o.nk_ok << ','
                    << status_name(o.prediction) << ',' << status_name(o.distance) << ',' << status_name(o.dual)
                    << ',' << status_name(o.erratum) << ',' << o.seconds << '\n';
        }
      } else {
        std::cout << run_report_json(rep).dump(2) << '\n';
      }
      return rep.green() ? kGreen : kFailures;
    } else if (*sweep) {
      if (sq) range.q = sq;
      const auto rows = run_sweep(find_sweep(sweep_id), range);
      if (format == "json") {
        Json j = Json::array();
        for (const auto& r : rows)
          j.push_back({{"q", r.inst.q}, {"m", r.inst.m}, {"h", r.inst.h}, {"n", r.n}, {"k", r.k}, {"span", r.span},
                       {"d", Json::array({r.d_lo, r.d_hi})}, {"generator", r.generator.to_string()},
                       {"zero_set", r.zero_set}});
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << sweep_csv(rows);
      }
    } else if (*catalog) {
      Json fams = Json::array();
      for (const auto& f : kFamilies)
        fams.push_back({{"name", f.name}, {"formula", f.formula}, {"uses_h", f.uses_h}, {"uses_kappa", f.uses_kappa},
                        {"uses_u", f.uses_u}});
      Json sweeps = Json::array();
      for (const auto& s : sweep_catalog())
        sweeps.push_back({{"id", s.id}, {"alias", s.alias}, {"description", s.description}, {"default_q", s.default_q}});
      std::cout << Json{{"families", fams}, {"sweeps", sweeps}}.dump(2) << '\n';
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kGreen;
}
