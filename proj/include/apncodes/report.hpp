#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "analysis.hpp"
#include "corpus.hpp"
#include "cyclic_code.hpp"
#include "cyclotomy.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "functions.hpp"
#include "predict.hpp"
#include "sequence.hpp"

namespace apncodes {

using Json = nlohmann::ordered_json;

inline Json coeffs_json(const Poly& p) {
  Json a = Json::array();
  for (auto c : p.coeffs()) a.push_back(c);
  return a;
}

inline Json bounds_json(const BoundReport& b, const DistanceResult& d) {
  Json j;
  j["bch_lower"] = b.bch_lower;
  j["bch_lower_reciprocal"] = b.bch_lower_reciprocal;
  j["even_weight_lift"] = b.even_weight_lift;
  j["square_root_lower"] = b.square_root_lower ? Json(*b.square_root_lower) : Json(nullptr);
  j["lower"] = b.lower();
  j["sphere_packing_upper"] = b.sphere_packing_upper;
  if (d.exact())
    j["distance"] = d.lo;
  else
    j["distance"] = Json::array({d.lo, d.hi});
  j["strategy"] = strategy_name(d.strategy);
  return j;
}

struct BuildRequest {
  Family family = Family::Generic;
  Scalar q = 2;
  unsigned m = 0;
  unsigned h = 0;
  unsigned kappa = 0;
  std::string u = "1";
  std::uint64_t exponent = 1;
  std::optional<std::string> modulus;
  SequenceKind kind = SequenceKind::Defining;
  DistanceOptions distance;
};

struct BuildResult {
  FieldCtx ctx;
  FunctionSpec function;
  CyclicCode code;
  BoundReport bounds;
  DistanceResult d;
  ValidityReport validity;
  std::optional<Poly> predicted;
  std::optional<std::uint64_t> predicted_span;
};

inline FunctionSpec function_of(const BuildRequest& r, const FieldCtx& ctx) {
  if (r.family == Family::Generic) return FunctionSpec::generic(r.exponent);
  if (r.family == Family::Trinomial) return FunctionSpec::trinomial(ctx.parse(r.u));
  return FunctionSpec::make(r.family, r.h, r.kappa);
}

/// Builds the code of one function instance, with bounds, distance and the
/// closed-form prediction when the parameters are in a proved range.
inline BuildResult build_code(const BuildRequest& r) {
  FieldCtx ctx = r.modulus ? build_field(r.q, r.m, *r.modulus) : default_field(r.q, r.m);
  ValidityReport v = validate_params(r.family, r.q, r.m, r.h, r.kappa);
  if (!v.valid) throw InvalidParams(std::string(family_name(r.family)) + ": " + v.problems.front());
  FunctionSpec f = function_of(r, ctx);
  const CosetTable cosets = build_cosets(r.q, ctx.n());
  const PeriodicSequence s =
      r.kind == SequenceKind::Defining ? defining_sequence(f, ctx) : differential_sequence(f, ctx);
  CyclicCode code = make_code(minimal_poly_spectral(s, ctx, &cosets).minimal, ctx, &cosets);
  BuildResult out{std::move(ctx), f, std::move(code), {}, {}, std::move(v), {}, {}};
  if (out.code.k > 0) {
    out.bounds = bound_report(out.code, cosets);
    if (r.family == Family::Inverse && r.q == 2 && r.m % 2 == 1)
      out.bounds.square_root_lower = square_root_bound(out.code.n);
    out.d = minimum_distance(out.code, out.bounds, r.distance);
  }
  if (out.validity.theorem_covered && r.family != Family::Generic) {
    try {
      if (r.kind == SequenceKind::Defining) {
        out.predicted = predicted_generator(f, out.ctx);
        out.predicted_span = predicted_span(f, out.ctx);
      } else {
        out.predicted = predicted_differential_generator(f, out.ctx);
        out.predicted_span = predicted_differential_span(f, out.ctx);
      }
    } catch (const TheoremPreconditionUnmet&) {
      // covered for the defining sequence but no differential closed form
    }
  }
  return out;
}

inline Json code_record(const BuildRequest& req, const BuildResult& b) {
  Json j;
  j["family"] = family_name(req.family);
  j["q"] = req.q;
  j["m"] = req.m;
  j["modulus"] = b.ctx.modulus().to_string();
  Json params;
  if (req.h) params["h"] = req.h;
  if (req.kappa) params["kappa"] = req.kappa;
  if (req.family == Family::Trinomial) params["u"] = req.u;
  if (b.function.is_monomial()) params["exponent"] = exponent_of(b.function, req.q, req.m);
  j["params"] = params;
  j["sequence"] = req.kind == SequenceKind::Defining ? "defining" : "differential";
  j["n"] = b.code.n;
  j["k"] = b.code.k;
  j["span"] = b.code.redundancy();
  j["generator"] = b.code.generator.to_string();
  j["generator_coeffs"] = coeffs_json(b.code.generator);
  j["zero_set"] = b.code.zero_set;
  if (b.code.k > 0) j["bounds"] = bounds_json(b.bounds, b.d);
  Json v;
  v["claims_apn"] = b.validity.claims_apn;
  v["claims_planar"] = b.validity.claims_planar;
  v["theorem_covered"] = b.validity.theorem_covered;
  v["uncovered"] = b.validity.uncovered;
  j["validity"] = v;
  Json p;
  if (b.predicted) {
    p["generator"] = b.predicted->to_string();
    p["span"] = *b.predicted_span;
    p["match"] = *b.predicted == b.code.generator && *b.predicted_span == b.code.redundancy();
  } else {
    p = nullptr;
  }
  j["prediction"] = p;
  return j;
}

inline Json outcome_json(const ExampleRecord& r, const ExampleOutcome& o) {
  Json j;
  j["id"] = o.id;
  j["pass"] = o.pass();
  j["generator"] = o.generator_ok;
  j["nk"] = o.nk_ok;
  j["prediction"] = status_name(o.prediction);
  j["distance"] = status_name(o.distance);
  j["dual"] = status_name(o.dual);
  j["erratum"] = status_name(o.erratum);
  j["k"] = o.k;
  j["d"] = o.d.exact() ? Json(o.d.lo) : Json::array({o.d.lo, o.d.hi});
  j["exploratory"] = r.exploratory;
  j["citation"] = r.citation;
  j["notes"] = o.notes;
  j["seconds"] = o.seconds;
  return j;
}

struct RunReport {
  std::vector<ExampleRecord> records;
  std::vector<ExampleOutcome> outcomes;
  std::vector<std::string> lint;
  double seconds = 0;

  bool green() const {
    if (!lint.empty()) return false;
    for (const auto& o : outcomes)
      if (!o.pass()) return false;
    return true;
  }
};

inline RunReport verify_examples(std::string_view filter = {}, const DistanceOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.records = filter_corpus(filter);
  rep.lint = lint_corpus(rep.records);
  for (const auto& r : rep.records) rep.outcomes.push_back(verify_example(r, opt));
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline Json run_report_json(const RunReport& rep) {
  Json j;
  j["green"] = rep.green();
  j["records"] = rep.records.size();
  std::size_t passed = 0;
  Json ex = Json::array();
  std::set<std::pair<Scalar, unsigned>> fields;
  for (std::size_t i = 0; i < rep.outcomes.size(); ++i) {
    passed += rep.outcomes[i].pass();
    ex.push_back(outcome_json(rep.records[i], rep.outcomes[i]));
    fields.insert({rep.records[i].q, rep.records[i].m});
  }
  j["passed"] = passed;
  j["lint"] = rep.lint;
  j["examples"] = ex;
  Json env = Json::array();
  for (auto [q, m] : fields) env.push_back(Json::array({q, m}));
  j["fields"] = env;
  j["seconds"] = rep.seconds;
  return j;
}

// Open-problem sweeps: every instance in a parameter range is built and
// measured, with no theorem assertions.

struct SweepInstance {
  Scalar q;
  unsigned m;
  unsigned h;
  Family family;
  std::uint64_t exponent;  // for Generic
};

struct SweepDef {
  std::string_view id;
  std::string_view alias;
  std::string_view description;
  Scalar default_q;
  bool uses_h;
  /// Fills the instance for (q, m, h); returns false when the parameters do not apply.
  bool (*instance)(Scalar q, unsigned m, unsigned h, SweepInstance& out);
};

namespace detail {

inline bool monomial_instance(Family f, Scalar q, unsigned m, unsigned h, SweepInstance& out) {
  if (!validate_params(f, q, m, h).valid) return false;
  out = {q, m, h, f, 0};
  return true;
}

inline bool generic_instance(Scalar q, unsigned m, std::uint64_t e, SweepInstance& out) {
  out = {q, m, 0, Family::Generic, e};
  return true;
}

inline std::uint64_t p3(unsigned e) { return ipow(3, e); }

}  // namespace detail

inline const std::vector<SweepDef>& sweep_catalog() {
  static const std::vector<SweepDef> defs = {
      {"kasami-range", "open-1", "Kasami x^(2^(2h)-2^h+1) with h outside the proved range", 2, true,
       [](Scalar q, unsigned m, unsigned h, SweepInstance& o) {
         if (q != 2) return false;
         auto v = validate_params(Family::Kasami, q, m, h);
         if (!v.valid || v.theorem_covered) return false;
         return detail::monomial_instance(Family::Kasami, q, m, h, o);
       }},
      {"niho2", "open-2", "second Niho function, m = 3 mod 4", 2, false,
       [](Scalar q, unsigned m, unsigned, SweepInstance& o) {
         return detail::monomial_instance(Family::Niho2, q, m, 0, o);
       }},
      {"dobbertin", "open-3", "Dobbertin function, m = 5i", 2, false,
       [](Scalar q, unsigned m, unsigned, SweepInstance& o) {
         return detail::monomial_instance(Family::Dobbertin, q, m, 0, o);
       }},
      {"qh-bounds", "open-4", "x^((q^h-1)/(q-1)) distance bounds", 3, true,
       [](Scalar q, unsigned m, unsigned h, SweepInstance& o) {
         if (q == 2 || h < 1) return false;
         return detail::monomial_instance(Family::QhGeometric, q, m, h, o);
       }},
      {"cm-bounds", "open-5", "Coulter-Mathews x^((3^h+1)/2) distance bounds", 3, true,
       [](Scalar q, unsigned m, unsigned h, SweepInstance& o) {
         return detail::monomial_instance(Family::CoulterMathews, q, m, h, o);
       }},
      {"ternary-half", "open-11", "x^((3^m-3)/2) over GF(3^m)", 3, false,
       [](Scalar q, unsigned m, unsigned, SweepInstance& o) {
         if (q != 3 || m < 2) return false;
         return detail::generic_instance(q, m, (detail::p3(m) - 3) / 2, o);
       }},
      {"odd-inverse", "open-7", "inverse x^(q^m-2) with q odd", 3, false,
       [](Scalar q, unsigned m, unsigned, SweepInstance& o) {
         if (q == 2) return false;
         return detail::monomial_instance(Family::Inverse, q, m, 0, o);
       }},
      {"five-h", "open-8", "x^((5^h+1)/2) over GF(5^m), gcd(2m,h)=1", 5, true,
       [](Scalar q, unsigned m, unsigned h, SweepInstance& o) {
         if (q != 5 || h < 1 || std::gcd(2 * m, h) != 1) return false;
         return detail::generic_instance(q, m, (ipow(5, h) + 1) / 2, o);
       }},
      {"ternary-sqrt", "open-9", "x^((3^((m+1)/2)-1)/2) [+ (3^m-1)/2 if m = 1 mod 4], m odd", 3, false,
       [](Scalar q, unsigned m, unsigned, SweepInstance& o) {
         if (q != 3 || m % 2 == 0) return false;
         std::uint64_t e = (detail::p3((m + 1) / 2) - 1) / 2;
         if (m % 4 == 1) e += (detail::p3(m) - 1) / 2;
         return detail::generic_instance(q, m, e, o);
       }},
      {"ternary-eighth", "open-10", "x^((3^(m+1)-1)/8) [+ (3^m-1)/2 if m = 1 mod 4], m odd", 3, false,
       [](Scalar q, unsigned m, unsigned, SweepInstance& o) {
         if (q != 3 || m % 2 == 0) return false;
         std::uint64_t e = (detail::p3(m + 1) - 1) / 8;
         if (m % 4 == 1) e += (detail::p3(m) - 1) / 2;
         return detail::generic_instance(q, m, e, o);
       }},
      {"ternary-product", "", "x^((3^((m+1)/4)-1)(3^((m+1)/2)+1)), m = 3 mod 4", 3, false,
       [](Scalar q, unsigned m, unsigned, SweepInstance& o) {
         if (q != 3 || m % 4 != 3) return false;
         return detail::generic_instance(q, m, (detail::p3((m + 1) / 4) - 1) * (detail::p3((m + 1) / 2) + 1), o);
       }},
  };
  return defs;
}

inline const SweepDef& find_sweep(std::string_view id) {
  for (const auto& d : sweep_catalog())
    if (d.id == id || (!d.alias.empty() && d.alias == id)) return d;
  throw ParseError("unknown sweep '" + std::string(id) + "'");
}

struct SweepRange {
  std::optional<Scalar> q;
  unsigned m_min = 2;
  unsigned m_max = 0;  // empty range when below m_min
  unsigned h_min = 1;
  unsigned h_max = 0;  // defaults to m when the sweep uses h
  /// Largest field size q^m allowed.
  std::uint64_t cap = std::uint64_t{1} << 14;
  /// Small default budget: sweeps report an interval rather than stall.
  DistanceOptions distance{DistanceStrategy::Auto, 1048576.0, 1048576.0, 4e6, 0, 10.0};
};

inline constexpr std::string_view kSweepHeader = "q,m,h,kappa,u,family,n,k,span,d_lo,d_hi,generator,zero_set";

struct SweepRow {
  SweepInstance inst;
  std::uint32_t n = 0;
  std::size_t k = 0;
  std::size_t span = 0;
  std::uint64_t d_lo = 0, d_hi = 0;
  Poly generator;
  std::vector<std::uint32_t> zero_set;
};

inline std::vector<SweepRow> run_sweep(const SweepDef& def, const SweepRange& range) {
  const Scalar q = range.q.value_or(def.default_q);
  std::vector<SweepRow> rows;
  for (unsigned m = range.m_min; m <= range.m_max; ++m) {
    if (static_cast<double>(ipow(q, m)) > static_cast<double>(range.cap))
      throw CapExceeded("q^m = " + std::to_string(q) + "^" + std::to_string(m) + " exceeds the sweep cap " +
                        std::to_string(range.cap));
    const unsigned hmax = def.uses_h ? (range.h_max ? range.h_max : m) : 0;
    const unsigned hmin = def.uses_h ? range.h_min : 0;
    std::optional<FieldCtx> ctx;
    std::optional<CosetTable> cosets;
    for (unsigned h = hmin; h <= hmax; ++h) {
      SweepInstance inst{};
      if (!def.instance(q, m, h, inst)) continue;
      if (!ctx) {
        ctx = default_field(q, m);
        cosets = build_cosets(q, ctx->n());
      }
      const FunctionSpec f = inst.family == Family::Generic ? FunctionSpec::generic(inst.exponent)
                                                            : FunctionSpec::make(inst.family, inst.h);
      const auto s = defining_sequence(f, *ctx);
      const auto sp = minimal_poly_spectral(s, *ctx, &*cosets);
      const CyclicCode code = make_code(sp.minimal, *ctx, &*cosets);
      SweepRow row{inst, code.n, code.k, sp.span, 0, 0, code.generator, code.zero_set};
      if (code.k > 0) {
        const auto d = minimum_distance(code, *cosets, range.distance);
        row.d_lo = d.lo;
        row.d_hi = d.hi;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

/// CSV with the fixed header; generator as ascending coefficients, zero set as
/// space-separated coset leaders.
inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << r.inst.q << ',' << r.inst.m << ',' << r.inst.h << ",0,,"
        << (r.inst.family == Family::Generic ? "x^" + std::to_string(r.inst.exponent)
                                             : std::string(family_name(r.inst.family)))
        << ',' << r.n << ',' << r.k << ',' << r.span << ',' << r.d_lo << ',' << r.d_hi << ",\""
        << r.generator.to_coeff_list() << "\",";
    for (std::size_t i = 0; i < r.zero_set.size(); ++i) out << (i ? " " : "") << r.zero_set[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace apncodes
