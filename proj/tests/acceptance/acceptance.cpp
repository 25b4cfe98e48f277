// Acceptance harness: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Every threshold the criteria depend on is pinned in the constants below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "apncodes/apncodes.hpp"

using namespace apncodes;

namespace {

// Finite-field results are exact, so every comparison is bit-exact; the only
// tolerances are size caps and budgets.
constexpr double kCorpusBudgetSeconds = 60.0;
constexpr std::uint64_t kFieldCap = std::uint64_t{1} << 14;
constexpr int kRandomSequencesPerLength = 200;
constexpr int kSparseSequencesPerLength = 100;
constexpr unsigned kMaxT = 12;
constexpr unsigned kMaxJ = 12;
constexpr unsigned kTrinomialExhaustiveM = 7;          // u^2 + u - 1 checked for every u, m odd <= 7
constexpr unsigned kTrinomialFullScanM = 5;            // planarity scanned for every u up to this m
constexpr std::size_t kTrinomialSampledU = 12;         // u values scanned above it
constexpr std::size_t kEvenWeightExhaustiveK = 16;
constexpr int kEvenWeightSamples = 256;
constexpr std::uint32_t kExactDistanceLength = 256;  // suite codes shorter than this get an exact d
constexpr double kExactDistanceSeconds = 5.0;
constexpr std::uint64_t kSeed = 0x5eed2024;

struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
  bool pass() const { return failures.empty() && checked > 0; }
  std::string summary(const std::string& unit) const {
    std::ostringstream s;
    s << checked - failures.size() << "/" << checked << " " << unit;
    for (std::size_t i = 0; i < failures.size() && i < 5; ++i) s << (i ? "; " : " | first failures: ") << failures[i];
    return s.str();
  }
};

std::string label(const FunctionSpec& f, Scalar q, unsigned m, const FieldCtx* ctx = nullptr) {
  std::ostringstream s;
  s << family_name(f.family) << "(q=" << q << ",m=" << m;
  if (f.h) s << ",h=" << f.h;
  if (f.kappa) s << ",kappa=" << f.kappa;
  if (f.family == Family::Trinomial && ctx) s << ",u=" << ctx->to_string(f.u);
  s << ")";
  return s.str();
}

std::vector<Scalar> primes_up_to(std::uint64_t limit) {
  std::vector<Scalar> out;
  for (std::uint64_t p = 2; p <= limit; ++p)
    if (is_prime(p)) out.push_back(static_cast<Scalar>(p));
  return out;
}

// Every (q, m) with q prime, m >= m_min and q^m <= kFieldCap.
std::vector<std::pair<Scalar, unsigned>> fields(unsigned m_min) {
  std::vector<std::pair<Scalar, unsigned>> out;
  for (Scalar q : primes_up_to(kFieldCap))
    for (unsigned m = m_min; ipow(q, m) <= kFieldCap; ++m) out.emplace_back(q, m);
  return out;
}

// Trinomial coefficients exercised on GF(3^m): all of them up to kTrinomialFullScanM,
// otherwise a fixed sample including 0, +-1 and alpha.
std::vector<FieldElement> trinomial_coefficients(const FieldCtx& ctx, std::mt19937_64& rng) {
  std::vector<FieldElement> u{FieldCtx::zero()};
  if (ctx.m() <= kTrinomialFullScanM) {
    for (std::uint32_t i = 0; i < ctx.n(); ++i) u.push_back(FieldElement{i});
    return u;
  }
  u.push_back(FieldCtx::one());
  u.push_back(ctx.neg(FieldCtx::one()));
  u.push_back(ctx.alpha_pow(1));
  std::uniform_int_distribution<std::uint32_t> pick(0, ctx.n() - 1);
  while (u.size() < kTrinomialSampledU) u.push_back(FieldElement{pick(rng)});
  return u;
}

// Monomial instances in the proved closed-form range over (q, m).
std::vector<FunctionSpec> covered_monomials(Scalar q, unsigned m) {
  std::vector<FunctionSpec> out;
  auto add = [&](Family f, unsigned h = 0, unsigned kappa = 0) {
    if (validate_params(f, q, m, h, kappa).theorem_covered) out.push_back(FunctionSpec::make(f, h, kappa));
  };
  if (q == 2) {
    add(Family::Inverse);
    add(Family::Welch);
    add(Family::Niho1);
    for (unsigned h = 1; h < m; ++h) {
      add(Family::Gold, h);
      add(Family::Kasami, h);
      add(Family::TwoToHMinusOne, h);
    }
  } else {
    add(Family::Square);
    add(Family::Cube);
    for (unsigned h = 1; h <= m; ++h) {
      add(Family::DembowskiOstrom, 0, h);
      add(Family::QhGeometric, h);
      add(Family::CoulterMathews, h);
    }
  }
  return out;
}

// Lower bounds stated for the closed-form families; nullopt when none is stated.
std::optional<std::uint64_t> stated_lower_bound(const FunctionSpec& f, Scalar q, unsigned m, SequenceKind kind) {
  if (kind == SequenceKind::Differential) {
    if (f.family == Family::Welch) return 6;
    return std::nullopt;
  }
  switch (f.family) {
    case Family::Gold: return 4;
    case Family::Welch: return 6;
    case Family::TwoToHMinusOne:
      if (f.h < 2) return std::nullopt;
      return (std::uint64_t{1} << (f.h - 2)) + ((m % 2 == 1 && f.h > 2) ? 2 : 1);
    case Family::Niho1: {
      const std::uint64_t base = std::uint64_t{1} << ((m - 1) / 4);
      return m % 8 == 1 ? base + 2 : base;
    }
    case Family::Kasami: {
      const std::uint64_t base = std::uint64_t{1} << f.h;
      return f.h % 2 == 0 ? base + 2 : base;
    }
    case Family::CoulterMathews:
      if (f.h == 3) return n_p(m, 3) ? 5 : 4;
      return std::nullopt;
    case Family::QhGeometric:
      if (f.h == 3) return 3;
      return std::nullopt;
    default: (void)q; return std::nullopt;
  }
}

struct SuiteResults {
  Tally spans;        // criterion 3
  Tally structure;    // criterion 7: g h = x^n - 1 on suite codes
  Tally subcodes;     // criterion 7: s vs differential relation for monomials
  Tally even_weight;  // criterion 7
  Tally bounds;       // criterion 8: stated lower bounds
  Tally sphere;       // criterion 8: sphere packing vs exact d
};

bool is_even_weight_code(const CyclicCode& c, std::mt19937_64& rng) {
  // Codewords are m(x) g(x) for deg m < k; weights are computed directly.
  auto parity_of = [&](const std::vector<Scalar>& msg) {
    std::vector<Scalar> word(c.n, 0);
    const auto& g = c.generator.coeffs();
    for (std::size_t i = 0; i < msg.size(); ++i)
      if (msg[i])
        for (std::size_t j = 0; j < g.size(); ++j) word[i + j] ^= g[j];
    return std::count(word.begin(), word.end(), 1u) % 2;
  };
  std::vector<Scalar> msg(c.k, 0);
  if (c.k <= kEvenWeightExhaustiveK) {
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << c.k); ++v) {
      for (std::size_t i = 0; i < c.k; ++i) msg[i] = (v >> i) & 1;
      if (parity_of(msg)) return false;
    }
    return true;
  }
  std::bernoulli_distribution bit(0.5);
  for (int t = 0; t < kEvenWeightSamples; ++t) {
    for (auto& b : msg) b = bit(rng);
    if (parity_of(msg)) return false;
  }
  return true;
}

void check_code(const CyclicCode& code, const FieldCtx& ctx, const CosetTable& cosets, const std::string& name,
                const FunctionSpec& f, SequenceKind kind, SuiteResults& out, std::mt19937_64& rng) {
  out.structure.check(code.generator * code.parity_check() == Poly::x_n_minus_one(ctx.q(), ctx.n()),
                      name + ": g h != x^n - 1");
  const bool parity_factor = ctx.q() == 2 && code.generator.eval(1) == 0;
  if (parity_factor && code.k > 0) out.even_weight.check(is_even_weight_code(code, rng), name + ": odd-weight codeword");
  if (code.k == 0) return;
  const BoundReport b = bound_report(code, cosets);
  if (auto stated = stated_lower_bound(f, ctx.q(), ctx.m(), kind))
    out.bounds.check(b.lower() >= *stated,
                     name + ": bch " + std::to_string(b.lower()) + " < stated " + std::to_string(*stated));
  if (code.n < kExactDistanceLength) {
    DistanceOptions opt;
    opt.max_seconds = kExactDistanceSeconds;
    const DistanceResult d = minimum_distance(code, b, opt);
    if (d.exact())
      out.sphere.check(b.sphere_packing_upper >= d.lo && b.lower() <= d.lo,
                       name + ": d=" + std::to_string(d.lo) + " outside [bch, sphere]");
  }
}

SuiteResults run_suite() {
  SuiteResults out;
  std::mt19937_64 rng(kSeed);
  for (auto [q, m] : fields(2)) {
    if (q == 2 && m < 2) continue;
    const FieldCtx ctx = default_field(q, m);
    const CosetTable cosets = build_cosets(q, ctx.n());
    std::vector<FunctionSpec> specs = covered_monomials(q, m);
    if (validate_params(Family::Trinomial, q, m).theorem_covered)
      for (auto u : trinomial_coefficients(ctx, rng)) specs.push_back(FunctionSpec::trinomial(u));

    for (const auto& f : specs) {
      const std::string name = label(f, q, m, &ctx);
      const PeriodicSequence s = defining_sequence(f, ctx);
      const SpectralResult measured = minimal_poly_spectral(s, ctx, &cosets);
      out.spans.check(measured.span == predicted_span(f, ctx),
                      name + ": span " + std::to_string(measured.span) + " vs " + std::to_string(predicted_span(f, ctx)));
      out.spans.check(measured.minimal == predicted_generator(f, ctx), name + ": generator differs from closed form");
      const CyclicCode code = make_code(measured.minimal, ctx, &cosets);
      check_code(code, ctx, cosets, name, f, SequenceKind::Defining, out, rng);

      const PeriodicSequence d = differential_sequence(f, ctx);
      const SpectralResult dm = minimal_poly_spectral(d, ctx, &cosets);
      const CyclicCode dcode = make_code(dm.minimal, ctx, &cosets);
      bool diff_covered = f.family == Family::Welch || f.family == Family::Square ||
                          f.family == Family::DembowskiOstrom;
      if (diff_covered) {
        const std::string dname = name + "[differential]";
        out.spans.check(dm.span == predicted_differential_span(f, ctx), dname + ": span " + std::to_string(dm.span));
        out.spans.check(dm.minimal == predicted_differential_generator(f, ctx), dname + ": generator differs");
        check_code(dcode, ctx, cosets, dname, f, SequenceKind::Differential, out, rng);
      }

      if (f.is_monomial()) {
        // One code is the other times the minimal polynomial of alpha^{-e}.
        const Poly me = minimal_polynomial(-static_cast<std::int64_t>(exponent_of(f, q, m) % ctx.n()), ctx);
        const SubcodeRelation rel = subcode_relation(code, dcode);
        const bool ok = (rel.kind == SubcodeKind::FirstInSecond || rel.kind == SubcodeKind::SecondInFirst) &&
                        rel.extra_factor == me;
        out.subcodes.check(ok, name + ": relation " + std::string(subcode_name(rel.kind)));
      }
    }
  }
  return out;
}

// Criterion 4: gcd, spectral and Berlekamp-Massey spans on one sequence.
bool three_way(const PeriodicSequence& s, const FieldCtx& ctx, const CosetTable& cosets) {
  const SpanResult g = minimal_poly_gcd(s);
  const SpectralResult sp = minimal_poly_spectral(s, ctx, &cosets);
  const BMResult bm = berlekamp_massey(s);
  return g.span == sp.span && sp.span == bm.span && g.minimal == sp.minimal && sp.minimal == bm.minimal;
}

Tally run_three_way(const RunReport& corpus) {
  Tally t;
  for (const auto& r : corpus.records) {
    const FieldCtx ctx = build_field(r.q, r.m, r.modulus);
    const CosetTable cosets = build_cosets(r.q, ctx.n());
    const FunctionSpec f = function_of(r, ctx);
    const PeriodicSequence s =
        r.kind == SequenceKind::Defining ? defining_sequence(f, ctx) : differential_sequence(f, ctx);
    t.check(three_way(s, ctx, cosets), std::string(r.id));
  }
  std::mt19937_64 rng(kSeed);
  const std::pair<Scalar, unsigned> lengths[] = {{2, 3}, {3, 3}, {2, 5}, {5, 3}};  // n = 7, 26, 31, 124
  for (auto [q, m] : lengths) {
    const FieldCtx ctx = default_field(q, m);
    const CosetTable cosets = build_cosets(q, ctx.n());
    std::uniform_int_distribution<Scalar> digit(0, q - 1);
    for (int i = 0; i < kRandomSequencesPerLength; ++i) {
      PeriodicSequence s{q, std::vector<Scalar>(ctx.n())};
      for (auto& v : s.terms) v = digit(rng);
      t.check(three_way(s, ctx, cosets), "uniform n=" + std::to_string(ctx.n()) + " #" + std::to_string(i));
    }
    // Low-span sequences Tr(sum c_j x^{e_j}) over a few random exponents.
    std::uniform_int_distribution<std::uint32_t> pick(0, ctx.n() - 1);
    std::uniform_int_distribution<int> terms(1, 3);
    for (int i = 0; i < kSparseSequencesPerLength; ++i) {
      std::vector<std::pair<FieldElement, std::uint32_t>> poly;
      for (int j = terms(rng); j > 0; --j) poly.emplace_back(FieldElement{pick(rng)}, pick(rng));
      PeriodicSequence s{q, std::vector<Scalar>(ctx.n())};
      for (std::uint32_t k = 0; k < ctx.n(); ++k) {
        FieldElement acc = FieldCtx::zero();
        for (auto [c, e] : poly) acc = ctx.add(acc, ctx.mul(c, ctx.pow(FieldElement{k}, e)));
        s.terms[k] = ctx.trace(acc);
      }
      t.check(three_way(s, ctx, cosets), "sparse n=" + std::to_string(ctx.n()) + " #" + std::to_string(i));
    }
  }
  return t;
}

Tally run_combinatorics() {
  Tally t;
  for (unsigned tt = 1; tt <= kMaxT; ++tt) {
    t.check(count_odd_eps(tt) == count_odd_eps_closed(tt), "N_t t=" + std::to_string(tt));
    // epsilon blocks partition {1, ..., T}.
    const EpsilonTable tab = epsilon_table(tt);
    std::vector<int> hits(tab.T + 1, 0);
    bool ok = true;
    for (const auto& [a, block] : tab.blocks) {
      ok = ok && block.size() == tab.eps.at(a) && !block.empty() && block.back() <= tab.T && 2 * block.back() > tab.T;
      for (auto v : block) ++hits[v];
    }
    for (std::uint64_t v = 1; v <= tab.T; ++v) ok = ok && hits[v] == 1;
    t.check(ok, "epsilon partition t=" + std::to_string(tt));
  }
  for (unsigned J = 1; J <= kMaxJ; ++J)
    for (unsigned tt = 1; tt <= J; ++tt) {
      // Strictly increasing (t-1)-tuples from [1, J) are (t-1)-subsets of a (J-1)-set.
      std::uint64_t count = 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (J - 1)); ++mask)
        count += static_cast<unsigned>(std::popcount(mask)) == tt - 1;
      t.check(n_choose_chain(J, tt) == count, "chain J=" + std::to_string(J) + " t=" + std::to_string(tt));
    }

  auto covered = [](Family f, Scalar q, unsigned m, unsigned h) {
    return validate_params(f, q, m, h).theorem_covered;
  };
  for (unsigned m = 2; ipow(2, m) <= kFieldCap; ++m) {
    const std::string ms = "m=" + std::to_string(m);
    if (covered(Family::Welch, 2, m, 0)) t.check(welch_cosets_hold(m), "five Welch cosets " + ms);
    if (covered(Family::Niho1, 2, m, 0)) {
      const unsigned h = (m - 1) / 4;
      t.check(shifted_block_cosets_hold(m, h, std::uint64_t{1} << (2 * h)), "Niho blocks " + ms);
    }
    for (unsigned h = 1; h < m; ++h) {
      const std::string hs = ms + " h=" + std::to_string(h);
      if (covered(Family::TwoToHMinusOne, 2, m, h)) t.check(two_to_h_cosets_hold(m, h), "2^h cosets " + hs);
      if (covered(Family::Kasami, 2, m, h))
        t.check(shifted_block_cosets_hold(m, h, std::uint64_t{1} << (m - h)), "Kasami blocks " + hs);
    }
  }
  for (auto [q, m] : fields(2)) {
    if (q == 2) continue;
    for (unsigned h = 1; h <= m; ++h) {
      const std::string hs = "q=" + std::to_string(q) + " m=" + std::to_string(m) + " h=" + std::to_string(h);
      if (covered(Family::QhGeometric, q, m, h)) t.check(geometric_cosets_hold(q, m, h), "geometric cosets " + hs);
      if (covered(Family::CoulterMathews, q, m, h))
        t.check(coulter_mathews_cosets_hold(m, h), "Coulter-Mathews cosets " + hs);
    }
  }
  return t;
}

struct UniformityResults {
  Tally apn_planar;
  Tally dy_aux;
};

UniformityResults run_uniformity() {
  UniformityResults out;
  std::mt19937_64 rng(kSeed);
  for (auto [q, m] : fields(1)) {
    if (q == 2 && m < 2) continue;
    const FieldCtx ctx = default_field(q, m);
    std::vector<FunctionSpec> specs;
    auto add = [&](Family f, unsigned h = 0, unsigned kappa = 0) {
      auto v = validate_params(f, q, m, h, kappa);
      if (v.valid && (v.claims_apn || v.claims_planar)) specs.push_back(FunctionSpec::make(f, h, kappa));
    };
    if (q == 2) {
      for (Family f : {Family::Inverse, Family::Welch, Family::Niho1, Family::Niho2, Family::Dobbertin}) add(f);
      for (unsigned h = 1; h < m; ++h)
        for (Family f : {Family::Gold, Family::Kasami, Family::TwoToHMinusOne}) add(f, h);
    } else {
      add(Family::Square);
      add(Family::Cube);
      for (unsigned k = 1; k <= m; ++k) add(Family::DembowskiOstrom, 0, k);
      for (unsigned h = 1; h < 2 * m; ++h) add(Family::CoulterMathews, h);
      if (validate_params(Family::Trinomial, q, m).valid)
        for (auto u : trinomial_coefficients(ctx, rng)) specs.push_back(FunctionSpec::trinomial(u));
    }
    for (const auto& f : specs) {
      const auto v = validate_params(f.family, q, m, f.h, f.kappa);
      const unsigned want = v.claims_planar ? 1 : 2;
      const unsigned got = differential_uniformity(f, ctx);
      out.apn_planar.check(got == want, label(f, q, m, &ctx) + ": uniformity " + std::to_string(got));
    }
  }
  for (unsigned m = 1; m <= kTrinomialExhaustiveM; m += 2) {
    const FieldCtx ctx = default_field(3, m);
    bool ok = true;
    auto v_of = [&](FieldElement u) { return ctx.sub(ctx.add(ctx.mul(u, u), u), FieldCtx::one()); };
    ok = ok && !v_of(FieldCtx::zero()).is_zero();
    for (std::uint32_t i = 0; i < ctx.n(); ++i) ok = ok && !v_of(FieldElement{i}).is_zero();
    out.dy_aux.check(ok, "u^2+u-1 vanishes in GF(3^" + std::to_string(m) + ")");
  }
  return out;
}

struct CorpusChecks {
  Tally generators;  // criterion 1
  Tally parameters;  // criterion 2
  Tally duals;       // criterion 7
  Tally structure;   // criterion 7
  Tally sphere;      // criterion 8
  std::size_t unresolved = 0;
};

CorpusChecks check_corpus(const RunReport& rep) {
  CorpusChecks c;
  for (const auto& msg : rep.lint) c.generators.check(false, "lint: " + msg);
  for (std::size_t i = 0; i < rep.records.size(); ++i) {
    const auto& r = rep.records[i];
    const auto& o = rep.outcomes[i];
    const std::string id(r.id);
    c.generators.check(o.generator_ok && o.erratum != CheckStatus::Fail, id);
    c.parameters.check(o.nk_ok, id + ": [n,k]");
    if (o.distance != CheckStatus::Unchecked) c.parameters.check(o.distance != CheckStatus::Fail, id + ": d");
    if (o.distance == CheckStatus::Unresolved) ++c.unresolved;
    const Poly xn = Poly::x_n_minus_one(r.q, r.n);
    c.structure.check(o.generator.divides(xn) && o.generator * exact_div(xn, o.generator) == xn, id + ": g h");
    if (o.d.exact() && o.k > 0)
      c.sphere.check(o.bounds.sphere_packing_upper >= o.d.lo, id + ": sphere packing below d");
  }
  struct DualTarget {
    std::size_t n, k, d;
  };
  for (const DualTarget t : {DualTarget{7, 4, 3}, {31, 6, 15}, {31, 16, 7}, {127, 8, 63}}) {
    bool found = false;
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
      const auto& r = rep.records[i];
      if (r.n == t.n && r.dual_k == t.k && r.dual_d == t.d) {
        found = true;
        c.duals.check(rep.outcomes[i].dual == CheckStatus::Pass, std::string(r.id) + ": dual");
      }
    }
    if (!found)
      c.duals.check(false, "no record with dual [" + std::to_string(t.n) + "," + std::to_string(t.k) + "," +
                               std::to_string(t.d) + "]");
  }
  return c;
}

Tally square_root_checks(const RunReport& rep) {
  Tally t;
  t.check(square_root_bound(7) == 4, "square_root_bound(7)");
  for (std::size_t i = 0; i < rep.records.size(); ++i) {
    const auto& r = rep.records[i];
    if (r.family == Family::Inverse && r.q == 2 && r.m % 2 == 1 && rep.outcomes[i].d.exact())
      t.check(square_root_bound(r.n) <= rep.outcomes[i].d.lo, std::string(r.id) + ": square-root bound above d");
  }
  return t;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const RunReport corpus = verify_examples();
  const double corpus_seconds = seconds_since(t0);
  const CorpusChecks cc = check_corpus(corpus);
  const SuiteResults suite = run_suite();
  const Tally spans3 = run_three_way(corpus);
  const Tally combi = run_combinatorics();
  const UniformityResults uni = run_uniformity();
  const Tally sqrt_checks = square_root_checks(corpus);

  int failed = 0;
  auto line = [&](int id, const char* name, bool pass, const std::string& detail) {
    std::printf("criterion %d %s: %s (%s)\n", id, pass ? "PASS" : "FAIL", name, detail.c_str());
    failed += !pass;
  };

  {
    std::ostringstream d;
    d << cc.generators.summary("generators") << ", " << corpus_seconds << " s of " << kCorpusBudgetSeconds << " s";
    line(1, "corpus generator polynomials", cc.generators.pass() && corpus_seconds < kCorpusBudgetSeconds, d.str());
  }
  line(2, "corpus [n,k,d]", cc.parameters.pass(),
       cc.parameters.summary("checks") + ", " + std::to_string(cc.unresolved) + " distances left as intervals");
  line(3, "span formulas", suite.spans.pass(), suite.spans.summary("closed-form comparisons"));
  line(4, "three-way span oracle", spans3.pass(), spans3.summary("sequences"));
  line(5, "combinatorics and coset lemmas", combi.pass(), combi.summary("checks"));
  line(6, "differential uniformity", uni.apn_planar.pass() && uni.dy_aux.pass(),
       uni.apn_planar.summary("instances") + ", " + uni.dy_aux.summary("fields for u^2+u-1"));
  {
    Tally all;
    for (const Tally* t : {&cc.structure, &cc.duals, &suite.structure, &suite.even_weight, &suite.subcodes}) {
      all.checked += t->checked;
      all.failures.insert(all.failures.end(), t->failures.begin(), t->failures.end());
    }
    std::ostringstream d;
    d << cc.duals.summary("duals") << ", " << (cc.structure.checked + suite.structure.checked) << " products, "
      << suite.even_weight.summary("even-weight codes") << ", " << suite.subcodes.summary("subcode relations");
    line(7, "structure", all.pass(), d.str() + (all.failures.empty() ? "" : " | " + all.failures.front()));
  }
  {
    Tally all;
    for (const Tally* t : {&suite.bounds, &suite.sphere, &cc.sphere, &sqrt_checks}) {
      all.checked += t->checked;
      all.failures.insert(all.failures.end(), t->failures.begin(), t->failures.end());
    }
    std::ostringstream d;
    d << suite.bounds.summary("stated lower bounds") << ", " << (suite.sphere.checked + cc.sphere.checked)
      << " exact distances vs sphere packing, " << sqrt_checks.summary("square-root checks");
    line(8, "bounds", all.pass(), d.str() + (all.failures.empty() ? "" : " | " + all.failures.front()));
  }
  std::printf("total %.1f s\n", seconds_since(t0));
  return failed == 0 ? 0 : 1;
}
