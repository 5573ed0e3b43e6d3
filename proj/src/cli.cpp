#include "fqdist/cli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "fqdist/bounds.hpp"
#include "fqdist/characters.hpp"
#include "fqdist/error.hpp"
#include "fqdist/io.hpp"
#include "fqdist/pair_stats.hpp"
#include "fqdist/parallel.hpp"
#include "fqdist/spectral.hpp"

namespace fqdist::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kMaxViolations = 1000;
constexpr std::uint64_t kMaxNumericSpace = 100'000;
constexpr std::uint64_t kMaxLiftPairs = 100'000'000;

struct CheckLine {
  std::string name;
  bool ok;
  std::string detail;
};

// Pass/fail tallies per named check, in first-seen order.
class Checks {
 public:
  void record(const std::string& name, bool ok, const std::string& detail = {}) {
    Tally& t = tally(name);
    if (ok) {
      ++t.passed;
      return;
    }
    ++t.failed;
    if (violations_.size() < kMaxViolations) {
      violations_.push_back({{"check", name}, {"detail", detail}});
    }
  }
  void skip(const std::string& name) { ++tally(name).skipped; }
  void record(const CheckLine& line) { record(line.name, line.ok, line.detail); }

  bool failed() const {
    return std::any_of(tallies_.begin(), tallies_.end(), [](const Tally& t) { return t.failed > 0; });
  }

  void emit(json& report) const {
    json per = json::array();
    for (const Tally& t : tallies_) {
      per.push_back({{"name", t.name}, {"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}});
    }
    report["perCheck"] = std::move(per);
    report["violations"] = violations_;
  }

 private:
  struct Tally {
    std::string name;
    std::uint64_t passed, failed, skipped;
  };
  Tally& tally(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, tallies_.size()).first;
      tallies_.push_back({name, 0, 0, 0});
    }
    return tallies_[it->second];
  }

  std::vector<Tally> tallies_;
  std::map<std::string, std::size_t> index_;
  json violations_ = json::array();
};

json complex_json(Cpx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json counts_json(const PairCounts& c) {
  return {{"sq", c.sq}, {"zr", c.zr}, {"nonsq", c.nonsq}};
}

json mass_json(const SpectralMass& m) {
  return {{"omega0", to_string(m.omega0)},
          {"omegaPlus", to_string(m.omega_plus)},
          {"omegaMinus", to_string(m.omega_minus)},
          {"total", to_string(m.total())}};
}

json bound_json(const BoundReport& r) {
  return {{"bound", bound_kind_name(r.kind)},
          {"dMod4", r.tag.d_mod4},
          {"qMod4", r.tag.q_mod4},
          {"clause", r.tag.clause},
          {"branch", r.branch},
          {"lhs", to_string(r.lhs)},
          {"rhs", to_string(r.rhs)},
          {"slack", to_string(r.slack)},
          {"holds", r.holds}};
}

json field_json(const FieldCtx& f) {
  return {{"p", f.p()}, {"ell", f.ell()}, {"q", f.q()},
          {"modulus", std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end())}};
}

VecFq parse_vector(const FieldCtx& f, int d, const std::string& text) {
  VecFq v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      v.push_back(f.element(std::stoll(item)));
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "bad vector entry '" + item + "'");
    }
  }
  if (static_cast<int>(v.size()) != d) {
    throw Error(Errc::DimensionMismatch, "vector '" + text + "' needs " + std::to_string(d) + " entries");
  }
  return v;
}

CommandResult finish(json report, Checks& checks) {
  checks.emit(report);
  CommandResult out;
  out.exit_code = checks.failed() ? 2 : 0;
  report["exitCode"] = out.exit_code;
  out.report = std::move(report);
  return out;
}

json header(const RunConfig& cfg, const char* command) {
  return {{"command", command}, {"version", kVersion}, {"config", config_json(cfg)}};
}

std::string rat_of(std::uint64_t num, std::uint64_t den) {
  return to_string(Rat(BigInt(num), BigInt(den)));
}

}  // namespace

json config_json(const RunConfig& cfg) {
  json c = {{"command", cfg.command}, {"p", cfg.p}, {"ell", cfg.ell}, {"d", cfg.d},
            {"seed", cfg.seed}, {"seeds", cfg.seeds}, {"trials", cfg.trials},
            {"sizeMin", cfg.size_min}, {"sizeMax", cfg.size_max}, {"size", cfg.size},
            {"strategy", cfg.strategy}, {"restarts", cfg.restarts},
            {"nodeBudget", cfg.node_budget},
            {"format", cfg.format == Format::Json ? "json" : "csv"},
            {"threads", cfg.threads}};
  if (cfg.source) {
    const SetSource& s = *cfg.source;
    c["source"] = {{"kind", s.kind}, {"size", s.size}, {"seed", s.seed}, {"offset", s.offset},
                   {"direction", s.direction}, {"basis", s.basis}, {"radius", s.radius},
                   {"file", s.file.string()}};
  }
  if (cfg.output) c["output"] = cfg.output->string();
  if (cfg.witness) c["witness"] = cfg.witness->string();
  if (cfg.kernel_cache) c["kernelCache"] = cfg.kernel_cache->string();
  return c;
}

PointSet build_set(const FieldPtr& field, int d, const SetSource& src) {
  const FieldCtx& f = *field;
  GenSpec spec;
  spec.seed = src.seed;
  spec.size = src.size;
  if (!src.offset.empty()) spec.offset = parse_vector(f, d, src.offset);
  if (src.kind == "random") {
    spec.kind = GenSpec::Kind::Random;
  } else if (src.kind == "full") {
    spec.kind = GenSpec::Kind::FullSpace;
  } else if (src.kind == "line") {
    spec.kind = GenSpec::Kind::Line;
    spec.basis.push_back(parse_vector(f, d, src.direction));
  } else if (src.kind == "subspace") {
    spec.kind = GenSpec::Kind::Subspace;
    std::stringstream in(src.basis);
    std::string vec;
    while (std::getline(in, vec, ';')) spec.basis.push_back(parse_vector(f, d, vec));
  } else if (src.kind == "sphere") {
    spec.kind = GenSpec::Kind::SphereSlice;
    spec.radius = f.element(src.radius);
  } else if (src.kind == "file") {
    spec.kind = GenSpec::Kind::File;
    spec.path = src.file;
  } else if (src.kind == "lift") {
    spec.kind = GenSpec::Kind::ProductLift;
    spec.source = std::make_shared<const PointSet>(read_point_set_file(src.file));
  } else {
    throw Error(Errc::ParseError, "unknown set kind '" + src.kind + "'");
  }
  return generate(field, d, spec);
}

CommandResult cmd_gauss(const RunConfig& cfg) {
  const FieldPtr field = FieldCtx::make(cfg.p, cfg.ell);
  const FieldCtx& f = *field;
  const Characters ch(field);
  const double root_q = std::sqrt(static_cast<double>(f.q()));
  Checks checks;

  const Cpx direct = gauss_direct(ch, f.one());
  const Cpx closed = gauss_closed(f);
  const double residual = std::abs(direct - closed);
  checks.record("gauss_closed_form", residual < 1e-9 * root_q,
                "residual " + std::to_string(residual));

  json signs = json::array();
  Cpx power = 1.0;
  for (int n = 1; n <= 12; ++n) {
    power *= direct;
    if (n % 2 == 1) continue;
    const GaussSignPair s = gauss_signs(n, f);
    const Cpx normalized = power / std::pow(static_cast<double>(f.q()), n / 2);
    const double sigma_err = std::abs(normalized - Cpx(s.sigma));
    const double tau_err = std::abs(normalized * static_cast<double>(f.eta_minus_one()) - Cpx(s.tau));
    checks.record("gauss_sign_table", sigma_err < 1e-9 && tau_err < 1e-9,
                  "n=" + std::to_string(n));
    signs.push_back({{"n", n}, {"sigma", s.sigma}, {"tau", s.tau},
                     {"normalizedPower", complex_json(normalized)}});
  }

  double worst = 0;
  for (std::uint32_t a = 1; a < f.q(); ++a) {
    for (std::uint32_t b = 0; b < f.q(); ++b) {
      worst = std::max(worst, completing_square_residual(ch, {a}, {b}));
    }
  }
  checks.record("completing_square", worst < 1e-9 * root_q, "max residual " + std::to_string(worst));

  json report = header(cfg, "gauss");
  report["result"] = {{"field", field_json(f)},
                      {"direct", complex_json(direct)},
                      {"closed", complex_json(closed)},
                      {"residual", residual},
                      {"completingSquareMaxResidual", worst},
                      {"signs", std::move(signs)}};
  return finish(std::move(report), checks);
}

namespace {

struct TrialOutcome {
  std::uint64_t seed = 0;
  std::uint64_t size = 0;
  PairCounts counts;
  std::vector<CheckLine> lines;
  std::vector<BoundReport> bounds;
};

TrialOutcome run_trial(const FieldPtr& field, int d, const KernelTable& kernels,
                       std::uint64_t seed, std::uint64_t size) {
  const FieldCtx& f = *field;
  TrialOutcome out;
  out.seed = seed;
  out.size = size;
  const std::string tag = "seed=" + std::to_string(seed) + " size=" + std::to_string(size);
  try {
    GenSpec spec;
    spec.kind = GenSpec::Kind::Random;
    spec.size = size;
    spec.seed = seed;
    const PointSet a = generate(field, d, spec);
    out.counts = count_pairs(a, 1);
    const SpectralMass mass = spectral_masses_exact(a, kernels, 1);

    const Rat qd = rat_pow(f.q(), d);
    const Rat sz(static_cast<std::int64_t>(size));
    out.lines.push_back({"plancherel", mass.total() == sz / qd, tag});
    out.lines.push_back({"omega0_lower", mass.omega0 >= sz * sz / (qd * qd), tag});
    if (d % 2 == 1 && d >= 3) {
      const Omega0Bound b = omega0_bound_check(a, mass);
      out.lines.push_back({"omega0_decay", b.holds, tag + " slack=" + to_string(b.slack)});
    }
    if (d >= 2) {
      const SpectralPrediction pred = predict_from_spectrum(a, mass);
      out.lines.push_back({"spectral_prediction", pred.counts == out.counts, tag});
    }
    const std::uint64_t lifted = size * f.q();
    if (lifted * lifted <= kMaxLiftPairs) {
      const ConeLift lift = cone_lift_check(a, out.counts);
      out.lines.push_back({"cone_lift", lift.holds(),
                           tag + " incidences=" + std::to_string(lift.cone_incidences) +
                               " predicted=" + std::to_string(lift.predicted)});
    }
    if (d >= 2) {
      out.bounds = check_all(a, out.counts);
      for (const BoundReport& r : out.bounds) {
        out.lines.push_back({"bound_" + std::string(bound_kind_name(r.kind)), r.holds,
                             tag + " slack=" + to_string(r.slack)});
      }
    }
    out.lines.push_back({"no_exceptions", true, {}});
  } catch (const std::exception& e) {
    out.lines.push_back({"no_exceptions", false, tag + " " + e.what()});
  }
  return out;
}

}  // namespace

CommandResult cmd_verify(const RunConfig& cfg) {
  const FieldPtr field = FieldCtx::make(cfg.p, cfg.ell);
  const FieldCtx& f = *field;
  const int d = cfg.d;
  const std::uint64_t n = space_size(f, d, kMaxSpectralSpace);
  const std::uint64_t hi = cfg.size_max == 0 ? n : cfg.size_max;
  if (cfg.size_min < 1 || cfg.size_min > hi || hi > n) {
    throw Error(Errc::SizeTooLarge, "size range must satisfy 1 <= min <= max <= q^d");
  }
  if (cfg.trials < 1) throw Error(Errc::ZeroParameter, "trials must be positive");
  const KernelTable kernels = load_or_build_kernels(field, d, cfg.kernel_cache, cfg.threads);
  const Characters ch(field);
  Checks checks;

  // Trial 0 and 1 pin the ends of the size range; the rest are uniform in it.
  const auto trials = static_cast<std::size_t>(cfg.trials);
  std::vector<std::uint64_t> sizes(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    if (t == 0) {
      sizes[t] = cfg.size_min;
    } else if (t == 1) {
      sizes[t] = hi;
    } else {
      std::mt19937_64 rng(cfg.seed + t);
      sizes[t] = cfg.size_min + uniform_below(rng, hi - cfg.size_min + 1);
    }
  }
  std::vector<TrialOutcome> outcomes(trials);
  parallel_blocks(trials, cfg.threads, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t t = begin; t < end; ++t) {
      outcomes[t] = run_trial(field, d, kernels, cfg.seed + t, sizes[t]);
    }
  });

  std::ostringstream csv;
  csv << "seed,size,sq,zr,nonsq,bound,d_mod4,q_mod4,clause,branch,lhs,rhs,slack,holds\n";
  json sets = json::array();
  for (const TrialOutcome& o : outcomes) {
    for (const CheckLine& line : o.lines) checks.record(line);
    sets.push_back({{"seed", o.seed}, {"size", o.size}, {"pairCounts", counts_json(o.counts)}});
    for (const BoundReport& r : o.bounds) {
      csv << o.seed << ',' << o.size << ',' << o.counts.sq << ',' << o.counts.zr << ','
          << o.counts.nonsq << ',' << bound_kind_name(r.kind) << ',' << r.tag.d_mod4 << ','
          << r.tag.q_mod4 << ',' << r.tag.clause << ',' << r.branch << ',' << to_string(r.lhs)
          << ',' << to_string(r.rhs) << ',' << to_string(r.slack) << ',' << (r.holds ? 1 : 0)
          << '\n';
    }
  }

  // Numeric checks on the first nontrivial set and on the explicit varieties.
  json numeric;
  if (n <= kMaxNumericSpace) {
    GenSpec spec;
    spec.kind = GenSpec::Kind::Random;
    spec.size = sizes[trials > 2 ? 2 : trials - 1];
    spec.seed = cfg.seed + std::min<std::size_t>(2, trials - 1);
    const PointSet a = generate(field, d, spec);
    const PairCounts counts = count_pairs(a, cfg.threads);
    const double size_sq = static_cast<double>(a.size()) * static_cast<double>(a.size());
    const double master = master_formula_residual(ch, a, counts);
    checks.record("master_formula", master < 1e-7 * (1 + size_sq), "residual " + std::to_string(master));
    numeric["masterFormulaResidual"] = master;

    const PointSet s0 = enumerate_sphere_zero(field, d);
    const CountingLemmaResult cl = verify_counting_lemma(ch, a, s0);
    const double cl_err = std::abs(cl.fourier - static_cast<double>(cl.direct)) + std::abs(cl.fourier_imag);
    checks.record("counting_lemma", cl_err < 1e-7 * (1 + static_cast<double>(cl.direct)),
                  "error " + std::to_string(cl_err));
    numeric["countingLemma"] = {{"direct", cl.direct}, {"fourier", cl.fourier}};

    if (d >= 2) {
      const std::vector<Cpx> sphere_dft = dft_indicator(ch, s0);
      double worst = 0;
      for_each_vector(f, d, [&](std::uint64_t idx, std::span<const FqElem> m) {
        worst = std::max(worst, std::abs(sphere_dft[idx] - sphere0_fourier_formula(ch, d, m)));
      });
      checks.record("sphere0_transform", worst < 1e-9, "max error " + std::to_string(worst));
      numeric["sphere0TransformMaxError"] = worst;
    }
    if (n * f.q() <= kMaxNumericSpace) {
      const PointSet cone = enumerate_cone(field, d + 1);
      const std::vector<Cpx> cone_dft = dft_indicator(ch, cone);
      double worst = 0;
      for_each_vector(f, d + 1, [&](std::uint64_t idx, std::span<const FqElem> m) {
        worst = std::max(worst, std::abs(cone_dft[idx] - cone_fourier_formula(ch, d + 1, m)));
      });
      checks.record("cone_transform", worst < 1e-9, "max error " + std::to_string(worst));
      numeric["coneTransformMaxError"] = worst;
    } else {
      checks.skip("cone_transform");
    }
  } else {
    checks.skip("master_formula");
  }

  json report = header(cfg, "verify");
  report["result"] = {{"field", field_json(f)}, {"d", d}, {"sets", std::move(sets)},
                      {"numeric", std::move(numeric)}};
  CommandResult out = finish(std::move(report), checks);
  out.csv = csv.str();
  return out;
}

CommandResult cmd_analyze(const RunConfig& cfg) {
  if (!cfg.source) throw Error(Errc::ParseError, "analyze needs a set file or generator");
  const PointSet a = cfg.source->kind == "file"
                         ? read_point_set_file(cfg.source->file)
                         : build_set(FieldCtx::make(cfg.p, cfg.ell), cfg.d, *cfg.source);
  const FieldCtx& f = a.field();
  const int d = a.dim();
  Checks checks;

  json result = {{"field", field_json(f)}, {"d", d}, {"size", a.size()}};
  const PairCounts counts = count_pairs(a, cfg.threads);
  result["pairCounts"] = counts_json(counts);

  const std::vector<FqElem> delta = distance_set(a);
  json values = json::array();
  for (FqElem v : delta) values.push_back(v.idx);
  result["distanceSet"] = {{"values", std::move(values)},
                           {"size", delta.size()},
                           {"coverage", rat_of(delta.size(), f.q())}};

  const std::uint64_t n = space_size(f, d, std::uint64_t{1} << 62);
  if (n <= kMaxSpectralSpace) {
    const KernelTable kernels = load_or_build_kernels(a.field_ptr(), d, cfg.kernel_cache, cfg.threads);
    const SpectralMass mass = spectral_masses_exact(a, kernels, cfg.threads);
    result["spectralMass"] = mass_json(mass);
    const Rat sz(static_cast<std::int64_t>(a.size()));
    checks.record("plancherel", mass.total() == sz / rat_pow(f.q(), d));
    checks.record("omega0_lower", mass.omega0 * rat_pow(f.q(), 2 * d) >= sz * sz);
    if (d >= 2) {
      const SpectralPrediction pred = predict_from_spectrum(a, mass);
      checks.record("spectral_prediction", pred.counts == counts);
      result["prediction"] = {{"sqPlusHalfZr", to_string(pred.sq_plus_half_zr)},
                              {"halfZr", to_string(pred.half_zr)},
                              {"pairCounts", counts_json(pred.counts)}};
    }
    if (d % 2 == 1 && d >= 3) {
      const Omega0Bound b = omega0_bound_check(a, mass);
      checks.record("omega0_decay", b.holds, "slack " + to_string(b.slack));
      result["omega0Bound"] = {{"omega0", to_string(b.omega0)},
                               {"plancherelBound", to_string(b.plancherel_bound)},
                               {"decayBound", to_string(b.decay_bound)},
                               {"trivialLower", to_string(b.trivial_lower)},
                               {"slack", to_string(b.slack)},
                               {"holds", b.holds}};
    }
  } else {
    checks.skip("spectral_prediction");
  }

  json bounds = json::array();
  if (d >= 2) {
    for (const BoundReport& r : check_all(a, counts)) {
      checks.record("bound_" + std::string(bound_kind_name(r.kind)), r.holds,
                    "slack " + to_string(r.slack));
      bounds.push_back(bound_json(r));
    }
  }
  result["bounds"] = std::move(bounds);
  result["isSquareDistanceSet"] = counts.nonsq == 0;
  result["set"] = format_point_set(a);

  json report = header(cfg, "analyze");
  report["result"] = std::move(result);
  return finish(std::move(report), checks);
}

CommandResult cmd_search_square(const RunConfig& cfg) {
  const FieldPtr field = FieldCtx::make(cfg.p, cfg.ell);
  const int d = cfg.d;
  Checks checks;
  json result = {{"field", field_json(*field)}, {"d", d}, {"strategy", cfg.strategy}};

  std::optional<PointSet> best;
  if (cfg.strategy == "greedy") {
    best = greedy_square_distance_search(field, d, cfg.seed, cfg.restarts, cfg.threads);
  } else if (cfg.strategy == "exhaustive") {
    ExhaustiveResult ex = exhaustive_square_distance_max(field, d, cfg.node_budget);
    result["exact"] = ex.exact;
    result["budgetExhausted"] = ex.budget_exhausted;
    result["reachedCap"] = ex.reached_cap;
    result["fullEnumeration"] = ex.full_enumeration;
    result["nodes"] = ex.nodes;
    best = std::move(ex.witness);
  } else {
    throw Error(Errc::ParseError, "strategy must be greedy or exhaustive");
  }

  const Rat cap = square_set_size_bound(d, field->q());
  const CaseTag tag = case_tag(BoundKind::SquareSetSize, d, field->q());
  const bool valid = is_square_distance_set(*best);
  const bool within = Rat(static_cast<std::int64_t>(best->size())) <= cap;
  checks.record("square_distance_set", valid);
  checks.record("size_bound", within, "size " + std::to_string(best->size()) + " cap " + to_string(cap));
  result["size"] = best->size();
  result["bound"] = to_string(cap);
  result["clause"] = tag.clause;
  result["isSquareDistanceSet"] = valid;
  result["witness"] = format_point_set(*best);
  if (cfg.witness) write_point_set_file(*best, *cfg.witness);

  json report = header(cfg, "search-square");
  report["result"] = std::move(result);
  return finish(std::move(report), checks);
}

CommandResult cmd_coverage(const RunConfig& cfg) {
  const FieldPtr field = FieldCtx::make(cfg.p, cfg.ell);
  const FieldCtx& f = *field;
  const int d = cfg.d;
  const std::uint64_t n = space_size(f, d, std::uint64_t{1} << 62);
  if (cfg.size == 0 || cfg.size > n) throw Error(Errc::SizeTooLarge, "size must lie in [1, q^d]");
  const std::vector<std::uint64_t> seeds = cfg.seeds.empty() ? std::vector{cfg.seed} : cfg.seeds;

  // Hypothesis |A| >= 4 q^{(d+1)/2}, squared to stay integral.
  const BigInt size_sq = BigInt(cfg.size) * cfg.size;
  const bool hypothesis = size_sq >= 16 * boost::multiprecision::pow(BigInt(f.q()), d + 1);

  std::vector<std::size_t> covered(seeds.size());
  parallel_blocks(seeds.size(), cfg.threads, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t i = begin; i < end; ++i) {
      GenSpec spec;
      spec.kind = GenSpec::Kind::Random;
      spec.size = cfg.size;
      spec.seed = seeds[i];
      covered[i] = distance_set(generate(field, d, spec)).size();
    }
  });

  Checks checks;
  json runs = json::array();
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const bool flagged = hypothesis && covered[i] < f.q();
    checks.record("full_coverage_under_hypothesis", !flagged, "seed " + std::to_string(seeds[i]));
    runs.push_back({{"seed", seeds[i]},
                    {"distances", covered[i]},
                    {"coverage", rat_of(covered[i], f.q())},
                    {"coverageValue", static_cast<double>(covered[i]) / f.q()},
                    {"flagged", flagged}});
  }
  json report = header(cfg, "coverage");
  report["result"] = {{"field", field_json(f)}, {"d", d}, {"size", cfg.size},
                      {"hypothesisMet", hypothesis}, {"runs", std::move(runs)}};
  return finish(std::move(report), checks);
}

CommandResult run(const RunConfig& cfg) {
  try {
    if (cfg.command == "gauss") return cmd_gauss(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "analyze") return cmd_analyze(cfg);
    if (cfg.command == "search-square") return cmd_search_square(cfg);
    if (cfg.command == "coverage") return cmd_coverage(cfg);
    throw Error(Errc::ParseError, "unknown command '" + cfg.command + "'");
  } catch (const Error& e) {
    CommandResult out;
    out.exit_code = 1;
    out.report = {{"command", cfg.command}, {"version", kVersion}, {"config", config_json(cfg)},
                  {"perCheck", nlohmann::ordered_json::array()},
                  {"violations", nlohmann::ordered_json::array()},
                  {"error", {{"code", errc_name(e.code())}, {"message", e.what()}}},
                  {"exitCode", 1}};
    return out;
  }
}

}  // namespace fqdist::cli
