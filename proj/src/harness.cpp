#include "fockbound/harness.hpp"

#include <charconv>
#include <cstdlib>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fockbound/fock.hpp"
#include "fockbound/measures.hpp"
#include "fockbound/sampling.hpp"
#include "fockbound/serialize.hpp"
#include "fockbound/shapes.hpp"
#include "fockbound/wreath.hpp"

namespace fockbound {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::int64_t parse_int_value(const std::string& s, const std::string& what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  require(ec == std::errc() && ptr == s.data() + s.size(),
          "bad integer for " + what + ": '" + s + "'");
  return v;
}

// Deterministic fan-out: chunked workers with chunk-local samplers; the
// per-instance RNG depends only on (family seed, index), and chunk results
// are merged in index order.
std::vector<VerificationRecord> sampled_family(
    const Action& action, std::size_t count, std::uint64_t family_seed,
    std::int64_t max_degree, std::int64_t max_cost, std::int64_t gamma_radius,
    const std::function<std::vector<VerificationRecord>(
        const Action&, PointSampler&, Rng&, std::size_t)>& instance) {
  const std::size_t workers = std::min<std::size_t>(
      std::max(1u, std::thread::hardware_concurrency()), 8);
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::vector<VerificationRecord>> partial(workers);
  std::vector<std::future<void>> futures;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    futures.push_back(std::async(std::launch::async, [&, w, lo, hi]() {
      PointSampler sampler(action, max_degree, max_cost, gamma_radius);
      for (std::size_t i = lo; i < hi; ++i) {
        Rng rng(family_seed + 0x9e3779b97f4a7c15ULL * (i + 1));
        auto recs = instance(action, sampler, rng, i);
        for (auto& r : recs) partial[w].push_back(std::move(r));
      }
    }));
  }
  for (auto& f : futures) f.get();
  std::vector<VerificationRecord> out;
  for (auto& p : partial)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

Variant suite_variant(const std::string& suite) { return variant_from_name(suite); }

SemigroupPoint resample(const Action& action, PointSampler& sampler, Rng& rng,
                        Variant variant) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    auto z = sampler.sample(variant, rng);
    if (z) return *z;
  }
  throw std::runtime_error("sampler failed to produce a point");
}

void run_fock_suite(Variant variant, const SuiteConfig& cfg, const Action& action,
                    ReportSink& sink, std::ostream& log) {
  const auto count = static_cast<std::size_t>(cfg.samples);
  const std::int64_t max_degree = 6;
  const std::int64_t max_cost = 6;
  const std::string vname = variant_name(variant);

  auto family = [&](std::string_view tag, auto&& fn) {
    auto seed = derive_seed(cfg.seed, std::string(tag) + ":" + vname);
    sink.merge(sampled_family(action, count, seed, max_degree, max_cost,
                              cfg.gamma_radius, fn));
  };

  // omega identity + structural sample families
  family("omega-identity", [&](const Action& a, PointSampler& s, Rng& rng,
                               std::size_t) {
    auto z = resample(a, s, rng, variant);
    return std::vector<VerificationRecord>{verify_omega_identity(a, z)};
  });
  family("translation-bound", [&](const Action& a, PointSampler& s, Rng& rng,
                                  std::size_t) {
    auto z = resample(a, s, rng, variant);
    auto g = s.sample_group(rng, std::min<std::int64_t>(3, cfg.gamma_radius));
    auto h = s.sample_group(rng, std::min<std::int64_t>(3, cfg.gamma_radius));
    return verify_translation_bound(a, g, h, z);
  });
  family("creation-bound", [&](const Action& a, PointSampler& s, Rng& rng,
                               std::size_t) {
    auto z = resample(a, s, rng, variant);
    bool ok = false;
    auto x = s.sample_letter_with_cost(z.g, rng.range(0, 3), rng, &ok);
    if (!ok) return std::vector<VerificationRecord>{};
    return verify_creation_bound(a, x, z, rng.coin() ? Side::Left : Side::Right);
  });
  family("omega-involution", [&](const Action& a, PointSampler& s, Rng& rng,
                                 std::size_t) {
    auto z = resample(a, s, rng, variant);
    return std::vector<VerificationRecord>{verify_omega_involution(a, z)};
  });
  if (variant != Variant::Anti) {
    family("length-q-invariance", [&](const Action& a, PointSampler& s, Rng& rng,
                                      std::size_t) {
      auto z = resample(a, s, rng, Variant::Full);
      auto zs = make_multi_point(Variant::Sym, quotient(a, z.tuple), z.g);
      auto dev = Rational(length_star(a, z) - length_star(a, zs)).abs();
      std::vector<VerificationRecord> out;
      out.push_back(make_record(claims::kLengthQInvariance, to_text(a, z), dev,
                                Rational(0)));
      return out;
    });
  }
  if (variant == Variant::Sym) {
    family("mu-q-compatibility", [&](const Action& a, PointSampler& s, Rng& rng,
                                     std::size_t) {
      auto z = resample(a, s, rng, Variant::Full);
      return std::vector<VerificationRecord>{
          verify_mu_q_compatibility(a, z.tuple, z.g)};
    });
  }
  family("semigroup-involution", [&](const Action& a, PointSampler& s, Rng& rng,
                                     std::size_t) {
    auto z1 = resample(a, s, rng, variant);
    auto z2 = resample(a, s, rng, variant);
    bool anti_hom = involute(a, multiply(a, z1, z2)) ==
                    multiply(a, involute(a, z2), involute(a, z1));
    bool order2 = involute(a, involute(a, z1)) == z1;
    std::vector<VerificationRecord> out;
    out.push_back(make_record(claims::kSemigroupInvolution,
                              to_text(a, z1) + " * " + to_text(a, z2),
                              Rational(anti_hom && order2 ? 0 : 1), Rational(0)));
    return out;
  });
  if (variant == Variant::Anti) {
    family("sign-permutation-law", [&](const Action& a, PointSampler& s, Rng& rng,
                                       std::size_t) {
      // random distinct letters, random permutation: sign flips per swap
      auto z = resample(a, s, rng, Variant::Anti);
      auto tuple = section(z.multi);
      std::vector<VerificationRecord> out;
      if (tuple.size() < 2) return out;
      int sign = sign_of(a, tuple);  // +1 by construction on the section
      for (int swaps = 0; swaps < 4; ++swaps) {
        auto i = rng.below(tuple.size());
        auto j = rng.below(tuple.size());
        if (i == j) continue;
        std::swap(tuple[i], tuple[j]);
        sign = -sign;
      }
      out.push_back(make_record(claims::kSignPermutationLaw,
                                tuple_to_text(a, tuple),
                                Rational(sign_of(a, tuple) == sign ? 0 : 1),
                                Rational(0)));
      return out;
    });
  }

  // exact operator checks on the truncation
  log << "  [" << vname << "] operator checks at truncation " << cfg.truncation
      << "\n";
  const auto alphabet = action.ball(std::min<std::int64_t>(2, cfg.truncation));
  FockSpace space(action, variant, cfg.truncation, alphabet);
  if (variant != Variant::Sym) {
    for (const auto& xi : alphabet)
      for (const auto& eta : alphabet)
        sink.add(check_q_commutation(space, xi, eta));
  }
  const auto gamma_ball =
      action.group().ball(std::min<std::int64_t>(2, cfg.gamma_radius));
  std::vector<TupleWord> labels{TupleWord{}};
  for (const auto& x : alphabet) labels.push_back(TupleWord{x});
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    for (std::size_t j = variant == Variant::Full ? 0 : i; j < alphabet.size();
         ++j) {
      if (variant == Variant::Anti && i == j) continue;
      labels.push_back(TupleWord{alphabet[i], alphabet[j]});
    }
  for (const auto& g : gamma_ball) {
    sink.add(check_U_phase(space, g));
    for (const auto& h : gamma_ball) sink.add(check_U_homomorphism(space, g, h));
  }
  sink.add(check_J_involution(space));
  for (const auto& label : labels) {
    for (const auto& g : gamma_ball) {
      sink.add(check_U_covariance(space, g, label, Side::Left));
      sink.add(check_U_covariance(space, g, label, Side::Right));
    }
    sink.add(check_JlJ_equals_r(space, label));
    sink.add(check_JrJ_equals_l(space, label));
    sink.add(check_adjoint_consistency(space, label, Side::Left));
    sink.add(check_adjoint_consistency(space, label, Side::Right));
  }
  for (std::size_t i = 0; i + 1 < labels.size() && i < 6; ++i) {
    sink.add(check_composite_creation(space, labels[i], labels[i + 1], Side::Left));
    sink.add(check_composite_creation(space, labels[i], labels[i + 1], Side::Right));
  }
  if (variant == Variant::Sym) sink.merge(check_sym_coefficients(space));
  if (variant == Variant::Anti) sink.merge(check_anti_coefficients(space));

  // q-inner oracle spot checks inside the suite (the acceptance suite runs
  // the exhaustive version)
  {
    Rng rng(derive_seed(cfg.seed, "q-inner:" + vname));
    Rational worst(0);
    for (int i = 0; i < 500; ++i) {
      TupleWord a, b;
      const auto deg = rng.range(0, 5);
      for (std::int64_t k = 0; k < deg; ++k) {
        a.push_back(alphabet[rng.below(alphabet.size())]);
        b.push_back(alphabet[rng.below(alphabet.size())]);
      }
      auto diff = q_inner_closed(action, a, b, space.q()) -
                  q_inner_permutation_sum(action, a, b, space.q());
      if (worst < diff.abs()) worst = diff.abs();
    }
    sink.add(make_record(claims::kQInnerOracle,
                         "sampled degree<=5 q=" + std::to_string(space.q()),
                         worst, Rational(0)));
  }

  // shell cover, both directions at a modest radius
  {
    const auto radius = std::min<std::int64_t>(cfg.shell_max, 4);
    log << "  [" << vname << "] shell cover at radius " << radius << "\n";
    auto cover = shell_cover(action, variant, radius);
    std::size_t misses = 0;
    std::size_t points = 0;
    for (std::int64_t r = 0; r <= radius; ++r) {
      for (auto& z : enumerate_shell(action, r, cfg.gamma_radius)) {
        if (variant == Variant::Anti && !z.multi.simple()) continue;
        SemigroupPoint p = z;
        if (variant == Variant::Full) {
          p = make_full_point(section(z.multi), z.g);
        } else {
          p.variant = variant;
        }
        ++points;
        if (!is_in_shape(action, p, cover)) ++misses;
      }
    }
    sink.add(make_record(claims::kShellCoverForward,
                         "radius=" + std::to_string(radius) + " points=" +
                             std::to_string(points),
                         Rational(static_cast<std::int64_t>(misses)), Rational(0)));

    Rng rng(derive_seed(cfg.seed, "shell-sup:" + vname));
    Rational worst(0);
    const auto sup_gamma_ball = action.group().ball(cfg.gamma_radius);
    const std::size_t gen_count = cover.generator_count();
    const std::size_t step = std::max<std::size_t>(1, gen_count / 512);
    for (std::size_t i = 0; i < gen_count; i += step) {
      auto gen = cover.generator(i);
      auto bound = generator_length_bound(action, gen);
      for (int k = 0; k < 8; ++k) {
        auto g = sup_gamma_ball[rng.below(sup_gamma_ball.size())];
        auto sp = make_multi_point(Variant::Sym, gen.left, action.group().identity());
        auto gp = make_multi_point(Variant::Sym, MultisetWord{}, g);
        auto tp = make_multi_point(Variant::Sym, gen.right, action.group().identity());
        auto z = multiply(action, multiply(action, sp, gp), tp);
        auto excess = Rational(length_star(action, z) - bound);
        if (worst < excess) worst = excess;
      }
    }
    sink.add(make_record(claims::kShellGeneratorSup,
                         "sampled generators of the radius-" +
                             std::to_string(radius) + " cover",
                         worst, Rational(0)));
  }

  // decay sweep at the configured exact range
  {
    DecayParams params;
    params.test = DecayTest::Creation;
    params.variant = variant;
    params.max_radius = cfg.shell_max;
    params.gamma_radius = cfg.gamma_radius;
    params.letter = action.ball(1).front();
    auto sweep = decay_sweep(action, params);
    sink.merge(std::move(sweep.records));
    DecayParams tparams = params;
    tparams.test = DecayTest::Translation;
    tparams.left = action.group().ball(1).back();
    tparams.right = tparams.left;
    auto tsweep = decay_sweep(action, tparams);
    sink.merge(std::move(tsweep.records));
  }

  // field operators and the crossed representations
  if (variant == Variant::Sym) {
    const auto x = action.ball(0).front();
    for (std::int64_t m = 0; m <= std::min<std::int64_t>(cfg.truncation, 6); ++m)
      sink.add(field_operator_norm(action, x, alphabet, m).record);
    FockSpace small(action, Variant::Sym, std::min<std::int64_t>(cfg.truncation, 4),
                    action.ball(1));
    auto fwd = exp_field(small, x, 0.5);
    auto bwd = exp_field(small, x, -0.5);
    auto defect = unitarity_defect(fwd);
    auto group_defect = dense_distance_to_identity(dense_multiply(fwd, bwd));
    sink.add(make_record(
        claims::kExpFieldUnitary,
        "t=0.5 N=" + std::to_string(small.level()),
        Rational(static_cast<std::int64_t>(defect * 1e12), 1000000000000LL),
        Rational(1, 100000000)));
    sink.add(make_record(
        claims::kExpFieldUnitary,
        "group-law t=0.5 N=" + std::to_string(small.level()),
        Rational(static_cast<std::int64_t>(group_defect * 1e12), 1000000000000LL),
        Rational(1, 100000000)));
  }
  {
    FockSpace crossed_space(action, variant, std::min<std::int64_t>(cfg.truncation, 3),
                            action.ball(1));
    CrossedSpace crossed(crossed_space,
                         std::min<std::int64_t>(cfg.gamma_radius, 2));
    CrossedFunction shell_indicator = [&](const TupleWord& w, const GroupElement&) {
      return Rational(static_cast<std::int64_t>(w.size()) <= 1 ? 1 : 0);
    };
    for (const auto& x : action.ball(1)) {
      auto label = TupleWord{x};
      sink.add(check_intertwining(crossed, label, shell_indicator,
                                  "shell-indicator"));
    }
    if (variant == Variant::Full) {
      for (const auto& x : action.ball(1))
        for (const auto& y : action.ball(1))
          sink.add(check_left_right_commutator(crossed, x, y));
    }
  }
}

void run_wreath_suite(const SuiteConfig& cfg, const Action& action,
                      ReportSink& sink, std::ostream& log) {
  Group delta(cfg.delta);
  wreath::WreathContext ctx(action, delta);
  const auto count = static_cast<std::size_t>(cfg.samples);
  log << "  [wreath] sampled families x" << count << "\n";

  const auto shape =
      wreath::make_shape(ctx,
                         [&] {
                           std::vector<GroupElement> ls;
                           for (const auto& e : delta.ball(2))
                             if (!delta.is_identity(e)) ls.push_back(e);
                           return ls;
                         }(),
                         action.ball(2), 4);
  const auto shapeB = wreath::make_shape(
      ctx, {delta.ball(1).back()}, action.ball(1), 2);

  const std::size_t workers = std::min<std::size_t>(
      std::max(1u, std::thread::hardware_concurrency()), 8);
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::vector<VerificationRecord>> partial(workers);
  std::vector<std::future<void>> futures;
  const auto seed = derive_seed(cfg.seed, "wreath");
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    futures.push_back(std::async(std::launch::async, [&, w, lo, hi]() {
      wreath::WreathSampler sampler(ctx, 4, 3, 2, cfg.gamma_radius);
      for (std::size_t i = lo; i < hi; ++i) {
        Rng rng(seed + 0x9e3779b97f4a7c15ULL * (i + 1));
        auto z = sampler.sample(rng);
        if (!z) continue;
        auto& out = partial[w];
        for (auto& r : wreath::verify_omega_structure(ctx, *z))
          out.push_back(std::move(r));
        auto g = sampler.sample_gamma(rng);
        bool ok = true;
        auto x = sampler.sample_syllable(rng, z->g, &ok);
        if (ok)
          for (auto& r : wreath::verify_wreath_bounds(ctx, g, x, *z))
            out.push_back(std::move(r));
        if (auto rec = wreath::verify_supp_ratio_instance(ctx, Rational(1), *z))
          out.push_back(std::move(*rec));
        if (wreath::in_A(ctx, *z, shape)) {
          for (auto& r : wreath::verify_closure_union(ctx, *z, shape, shapeB))
            out.push_back(std::move(r));
          out.push_back(wreath::verify_closure_inverse(ctx, *z, shape));
          if (ok)
            for (auto& r : wreath::verify_closure_letter(ctx, *z, shape, x))
              out.push_back(std::move(r));
          for (auto& r : wreath::verify_closure_translation(ctx, *z, shape, g))
            out.push_back(std::move(r));
        }
      }
    }));
  }
  for (auto& f : futures) f.get();
  for (auto& p : partial)
    for (auto& r : p) sink.add(std::move(r));

  log << "  [wreath] exact shells to radius " << cfg.shell_max << "\n";
  auto sweep = wreath::supp_ratio_shell_sweep(ctx, cfg.shell_max, cfg.gamma_radius);
  sink.merge(std::move(sweep.records));
  for (std::int64_t r = 0; r <= cfg.shell_max; ++r)
    for (const auto& z : wreath::enumerate_wreath_shell(ctx, r, cfg.gamma_radius))
      sink.add(wreath::verify_length_shell_membership(ctx, z, r));
}

}  // namespace

void SuiteConfig::validate() const {
  require(truncation >= 1, "truncation must be positive");
  require(gamma_radius >= 0, "gamma ball radius must be nonnegative");
  require(samples >= 1, "sample count must be positive");
  require(shell_max >= 0, "shell max must be nonnegative");
}

SuiteConfig default_suite_config() { return SuiteConfig{}; }

void apply_environment(SuiteConfig& cfg) {
  auto get = [](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    if (!v) return std::nullopt;
    return std::string(v);
  };
  if (auto v = get("FOCKBOUND_ACTION")) cfg.action_path = *v;
  if (auto v = get("FOCKBOUND_TRUNCATION"))
    cfg.truncation = parse_int_value(*v, "FOCKBOUND_TRUNCATION");
  if (auto v = get("FOCKBOUND_GAMMA_BALL"))
    cfg.gamma_radius = parse_int_value(*v, "FOCKBOUND_GAMMA_BALL");
  if (auto v = get("FOCKBOUND_SAMPLES"))
    cfg.samples = parse_int_value(*v, "FOCKBOUND_SAMPLES");
  if (auto v = get("FOCKBOUND_SHELL_MAX"))
    cfg.shell_max = parse_int_value(*v, "FOCKBOUND_SHELL_MAX");
  if (auto v = get("FOCKBOUND_SEED"))
    cfg.seed = static_cast<std::uint64_t>(parse_int_value(*v, "FOCKBOUND_SEED"));
  if (auto v = get("FOCKBOUND_OUT")) cfg.out_dir = *v;
}

void apply_config_file(SuiteConfig& cfg, const KeyValueFile& kv) {
  if (kv.has("action")) cfg.action_path = kv.get("action");
  if (kv.has("truncation"))
    cfg.truncation = parse_int_value(kv.get("truncation"), "truncation");
  if (kv.has("gamma-ball"))
    cfg.gamma_radius = parse_int_value(kv.get("gamma-ball"), "gamma-ball");
  if (kv.has("samples"))
    cfg.samples = parse_int_value(kv.get("samples"), "samples");
  if (kv.has("shell-max"))
    cfg.shell_max = parse_int_value(kv.get("shell-max"), "shell-max");
  if (kv.has("seed"))
    cfg.seed = static_cast<std::uint64_t>(parse_int_value(kv.get("seed"), "seed"));
  if (kv.has("out")) cfg.out_dir = kv.get("out");
  if (kv.has("delta")) {
    std::istringstream in(kv.get("delta"));
    std::string kind;
    std::int64_t rank = 1;
    in >> kind >> rank;
    if (kind == "free")
      cfg.delta = GroupDescriptor{GroupKind::Free, rank, {}};
    else if (kind == "free-abelian")
      cfg.delta = GroupDescriptor{GroupKind::FreeAbelian, rank, {}};
    else
      require(false, "delta must be 'free <rank>' or 'free-abelian <rank>'");
  }
}

ActionDescriptor builtin_action() {
  ActionDescriptor d;
  d.group = {GroupKind::FreeAbelian, 1, {}};
  d.orbits.resize(1);
  return d;
}

Action load_action(const SuiteConfig& cfg) {
  if (cfg.action_path.empty()) return Action(builtin_action());
  return Action(load_action_descriptor(cfg.action_path));
}

void run_named_suite(const std::string& suite, const SuiteConfig& cfg,
                     const Action& action, ReportSink& sink, std::ostream& log) {
  if (suite == "wreath") {
    run_wreath_suite(cfg, action, sink, log);
    return;
  }
  run_fock_suite(suite_variant(suite), cfg, action, sink, log);
}

int run_suites(const std::vector<std::string>& suites, const SuiteConfig& cfg,
               std::ostream& log) {
  cfg.validate();
  Action action = load_action(cfg);
  std::size_t violations = 0;
  for (const auto& suite : suites) {
    log << "suite " << suite << "\n";
    ReportSink sink;
    run_named_suite(suite, cfg, action, sink, log);
    sink.write(cfg.out_dir, suite);
    violations += sink.violation_count();
    log << "  " << sink.records().size() << " records, "
        << sink.violation_count() << " violations\n";
  }
  return violations == 0 ? 0 : 1;
}

std::vector<ClaimRow> list_claims() {
  std::vector<ClaimRow> rows;
  for (const auto& c : claims::kRegistry)
    rows.push_back(ClaimRow{std::string(c.id), std::string(c.anchor),
                            std::string(c.suites)});
  return rows;
}

}  // namespace fockbound
