#include "crig/cli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "crig/denjoy.hpp"
#include "crig/error.hpp"
#include "crig/euler.hpp"
#include "crig/finite_group.hpp"
#include "crig/fuchsian.hpp"
#include "crig/parallel.hpp"

namespace crig {
namespace {

Json path_json(const std::filesystem::path& p) { return p.string(); }

Representation with_tolerance(const Representation& rep, const RunConfig& cfg) {
  if (!cfg.tol) return rep;
  if (!(*cfg.tol > 0.0)) throw InputError("--tol must be positive");
  return Representation(rep.signature(), rep.images(), rep.id(), *cfg.tol);
}

bool is_blown_up(const Json& j) { return j.is_object() && j.contains("type") && j["type"] == "blown-up"; }

Representation load_rep(const std::filesystem::path& path, const RunConfig& cfg) {
  if (path.empty()) throw InputError("--rep is required");
  const Json j = read_json_file(path);
  if (is_blown_up(j)) throw InputError(path.string() + " holds a blown-up action, not a representation");
  return with_tolerance(representation_from_json(j), cfg);
}

Json blown_to_json(const BlownUpAction& b) {
  return {{"type", "blown-up"},
          {"base", to_json(b.base())},
          {"marked_point", b.marked_point()},
          {"lambda", b.options().lambda},
          {"free_check_depth", b.options().free_check_depth},
          {"census_depth", b.options().census_depth}};
}

BlownUpAction blown_from_json(const Json& j, const RunConfig& cfg) {
  auto num = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number()) throw InputError(std::string("blown-up action: missing number \"") + key + "\"");
    return j[key].get<double>();
  };
  BlowUpOptions opt;
  opt.lambda = num("lambda");
  opt.free_check_depth = static_cast<int>(num("free_check_depth"));
  opt.census_depth = static_cast<int>(num("census_depth"));
  if (!j.contains("base")) throw InputError("blown-up action: missing \"base\"");
  return BlownUpAction(with_tolerance(representation_from_json(j["base"]), cfg), num("marked_point"), opt);
}

void echo_common(Report& r, const RunConfig& cfg) {
  r.echo("iters", value::exact(cfg.iters, Source::Configured));
  r.echo("seed", value::exact(static_cast<std::int64_t>(cfg.seed), Source::Configured));
  r.echo("jobs", value::exact(cfg.jobs, Source::Configured));
  if (cfg.tol) r.echo("tol", value::configured(*cfg.tol));
}

Json cert_json(const Certificate& c) { return {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }

void add(Report& r, const Certificate& c) { r.check(c.name, c.pass, c.detail); }

Word random_reduced_word(std::mt19937_64& rng, std::uint32_t generators, int length) {
  std::uniform_int_distribution<std::uint32_t> pick(0, 2 * generators - 1);
  Word w;
  while (static_cast<int>(w.size()) < length) {
    const std::uint32_t code = pick(rng);
    const Letter l{code / 2, (code & 1) != 0};
    if (!w.empty() && w.back() == l.inverted()) continue;
    w.push_back(l);
  }
  return w;
}

bool width_ok(const CertifiedInterval& v, std::int64_t n) {
  if (v.exact) return true;
  // two ulps of outward rounding on top of the 2/n bound
  const double slack = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(v.mid()));
  return v.width() <= 2.0 / static_cast<double>(n) + slack;
}

Json cone_json(const std::vector<Rational>& cones) {
  Json out = Json::array();
  for (const auto& c : cones) out.push_back(value::exact(c));
  return out;
}

std::optional<GeometricRep> geometric_for(const OrbifoldSignature& sig) {
  if (sig == OrbifoldSignature{0, {3, 3, 4}}) return build_orbifold_334();
  if (sig.genus == 0 && sig.periods.size() == 4 && sig.periods[0] == 2 && sig.periods[1] == 2 && sig.periods[2] == 2 &&
      sig.periods[3] % 2 == 0 && sig.periods[3] >= 4)
    return build_orbifold_2222g(sig.periods[3] / 2);
  return std::nullopt;
}

}  // namespace

CommandOutput cmd_rot(const RunConfig& cfg) {
  Report r("rot");
  echo_common(r, cfg);
  r.echo("rep", path_json(cfg.rep));
  const Representation rep = load_rep(cfg.rep, cfg);
  std::vector<std::string> texts = rep.presentation().generators;
  texts.insert(texts.end(), cfg.words.begin(), cfg.words.end());
  std::vector<Word> words;
  for (const auto& t : texts) words.push_back(rep.parse(t));

  struct Row {
    CertifiedInterval translation;
    std::optional<FiniteOrderRotation> finite;
    std::string kind;
  };
  std::vector<Row> rows(words.size());
  parallel_for(words.size(), cfg.jobs, [&](std::size_t i) {
    const CircleHomeo f = rep.evaluate_word(words[i]);
    rows[i] = {certified_translation_number(canonical_lift(f), cfg.iters),
               exact_rotation_number_finite_order(f, cfg.max_order), f.kind_name()};
  });

  Json elements = Json::array();
  bool widths = true, finite_consistent = true;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Row& row = rows[i];
    Json e{{"word", rep.presentation().format(words[i])},
           {"map", row.kind},
           {"translation", value::interval(row.translation)},
           {"rotation", value::interval(reduce_mod1(row.translation))}};
    if (row.finite) {
      e["finite_order"] = {{"order", value::exact(row.finite->order)},
                           {"translation", value::exact(row.finite->translation)},
                           {"rotation", value::exact(row.finite->rotation)}};
      const double t = to_double(row.finite->translation);
      finite_consistent = finite_consistent && row.translation.lo <= t + 1e-12 && t - 1e-12 <= row.translation.hi;
    }
    widths = widths && width_ok(row.translation, cfg.iters);
    elements.push_back(std::move(e));
  }
  r.result("elements") = std::move(elements);
  r.check("interval_width", widths, "every non-exact interval has width <= 2/n");
  r.check("finite_order_consistent", finite_consistent, "exact finite-order values lie in the iterated intervals");
  return {std::move(r), std::nullopt};
}

CommandOutput cmd_euler(const RunConfig& cfg) {
  Report r("euler");
  echo_common(r, cfg);
  r.echo("rep", path_json(cfg.rep));
  r.echo("method", cfg.method);
  const Representation rep = load_rep(cfg.rep, cfg);
  r.result("signature") = to_string(rep.signature());

  if (!rep.is_surface()) {
    OrbifoldEulerDetail detail;
    const EulerNumber eu = euler_orbifold(rep, &detail);
    r.result("eu") = value::exact(*eu.isolated);
    r.result("relator_translation") = value::exact(detail.relator_translation);
    r.result("cone_rotations") = cone_json(detail.cone_rotations);
    r.result("chi") = value::exact(orbifold_euler_characteristic(rep.signature()));
    r.check("eu_isolated", true, "orbifold Euler number " + to_string(*eu.isolated));
    return {std::move(r), std::nullopt};
  }

  if (cfg.method != "relator" && cfg.method != "pants" && cfg.method != "both")
    throw InputError("--method must be relator, pants or both");
  const bool use_relator = cfg.method != "pants";
  const bool use_pants = cfg.method != "relator" && rep.genus() >= 2;
  if (cfg.method == "pants" && !use_pants) throw InputError("the pants method needs genus >= 2");

  std::optional<Rational> relator_value, pants_value;
  if (use_relator) {
    const EulerNumber e = euler_relator(rep);
    relator_value = *e.isolated;
    r.result("relator") = {{"eu", value::exact(*e.isolated)}};
  }
  if (use_pants) {
    const PantsDecomposition pants =
        cfg.pants.empty() ? canonical_pants(rep.genus()) : pants_from_json(read_json_file(cfg.pants), rep.presentation());
    std::vector<PantsTerm> terms;
    const EulerNumber e = euler_pants(rep, pants, cfg.iters, cfg.jobs, &terms);
    pants_value = *e.isolated;
    Json tau = Json::array();
    for (const auto& t : terms) tau.push_back(value::interval(t.tau));
    r.result("pants") = {{"eu", value::exact(*e.isolated)},
                         {"sum", value::interval(e.value)},
                         {"iterations", value::exact(e.iterations)},
                         {"terms", tau}};
  }
  const Rational eu = relator_value ? *relator_value : *pants_value;
  r.result("eu") = value::exact(eu);
  if (relator_value && pants_value) {
    r.check("method_agreement", *relator_value == *pants_value,
            "relator " + to_string(*relator_value) + ", pants " + to_string(*pants_value));
  }
  if (rep.genus() >= 1) {
    const Certificate mw = check_milnor_wood(eu, rep.genus());
    r.result("milnor_wood") = cert_json(mw);
    add(r, mw);
  }
  return {std::move(r), std::nullopt};
}

CommandOutput cmd_orbifold_chi(const RunConfig& cfg) {
  Report r("orbifold-chi");
  if (cfg.sig.empty()) throw InputError("--sig is required");
  const OrbifoldSignature sig = std::filesystem::exists(cfg.sig) ? signature_from_json(read_json_file(cfg.sig))
                                                                  : parse_signature(cfg.sig);
  sig.validate();
  r.echo("sig", to_string(sig));
  const Rational chi = orbifold_euler_characteristic(sig);
  r.result("chi") = value::exact(chi);
  r.result("hyperbolic") = chi < 0;
  r.check("signature_valid", true, to_string(sig));
  return {std::move(r), std::nullopt};
}

CommandOutput cmd_verify_cover(const RunConfig& cfg) {
  Report r("verify-cover");
  echo_common(r, cfg);
  if (cfg.hom.empty()) throw InputError("--hom is required");
  r.echo("hom", cfg.hom);

  std::optional<OrbifoldSignature> sig;
  if (!cfg.sig.empty()) {
    sig = std::filesystem::exists(cfg.sig) ? signature_from_json(read_json_file(cfg.sig)) : parse_signature(cfg.sig);
    sig->validate();
  }
  std::optional<FiniteGroupHom> hom;
  if (cfg.hom == "334") {
    hom = hom_334();
    if (!sig) sig = OrbifoldSignature{0, {3, 3, 4}};
  } else if (cfg.hom.rfind("2222g:", 0) == 0) {
    int g = 0;
    try {
      g = std::stoi(cfg.hom.substr(6));
    } catch (const std::exception&) {
      throw InputError("bad genus in --hom " + cfg.hom);
    }
    hom = hom_2222g(g);
    if (!sig) sig = OrbifoldSignature{0, {2, 2, 2, 2 * g}};
  } else {
    if (!sig) throw InputError("--sig is required with a hom file");
    hom = hom_from_json(read_json_file(cfg.hom), *sig);
  }
  if (orbifold_presentation(*sig).generators != hom->source.generators)
    throw InputError("hom does not match signature " + to_string(*sig));
  r.echo("sig", to_string(*sig));
  r.result("hom") = to_json(*hom);

  const Certificate relators = check_hom(*hom);
  const Certificate surjective = check_surjective(*hom);
  const Certificate torsion = torsion_orders_certificate(*hom, *sig);
  for (const auto& c : {relators, surjective, torsion}) add(r, c);
  r.result("certificates") = Json::array({cert_json(relators), cert_json(surjective), cert_json(torsion)});
  if (!relators.pass || !surjective.pass) return {std::move(r), std::nullopt};

  const auto index = static_cast<std::int64_t>(hom->target->order());
  r.result("index") = value::exact(index);
  r.result("chi") = value::exact(orbifold_euler_characteristic(*sig));
  int genus = 0;
  try {
    genus = kernel_genus(*sig, index);
    r.result("kernel_genus") = value::exact(genus);
    r.check("kernel_genus", true, "regular cover of genus " + std::to_string(genus));
  } catch (const InconsistentCoverError& e) {
    r.check("kernel_genus", false, e.what());
    return {std::move(r), std::nullopt};
  }

  SchreierResult schreier = reidemeister_schreier(orbifold_presentation(*sig), *hom);
  r.result("schreier") = {{"index", value::exact(static_cast<std::int64_t>(schreier.index))},
                          {"generators", value::exact(static_cast<std::int64_t>(schreier.generators.size()))},
                          {"expected", value::exact(static_cast<std::int64_t>(schreier.expected_count))}};
  r.check("schreier_index", static_cast<std::int64_t>(schreier.index) == index,
          std::to_string(schreier.index) + " cosets for a group of order " + std::to_string(index));

  const auto geo = geometric_for(*sig);
  if (!geo || !torsion.pass) {
    r.result("geometry") = "none";
    return {std::move(r), std::nullopt};
  }
  r.result("geometry") = geo->kind;
  try {
    const auto mats = kernel_matrices(*geo, *hom);
    double min_trace = std::numeric_limits<double>::infinity();
    for (const auto& m : mats) min_trace = std::min(min_trace, std::fabs(m.trace()));
    r.result("schreier_min_abs_trace") = value::sampled(min_trace, mats.size());
    r.check("schreier_non_elliptic", true, std::to_string(mats.size()) + " generators, min |trace| " + std::to_string(min_trace));
  } catch (const CertificationError& e) {
    r.check("schreier_non_elliptic", false, e.what());
  }
  const KernelScan scan = scan_kernel_words(*geo, *hom, cfg.kernel_words, cfg.max_length, cfg.seed);
  r.result("kernel_scan") = {{"sampled", value::exact(static_cast<std::int64_t>(scan.sampled))},
                             {"kernel_words", value::exact(static_cast<std::int64_t>(scan.kernel_words))},
                             {"min_abs_trace", value::sampled(scan.min_abs_trace, scan.kernel_words)}};
  r.check("kernel_scan_non_elliptic", scan.pass,
          std::to_string(scan.kernel_words) + " kernel words, min |trace| " + std::to_string(scan.min_abs_trace));

  OrbifoldEulerDetail detail;
  const Rational orb = *euler_orbifold(geo->rep, &detail).isolated;
  const Rational surface = *euler_relator(build_surface_group(genus).rep).isolated;
  r.result("orbifold_eu") = value::exact(orb);
  r.result("cone_rotations") = cone_json(detail.cone_rotations);
  r.result("surface_eu") = value::exact(surface);
  const Certificate mult = check_multiplicativity(orb, index, surface);
  r.result("multiplicativity") = cert_json(mult);
  add(r, mult);
  if (sig->periods == std::vector<int>{3, 3, 4}) {
    const ThirdsQuarters tq = split_thirds_quarters(orb);
    r.result("thirds_quarters") = {{"k", value::exact(tq.k)}, {"m", value::exact(tq.m)}};
    r.check("quarter_part_nonzero", tq.m % 4 != 0,
            to_string(orb) + " = " + std::to_string(tq.k) + "/3 + " + std::to_string(tq.m) + "/4");
  }
  return {std::move(r), std::nullopt};
}

CommandOutput cmd_fuchsian_build(const RunConfig& cfg) {
  Report r("fuchsian build");
  r.echo("kind", cfg.kind);
  GeometricRep geo = [&] {
    if (cfg.kind == "surface") return build_surface_group(cfg.genus);
    if (cfg.kind == "2222g") return build_orbifold_2222g(cfg.genus);
    if (cfg.kind == "334") return build_orbifold_334();
    throw InputError("--kind must be surface, 2222g or 334");
  }();
  if (cfg.kind != "334") r.echo("genus", value::exact(cfg.genus, Source::Configured));
  const Representation rep = with_tolerance(geo.rep, cfg);
  rep.validate();
  const auto relators = static_cast<std::uint64_t>(rep.presentation().relators.size());
  r.result("signature") = to_string(rep.signature());
  r.result("relator_residual") = value::sampled(geo.relator_residual, relators);
  r.result("witness_residual") = value::sampled(geo.witness_residual, geo.vertices.size());
  r.check("relators", geo.relator_residual <= kRelatorTolerance, "max relator residual " + std::to_string(geo.relator_residual));
  r.check("vertex_witness", geo.witness_residual <= kRelatorTolerance,
          "max vertex pairing defect " + std::to_string(geo.witness_residual));

  Json artifact = to_json(rep);
  Json vertices = Json::array();
  for (const auto& v : geo.vertices) vertices.push_back({v.real(), v.imag()});
  artifact["metadata"] = {{"kind", geo.kind},
                          {"vertices", vertices},
                          {"relator_residual", geo.relator_residual},
                          {"witness_residual", geo.witness_residual}};
  return {std::move(r), std::move(artifact)};
}

CommandOutput cmd_denjoy_blow_up(const RunConfig& cfg) {
  Report r("denjoy blow-up");
  echo_common(r, cfg);
  r.echo("rep", path_json(cfg.rep));
  r.echo("lambda", value::configured(cfg.lambda));
  r.echo("depth", value::exact(cfg.depth, Source::Configured));
  r.echo("point", value::configured(cfg.point));
  r.echo("samples", value::exact(static_cast<std::int64_t>(cfg.samples), Source::Configured));
  const Representation base = load_rep(cfg.rep, cfg);

  BlowUpOptions opt;
  opt.lambda = cfg.lambda;
  opt.free_check_depth = cfg.depth;
  opt.census_depth = cfg.census_depth;
  const BlownUpAction blown(base, cfg.point, opt);
  r.check("marked_point_free", true, "no word of length <= " + std::to_string(cfg.depth) + " fixes the marked point");
  r.result("census") = {{"intervals", value::exact(static_cast<std::int64_t>(blown.census().size()))},
                        {"inserted_total", value::sampled(blown.inserted_total(), blown.census().size())}};

  // semi-conjugacy onto the base action
  const CircleAction base_action(base);
  SemiConjugacyOptions so;
  so.samples = cfg.samples;
  so.seed = cfg.seed;
  const auto semi = check_semi_conjugacy(
      blown, base_action, [&](const SymbolicPoint& p) { return SymbolicPoint::base(blown.collapse(p)); },
      SymbolicPoint::inserted({}, 0.5), so);
  r.result("semi_conjugacy") = {{"samples", value::exact(static_cast<std::int64_t>(semi.samples))},
                                {"triples", value::exact(static_cast<std::int64_t>(semi.triples_checked))},
                                {"mismatches", value::exact(static_cast<std::int64_t>(semi.mismatches))},
                                {"equivariance_failures", value::exact(static_cast<std::int64_t>(semi.equivariance_failures))}};
  r.check("semi_conjugacy", semi.pass,
          std::to_string(semi.mismatches) + " mismatched triples of " + std::to_string(semi.triples_checked));

  // minimality: persistent gap after blow-up, shrinking gaps before
  auto gaps = [](const MinimalityResult& m) {
    Json out = Json::array();
    for (const auto& g : m.by_depth)
      out.push_back({{"depth", value::exact(g.depth)}, {"max_gap", value::sampled(g.max_gap, g.points)}});
    return out;
  };
  const double gap_threshold = blown.length({});
  const MinimalityResult mb = minimality_probe(blown, cfg.point + 0.25, cfg.depth, gap_threshold);
  const MinimalityResult m0 = minimality_probe(base, cfg.point + 0.25, cfg.depth, gap_threshold);
  r.result("minimality") = {{"blown_up", gaps(mb)}, {"base", gaps(m0)}};
  const bool witness_identity = mb.witness && mb.witness->empty();
  r.check("blown_up_gap", mb.gap_found && witness_identity,
          "final gap " + std::to_string(mb.by_depth.back().max_gap) + " vs inserted length " + std::to_string(gap_threshold));
  bool shrinking = true;
  for (std::size_t d = std::min<std::size_t>(4, m0.by_depth.size() - 1); d + 1 < m0.by_depth.size(); ++d)
    shrinking = shrinking && m0.by_depth[d + 1].max_gap <= m0.by_depth[d].max_gap;
  r.check("base_gap_shrinking", shrinking, "base max gap non-increasing from depth 4");

  // invariants through the literal circle maps of the blow-up
  const MeshRealization mesh = realize_mesh(blown, cfg.mesh);
  r.result("mesh") = {{"knots", value::exact(static_cast<std::int64_t>(mesh.knots))},
                      {"tolerance", value::configured(mesh.rep.tolerance())}};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> len(1, 6);
  const auto gens = static_cast<std::uint32_t>(base.presentation().generators.size());
  std::vector<Word> words;
  for (std::size_t i = 0; i < cfg.sampled_words; ++i) words.push_back(random_reduced_word(rng, gens, len(rng)));
  std::vector<std::pair<CertifiedInterval, CertifiedInterval>> rots(words.size());
  parallel_for(words.size(), cfg.jobs, [&](std::size_t i) {
    rots[i] = {rotation_number(base.evaluate_word(words[i]), cfg.iters),
               rotation_number(mesh.rep.evaluate_word(words[i]), cfg.iters)};
  });
  Json rows = Json::array();
  std::size_t agree = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const bool ok = overlaps_mod1(rots[i].first, rots[i].second, mesh.rep.tolerance());
    agree += ok;
    rows.push_back({{"word", base.presentation().format(words[i])},
                    {"base", value::interval(rots[i].first)},
                    {"blown_up", value::interval(rots[i].second)},
                    {"agree", ok}});
  }
  r.result("rotation_numbers") = std::move(rows);
  r.check("rotation_numbers_agree", agree == words.size(),
          std::to_string(agree) + " of " + std::to_string(words.size()) + " sampled words");
  if (base.is_surface()) {
    const Rational e0 = *euler_relator(base).isolated;
    const Rational e1 = *euler_relator(mesh.rep).isolated;
    r.result("euler") = {{"base", value::exact(e0)}, {"blown_up", value::exact(e1)}};
    r.check("euler_agree", e0 == e1, "base " + to_string(e0) + ", blown-up " + to_string(e1));
  }
  return {std::move(r), blown_to_json(blown)};
}

CommandOutput cmd_denjoy_check(const RunConfig& cfg) {
  Report r("denjoy check");
  echo_common(r, cfg);
  r.echo("a", path_json(cfg.a));
  r.echo("b", path_json(cfg.b));
  r.echo("samples", value::exact(static_cast<std::int64_t>(cfg.samples), Source::Configured));
  r.echo("correspondence", cfg.correspondence);
  if (cfg.a.empty() || cfg.b.empty()) throw InputError("--a and --b are required");
  const Json ja = read_json_file(cfg.a);
  const Json jb = read_json_file(cfg.b);

  std::optional<BlownUpAction> blown_a, blown_b;
  std::optional<CircleAction> circle_a, circle_b;
  if (is_blown_up(ja)) blown_a.emplace(blown_from_json(ja, cfg)); else circle_a.emplace(with_tolerance(representation_from_json(ja), cfg));
  if (is_blown_up(jb)) blown_b.emplace(blown_from_json(jb, cfg)); else circle_b.emplace(with_tolerance(representation_from_json(jb), cfg));
  const PointAction& A = blown_a ? static_cast<const PointAction&>(*blown_a) : *circle_a;
  const PointAction& B = blown_b ? static_cast<const PointAction&>(*blown_b) : *circle_b;
  if (!(A.representation().signature() == B.representation().signature()))
    throw InputError("the two actions are of different groups");

  std::string kind = cfg.correspondence;
  if (kind == "auto") kind = blown_a && circle_b ? "collapse" : "identity";
  Correspondence corr;
  if (kind == "collapse") {
    if (!(blown_a && circle_b)) throw InputError("the collapse correspondence needs a blown-up --a and a circle --b");
    corr = [&](const SymbolicPoint& p) { return SymbolicPoint::base(blown_a->collapse(p)); };
  } else if (kind == "flip") {
    if (!(circle_a && circle_b)) throw InputError("the flip correspondence needs two circle actions");
    corr = [](const SymbolicPoint& p) { return SymbolicPoint::base(-std::get<SymbolicPoint::Base>(p.v).x); };
  } else if (kind == "identity") {
    if (blown_a.has_value() != blown_b.has_value())
      throw InputError("the identity correspondence needs two actions of the same kind");
    corr = [](const SymbolicPoint& p) { return p; };
  } else {
    throw InputError("unknown correspondence \"" + kind + "\"");
  }
  r.result("correspondence") = kind;
  const SymbolicPoint start = blown_a ? SymbolicPoint::inserted({}, 0.5) : SymbolicPoint::base(cfg.point);
  SemiConjugacyOptions so;
  so.samples = cfg.samples;
  so.seed = cfg.seed;
  const auto semi = check_semi_conjugacy(A, B, corr, start, so);
  Json res{{"samples", value::exact(static_cast<std::int64_t>(semi.samples))},
           {"triples", value::exact(static_cast<std::int64_t>(semi.triples_checked))},
           {"mismatches", value::exact(static_cast<std::int64_t>(semi.mismatches))},
           {"equivariance_checks", value::exact(static_cast<std::int64_t>(semi.equivariance_checks))},
           {"equivariance_failures", value::exact(static_cast<std::int64_t>(semi.equivariance_failures))}};
  if (semi.witness) {
    Json w = Json::array();
    for (const auto& word : *semi.witness) w.push_back(A.representation().presentation().format(word));
    res["witness"] = w;
  }
  r.result("semi_conjugacy") = std::move(res);
  r.check("semi_conjugacy", semi.pass,
          std::to_string(semi.mismatches) + " mismatched triples, " + std::to_string(semi.equivariance_failures) +
              " equivariance failures");
  return {std::move(r), std::nullopt};
}

CommandOutput cmd_report_validate(const RunConfig& cfg) {
  Report r("report validate");
  r.echo("report", path_json(cfg.report));
  if (cfg.report.empty()) throw InputError("a report file is required");
  const Json j = read_json_file(cfg.report);
  try {
    validate_report(j);
    r.check("schema", true, "valid schema 1 report");
  } catch (const InputError& e) {
    r.check("schema", false, e.what());
  }
  return {std::move(r), std::nullopt};
}

}  // namespace crig
