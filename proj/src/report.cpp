#include "hypersurf/report.hpp"

#include <cctype>
#include <cmath>

#include "hypersurf/error.hpp"

namespace hypersurf {

namespace {

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x == 0.0 ? 0.0 : x;  // no negative zero
}

Json vector_json(const std::vector<double>& v) {
  Json arr = Json::array();
  for (double x : v) arr.push_back(number(x));
  return arr;
}

Json optional_vector(const std::optional<std::vector<double>>& v) {
  return v ? vector_json(*v) : Json(nullptr);
}

Json rational_vector(const RationalVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_fraction_string(x));
  return arr;
}

const char* mode_name(VarConvention::Mode m) { return m == VarConvention::Mode::Named ? "named" : "indexed"; }

Json header(const char* command, const AnalysisOptions* options) {
  Json j;
  j["tool"] = {{"name", "hypersurf"}, {"version", version()}};
  j["command"] = command;
  if (options) j["seed"] = options->seed;
  return j;
}

Json input_json(const PolynomialInput& in) {
  const auto d = in.polynomial.degree();
  return {{"text", in.text},
          {"canonical", format(in.polynomial, in.convention)},
          {"dim", in.polynomial.dim()},
          {"variables", mode_name(in.convention.mode)},
          {"degree", d ? Json(*d) : Json(nullptr)}};
}

void require_nonconstant(const Polynomial& p) {
  if (p.is_constant()) throw DomainError("a non-constant polynomial is required");
}

void require_hypersurface_dim(const Polynomial& p) {
  if (p.dim() < 2) throw DomainError("hypersurface analysis needs at least 2 variables");
}

CmcOptions cmc_options(const AnalysisOptions& o) {
  CmcOptions c;
  c.sample_count = o.samples;
  c.tolerance = o.tolerance;
  c.seed = o.seed;
  return c;
}

Json sampled_regularity(const CurvatureReport& r) {
  Json j;
  j["method"] = "sampled";
  if (r.sampling.variety_not_found) {
    j["status"] = "NoPointsFound";
  } else {
    j["status"] = r.sampling.rejected_low_gradient == 0 ? "RegularOnSamples" : "NearSingularSamples";
  }
  double min_grad = std::numeric_limits<double>::infinity();
  for (const auto& s : r.samples) min_grad = std::min(min_grad, s.gradient_norm);
  j["min_gradient_norm"] = number(min_grad);
  j["rejected_low_gradient"] = r.sampling.rejected_low_gradient;
  j["regularity_floor"] = kRegularityFloor;
  return j;
}

Json quadric_section(const Polynomial& p, const VarConvention& conv, const AnalysisOptions& options) {
  const auto cls = classify_quadric(p);
  Json j = to_json(cls);
  j["regularity"] = to_json(quadric_regularity(p));
  j["lineality"] = to_json(lineality_split(p), conv);
  if (cls.kind == QuadricClass::Kind::Sphere || cls.kind == QuadricClass::Kind::RoundCylinder) {
    const auto cmp = predicted_vs_numeric(p, cls, options.seed);
    j["predicted_vs_numeric"] = {{"predicted", number(cmp.predicted)},
                                 {"max_relative_deviation", number(cmp.max_relative_deviation)},
                                 {"samples", cmp.samples}};
  } else {
    j["predicted_vs_numeric"] = nullptr;
  }
  return j;
}

}  // namespace

const char* version() { return HYPERSURF_VERSION; }

PolynomialInput PolynomialInput::parse(std::string_view text, std::size_t dim,
                                       std::optional<VarConvention::Mode> mode) {
  PolynomialInput in;
  in.text = std::string(text);
  if (dim == 0) {
    const auto m = mode.value_or(VarConvention::Mode::Named);
    in.convention = {m, infer_dimension(text, m)};
  } else {
    in.convention = mode ? VarConvention{*mode, dim} : VarConvention::automatic(dim);
  }
  in.polynomial = hypersurf::parse(text, in.convention);
  return in;
}

SphereQuadric parse_sphere_spec(std::string_view spec, std::size_t first_var) {
  const auto open = spec.find('(');
  const auto close = spec.find(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw ParseError("sphere spec must look like k,(a1,...,ak+1),r2", 0);
  }
  auto head = spec.substr(0, open);
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back()))) head.remove_suffix(1);
  if (head.empty() || head.back() != ',') throw ParseError("expected ',' before '('", open);
  head.remove_suffix(1);
  const Rational k = parse_rational(head);
  if (k.get_den() != 1 || k < 1) throw ParseError("sphere dimension k must be a positive integer", 0);

  SphereQuadric q;
  q.k = k.get_num().get_ui();
  q.first_var = first_var;
  std::string_view inner = spec.substr(open + 1, close - open - 1);
  std::size_t offset = open + 1;
  while (true) {
    const auto comma = inner.find(',');
    try {
      q.center.push_back(parse_rational(inner.substr(0, comma)));
    } catch (const ParseError& e) {
      throw ParseError("bad center coordinate", offset + e.position());
    }
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
    offset += comma + 1;
  }
  auto tail = spec.substr(close + 1);
  std::size_t tail_offset = close + 1;
  while (!tail.empty() && std::isspace(static_cast<unsigned char>(tail.front()))) {
    tail.remove_prefix(1);
    ++tail_offset;
  }
  if (tail.empty() || tail.front() != ',') throw ParseError("expected ',' after ')'", tail_offset);
  tail.remove_prefix(1);
  q.radius_sq = parse_rational(tail);
  if (q.center.size() != q.k + 1) {
    throw DomainError("sphere center needs k+1 = " + std::to_string(q.k + 1) + " coordinates");
  }
  if (q.radius_sq <= 0) throw DomainError("sphere radius_sq must be positive");
  return q;
}

Json to_json(const Rational& q) { return to_fraction_string(q); }

Json to_json(const SignVerdict& v, const Polynomial& p, const VarConvention& conv) {
  const bool exact = v.evidence == SignEvidence::ExactQuadratic || v.evidence == SignEvidence::EvenMonomials;
  Json nulls = Json::array();
  for (const auto& d : v.null_directions) nulls.push_back(rational_vector(d));
  return {{"degree", v.degree},
          {"form", format(leading_form(p), conv)},
          {"kind", to_string(v.kind)},
          {"evidence", to_string(v.evidence)},
          {"exact", exact},
          {"definite", exact ? Json(v.definite) : Json(nullptr)},
          {"witness_pos", optional_vector(v.witness_pos)},
          {"witness_neg", optional_vector(v.witness_neg)},
          {"null_directions", nulls},
          {"samples", v.samples},
          {"descents", v.descents}};
}

Json to_json(const CurvatureReport& r, const VarConvention& conv) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["orientation"] = "N = grad P / |grad P|; H = trace(-dN) / n";
  j["c_estimate"] = number(r.c_estimate);
  j["c_exact"] = r.c_exact ? to_json(*r.c_exact) : Json(nullptr);
  j["tolerance"] = r.tolerance;
  j["max_deviation"] = number(r.max_deviation);
  j["spread"] = number(r.spread);
  if (r.certificate) {
    j["certificate"] = {{"identity", "cmc_defect(P, c_exact) = cofactor * P"},
                        {"division_variable", conv.name(*r.certificate_variable)},
                        {"cofactor_terms", r.certificate->term_count()},
                        {"cofactor", format(*r.certificate, conv)}};
  } else {
    j["certificate"] = nullptr;
  }
  j["sampling"] = {{"requested", r.sampling.requested},
                   {"starts", r.sampling.starts},
                   {"converged", r.sampling.converged},
                   {"rejected_low_gradient", r.sampling.rejected_low_gradient},
                   {"returned", r.samples.size()},
                   {"variety_not_found", r.sampling.variety_not_found}};
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    samples.push_back({{"point", vector_json(s.point)},
                       {"H", number(s.mean_curvature)},
                       {"residual", number(s.residual)},
                       {"gradient_norm", number(s.gradient_norm)}});
  }
  j["samples"] = std::move(samples);
  return j;
}

Json to_json(const QuadricClass& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["description"] = c.description;
  const bool round = c.kind == QuadricClass::Kind::Sphere || c.kind == QuadricClass::Kind::RoundCylinder;
  if (round) {
    j["k"] = c.k;
    j["center"] = rational_vector(c.center);
    j["radius_sq"] = to_json(c.radius_sq);
    j["scale"] = to_json(c.scale);
    Json proj = Json::array();
    for (std::size_t i = 0; i < c.projector.rows(); ++i) proj.push_back(rational_vector(c.projector.column(i)));
    j["projector"] = std::move(proj);
  }
  if (c.curvature_num_sq && c.curvature_den_sq) {
    j["mean_curvature_abs"] = {{"num_sq", to_json(*c.curvature_num_sq)},
                               {"den_sq", to_json(*c.curvature_den_sq)},
                               {"value", number(c.predicted_mean_curvature_abs())}};
  } else {
    j["mean_curvature_abs"] = nullptr;
  }
  return j;
}

Json to_json(const RegularityResult& r) {
  return {{"method", "exact"},
          {"status", to_string(r.status)},
          {"witness", r.witness ? rational_vector(*r.witness) : Json(nullptr)}};
}

Json to_json(const LinealitySplit& s, const VarConvention& conv) {
  Json basis = Json::array();
  for (const auto& w : s.basis) basis.push_back(rational_vector(w));
  Json kept = Json::array();
  for (auto i : s.kept) kept.push_back(conv.name(i));
  const auto reduced_conv = VarConvention::automatic(s.reduced.dim());
  return {{"basis", basis}, {"kept_coordinates", kept}, {"reduced_dim", s.reduced.dim()},
          {"reduced", format(s.reduced, reduced_conv)}};
}

Json to_json(const BallSearch& b) {
  Json j;
  j["outcome"] = b.outcome == BallSearch::Outcome::Found ? "Found" : "BoundedRegionLikely";
  j["heuristic"] = b.heuristic;
  j["note"] = b.note;
  if (b.ball) {
    j["ball"] = {{"center", vector_json(b.ball->center)},
                 {"radius", number(b.ball->radius)},
                 {"sign", b.ball->sign > 0 ? "positive" : "negative"}};
  } else {
    j["ball"] = nullptr;
  }
  if (b.cone) {
    j["cone"] = {{"w", vector_json(b.cone->w)},
                 {"cos_theta", number(b.cone->cos_theta)},
                 {"leading_value", number(b.cone->leading_value)},
                 {"margin", number(b.cone->margin)},
                 {"t0", number(b.cone->t0)},
                 {"halvings", b.cone->halvings}};
  } else {
    j["cone"] = nullptr;
  }
  return j;
}

Json to_json(const std::optional<CompactnessBound>& b) {
  if (!b) return nullptr;
  return {{"t0", number(b->t0)},
          {"alpha_hat", number(b->alpha_hat)},
          {"sampled_minimum", b->sampled_minimum},
          {"validated", b->validated}};
}

Json to_json(const std::vector<AuditFinding>& findings) {
  Json arr = Json::array();
  for (const auto& f : findings) {
    arr.push_back({{"check", f.check},
                   {"status", to_string(f.status)},
                   {"detail", f.detail},
                   {"witness_pos", optional_vector(f.witness_pos)},
                   {"witness_neg", optional_vector(f.witness_neg)}});
  }
  return arr;
}

Json analyze_report(const PolynomialInput& in, const AnalysisOptions& options) {
  const Polynomial& p = in.polynomial;
  require_nonconstant(p);
  require_hypersurface_dim(p);
  Json j = header("analyze", &options);
  j["input"] = input_json(in);
  Json degrees = Json::array();
  for (auto d : homogeneous_parts(p).nonzero_degrees()) degrees.push_back(d);
  j["homogeneous_degrees"] = std::move(degrees);

  const auto curvature = is_cmc(p, cmc_options(options));
  const bool quadric = *p.degree() <= 2;
  j["regularity"] = quadric ? to_json(quadric_regularity(p)) : sampled_regularity(curvature);
  j["leading_form"] = to_json(leading_form_verdict(p, options.seed), p, in.convention);
  j["curvature"] = to_json(curvature, in.convention);
  j["quadric"] = quadric ? quadric_section(p, in.convention, options) : Json(nullptr);
  j["audit"] = to_json(audit_obstructions(p, curvature, options.seed));
  j["compactness"] = to_json(compactness_bound(p, options.seed));
  return j;
}

Json classify_report(const PolynomialInput& in, const AnalysisOptions& options) {
  const Polynomial& p = in.polynomial;
  require_nonconstant(p);
  if (*p.degree() > 2) throw DomainError("classify: degree " + std::to_string(*p.degree()) + " exceeds 2");
  Json j = header("classify", &options);
  j["input"] = input_json(in);
  j["quadric"] = quadric_section(p, in.convention, options);
  return j;
}

Json cmc_report(const PolynomialInput& in, const AnalysisOptions& options, const std::optional<Rational>& target) {
  const Polynomial& p = in.polynomial;
  require_nonconstant(p);
  require_hypersurface_dim(p);
  Json j = header("cmc", &options);
  j["input"] = input_json(in);
  const auto report = is_cmc(p, cmc_options(options));
  j["curvature"] = to_json(report, in.convention);
  if (target) {
    double dev = 0.0;
    for (const auto& s : report.samples) dev = std::max(dev, std::abs(s.mean_curvature - to_double(*target)));
    const auto cert = certify_cmc(p, *target);
    j["target"] = {{"c", to_json(*target)},
                   {"certified", cert.has_value()},
                   {"certifies_squared", "H^2 = c^2 on M"},
                   {"max_abs_deviation", report.samples.empty() ? Json(nullptr) : number(dev)},
                   {"cofactor", cert ? Json(format(cert->first, in.convention)) : Json(nullptr)}};
  }
  return j;
}

Json decompose_report(const PolynomialInput& in) {
  const Polynomial& p = in.polynomial;
  if (p.is_zero()) throw DomainError("decompose: zero polynomial");
  const auto dec = homogeneous_parts(p);
  Json j = header("decompose", nullptr);
  j["input"] = input_json(in);
  j["degree"] = dec.degree;
  Json parts = Json::array();
  for (std::uint32_t i = 0; i < dec.parts.size(); ++i) {
    parts.push_back({{"degree", i}, {"polynomial", format(dec.parts[i], in.convention)}});
  }
  j["parts"] = std::move(parts);
  return j;
}

Json divide_report(const PolynomialInput& in, const SphereQuadric& sphere) {
  const Polynomial& p = in.polynomial;
  sphere.validate(p.dim());
  Json j = header("divide", nullptr);
  j["input"] = input_json(in);
  j["sphere"] = {{"k", sphere.k},
                 {"center", rational_vector(sphere.center)},
                 {"radius_sq", to_json(sphere.radius_sq)},
                 {"first_coordinate", in.convention.name(sphere.first_var)},
                 {"polynomial", format(sphere.expand(p.dim()), in.convention)}};
  const auto quotient = divide_by_sphere_quadric(p, sphere);
  j["divisible"] = quotient.has_value();
  j["quotient"] = quotient ? Json(format(*quotient, in.convention)) : Json(nullptr);
  if (!quotient) j["message"] = "not divisible";
  return j;
}

Json ball_report(const PolynomialInput& in, double radius, std::optional<int> sign, const AnalysisOptions& options) {
  Json j = header("ball", &options);
  j["input"] = input_json(in);
  j["radius"] = number(radius);
  j["requested_sign"] = sign ? Json(*sign > 0 ? "positive" : "negative") : Json(nullptr);
  j["result"] = to_json(find_sign_ball(in.polynomial, radius, options.seed, sign));
  return j;
}

Json corpus_list() {
  Json j = header("corpus", nullptr);
  Json entries = Json::array();
  for (const auto& e : builtin_corpus()) {
    Json expected;
    expected["quadric_kind"] = e.expected.quadric_kind ? Json(*e.expected.quadric_kind) : Json(nullptr);
    expected["cmc_verdict"] = e.expected.cmc_verdict ? Json(to_string(*e.expected.cmc_verdict)) : Json(nullptr);
    expected["c"] = e.expected.c ? to_json(*e.expected.c) : Json(nullptr);
    expected["regularity"] = e.expected.regularity ? Json(*e.expected.regularity) : Json(nullptr);
    expected["leading_form"] = e.expected.leading_form ? Json(*e.expected.leading_form) : Json(nullptr);
    entries.push_back({{"name", e.name},
                       {"text", e.text},
                       {"dim", e.dim},
                       {"variables", mode_name(e.vars)},
                       {"description", e.description},
                       {"expected", std::move(expected)}});
  }
  j["entries"] = std::move(entries);
  return j;
}

Json corpus_run(const CorpusEntry& entry, const AnalysisOptions& options) {
  PolynomialInput in;
  in.text = entry.text;
  in.convention = entry.convention();
  in.polynomial = entry.polynomial();
  Json report = analyze_report(in, options);

  Json mismatches = Json::array();
  auto check = [&](const char* field, const std::optional<std::string>& want, const Json& got) {
    if (want && (!got.is_string() || got.get<std::string>() != *want)) {
      mismatches.push_back({{"field", field}, {"expected", *want}, {"observed", got}});
    }
  };
  const Json none = nullptr;
  check("quadric_kind", entry.expected.quadric_kind, report["quadric"].is_null() ? none : report["quadric"]["kind"]);
  check("regularity", entry.expected.regularity, report["regularity"]["status"]);
  check("leading_form", entry.expected.leading_form, report["leading_form"]["kind"]);
  if (entry.expected.cmc_verdict) {
    check("cmc_verdict", std::string(to_string(*entry.expected.cmc_verdict)), report["curvature"]["verdict"]);
  }
  if (entry.expected.c) {
    check("c", to_fraction_string(*entry.expected.c), report["curvature"]["c_exact"]);
  }

  Json j = header("corpus", &options);
  j["entry"] = entry.name;
  j["expectations_met"] = mismatches.empty();
  j["mismatches"] = std::move(mismatches);
  j["report"] = std::move(report);
  return j;
}

Json corpus_run_all(const AnalysisOptions& options) {
  Json j = header("corpus", &options);
  Json runs = Json::array();
  bool all = true;
  for (const auto& e : builtin_corpus()) {
    Json r = corpus_run(e, options);
    all = all && r["expectations_met"].get<bool>();
    runs.push_back(std::move(r));
  }
  j["expectations_met"] = all;
  j["runs"] = std::move(runs);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hypersurf
