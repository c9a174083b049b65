#ifndef HYPERSURF_REPORT_HPP
#define HYPERSURF_REPORT_HPP

// JSON documents for every command. Objects keep insertion order and all
// content is a pure function of (input, options, version), so output is
// reproducible byte for byte. Rationals are "num/den" strings.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hypersurf/asymptotics.hpp"
#include "hypersurf/calculus.hpp"
#include "hypersurf/corpus.hpp"
#include "hypersurf/curvature.hpp"
#include "hypersurf/parser.hpp"
#include "hypersurf/quadric.hpp"

namespace hypersurf {

using Json = nlohmann::ordered_json;

const char* version();

struct AnalysisOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  double tolerance = 1e-6;
};

/// A parsed polynomial together with the text and convention it came from.
struct PolynomialInput {
  std::string text;
  VarConvention convention;
  Polynomial polynomial{1};

  /// dim == 0 infers the dimension from the variables used.
  static PolynomialInput parse(std::string_view text, std::size_t dim, std::optional<VarConvention::Mode> mode);
};

/// "k,(a_1,...,a_{k+1}),r2" as accepted by the divide command.
SphereQuadric parse_sphere_spec(std::string_view spec, std::size_t first_var = 0);

Json to_json(const Rational& q);
Json to_json(const SignVerdict& v, const Polynomial& p, const VarConvention& conv);
Json to_json(const CurvatureReport& r, const VarConvention& conv);
Json to_json(const QuadricClass& c);
Json to_json(const RegularityResult& r);
Json to_json(const LinealitySplit& s, const VarConvention& conv);
Json to_json(const BallSearch& b);
Json to_json(const std::optional<CompactnessBound>& b);
Json to_json(const std::vector<AuditFinding>& findings);

Json analyze_report(const PolynomialInput& in, const AnalysisOptions& options);
/// Throws DomainError for degree > 2.
Json classify_report(const PolynomialInput& in, const AnalysisOptions& options);
Json cmc_report(const PolynomialInput& in, const AnalysisOptions& options, const std::optional<Rational>& target);
Json decompose_report(const PolynomialInput& in);
Json divide_report(const PolynomialInput& in, const SphereQuadric& sphere);
Json ball_report(const PolynomialInput& in, double radius, std::optional<int> sign, const AnalysisOptions& options);

Json corpus_list();
/// Analysis of one entry plus a comparison with its expected facts.
Json corpus_run(const CorpusEntry& entry, const AnalysisOptions& options);
/// corpus_run over every entry.
Json corpus_run_all(const AnalysisOptions& options);

/// Pretty-printed with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace hypersurf

#endif  // HYPERSURF_REPORT_HPP
