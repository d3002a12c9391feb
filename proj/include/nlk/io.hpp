#ifndef NLK_IO_HPP
#define NLK_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nlk/algebra.hpp"
#include "nlk/classifier.hpp"
#include "nlk/metric.hpp"

namespace nlk::io {

using json = nlohmann::json;

/// Contents of an algebra interchange file. Scalars travel as strings, never
/// as JSON numbers, and indices are 1-based.
struct AlgebraFile {
  Algebra algebra;
  std::optional<Form> form;  ///< held unchecked so asymmetric input can be reported

  friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

json to_json(const AlgebraFile& f);
/// Throws ParseError on any schema or value violation.
AlgebraFile algebra_file_from_json(const json& j);

/// Deterministic text: sorted keys, reduced scalars, two-space indent,
/// trailing newline.
std::string emit(const AlgebraFile& f);
AlgebraFile parse(std::string_view text);

AlgebraFile read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const AlgebraFile& f);

AlgebraFile from_metric(const MetricAlgebra& ma);

json to_json(const Vec& v);
json to_json(const Mat& m);
json to_json(const Subspace& s);
json to_json(const ViolationReport& r, std::size_t max_witnesses = 100);
json to_json(const MetricReport& r);
json to_json(const InvariantProfile& p);
json to_json(const ClassificationReport& r);
json to_json(const LeviReport& r);

/// Semicolon-separated list of comma-separated scalars, e.g. "1,0,0;0,1/2,0".
/// Every vector must have length dim. An empty string is the empty list.
std::vector<Vec> parse_vectors(std::string_view text, std::size_t dim);

/// Short description of what each checker verifies, for reports.
std::string describe(ViolationKind k);

}  // namespace nlk::io

#endif  // NLK_IO_HPP
