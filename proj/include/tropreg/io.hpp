#pragma once
// CSV matrices, index tables, JSON result documents and SVG drawings of
// 3-dimensional configurations in the projective plane.
//
// Index tables on disk (types, winners) and index lists in JSON are 1-based.

#include <string>

#include <json.hpp>

#include "tropreg/auction.hpp"
#include "tropreg/dominions.hpp"
#include "tropreg/regression.hpp"

namespace tropreg {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rows are coordinates, columns are points. The first line is skipped when
// it is not numeric. Cells are decimals or -inf (any case).
TropMatrix parse_matrix_text(const std::string& text);
TropMatrix parse_matrix(const std::string& path);
// Shortest round-tripping decimal text for every entry.
std::string emit_matrix(const TropMatrix& V, const std::vector<std::string>& header = {});

// Two-column tables "column_index,type" and "tender_id,firm_id"; returns
// 0-based values indexed by 0-based position. Every entry must be present.
Index parse_types(const std::string& text, std::size_t p, std::size_t n);
Index parse_winners(const std::string& text, std::size_t q, std::size_t n);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// "I=1,2 J=3" style partition, 1-based.
PartitionIJ parse_partition(const std::string& I, const std::string& J, std::size_t n);

// Finite numbers stay numbers; infinities become "inf" / "-inf".
nlohmann::json json_number(double x);
nlohmann::json json_vec(const Vec& x);
nlohmann::json json_index(const Index& x);  // shifted to 1-based
nlohmann::json certificate_json(const SpectralCertificate& c);
nlohmann::json inradius_json(const InradiusResult& r);
nlohmann::json regression_json(const RegressionResult& r);
nlohmann::json signed_json(const SignedRegressionResult& r);
nlohmann::json dominion_json(const DominionReport& r);
nlohmann::json inference_json(const InferenceReport& r);

struct SvgOptions {
  double width = 480, height = 480;
  std::optional<Vec> ball_center;  // default: the apex point -a
};

// Points of V (3 x p), the hyperplane H_a drawn as rays from -a along -e_i,
// and the Hilbert ball of the given radius. Warnings about skipped elements
// are appended to *warnings.
std::string emit_svg(const TropMatrix& V, const Vec& a, double radius, const SvgOptions& opt = {},
                     std::vector<std::string>* warnings = nullptr);

}  // namespace tropreg
