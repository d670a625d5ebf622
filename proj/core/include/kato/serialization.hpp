#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "kato/gamma.hpp"
#include "kato/jet.hpp"
#include "kato/kato_constant.hpp"
#include "kato/regularity.hpp"

namespace kato {

nlohmann::json to_json(const KatoConstant& k);
nlohmann::json to_json(const PointJet& jet);
nlohmann::json to_json(const RegularityVerdict& v);
nlohmann::json to_json(const GammaCertificate& c);

PointJet jet_from_json(const nlohmann::json& j);

/// Formats a double with 17 significant digits (binary64 round-trip exact).
std::string format_double(double v);

/// Writes a CSV file with a header row, '.' decimal separator, and
/// round-trip-exact doubles.
class CsvWriter {
public:
  explicit CsvWriter(const std::string& path,
                     const std::vector<std::string>& header);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void row(const std::vector<double>& values);
  void row_mixed(const std::vector<std::string>& values);

private:
  struct Impl;
  Impl* impl_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;
  double value(std::size_t row_idx, const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

}  // namespace kato
