#include "kato/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace kato {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json to_json(const KatoConstant& k) {
  return json{{"p", k.p},
              {"n", k.n},
              {"value", k.value},
              {"regime", to_string(k.regime)},
              {"a_star", k.a_star}};
}

json to_json(const PointJet& jet) {
  return json{{"n", jet.n()},
              {"d", jet.d()},
              {"grad", jet.grad_data()},
              {"hess", jet.hess_data()}};
}

json to_json(const RegularityVerdict& v) {
  json j{{"p", v.p},     {"n", v.n},   {"d", v.d},
         {"n0", v.n0},   {"status", to_string(v.status)},
         {"e1", v.e1},   {"e2", v.e2}};
  if (v.status == RegStatus::HausdorffBound) j["hausdorff_dim"] = v.hausdorff_dim;
  return j;
}

json to_json(const GammaCertificate& c) {
  return json{{"p", c.p},           {"gamma", c.gamma},
              {"A", c.a_coef},      {"B", c.b_coef},
              {"C", c.c_const},     {"admissible", c.admissible}};
}

PointJet jet_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const int d = j.at("d").get<int>();
  const auto grad = j.at("grad").get<std::vector<double>>();
  const auto hess = j.at("hess").get<std::vector<double>>();
  if (static_cast<int>(grad.size()) != n * d ||
      static_cast<int>(hess.size()) != n * n * d)
    throw std::runtime_error("jet_from_json: array sizes inconsistent with (n, d)");
  PointJet jet(n, d);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < d; ++a) jet.set_grad(i, a, grad[i * d + a]);
  for (int i = 0; i < n; ++i)
    for (int j2 = i; j2 < n; ++j2)
      for (int a = 0; a < d; ++a)
        jet.set_hess(i, j2, a, hess[(i * n + j2) * d + a]);
  return jet;
}

struct CsvWriter::Impl {
  std::ofstream out;
};

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : impl_(new Impl) {
  impl_->out.open(path);
  if (!impl_->out)
    throw std::runtime_error("CsvWriter: cannot open " + path);
  for (std::size_t i = 0; i < header.size(); ++i)
    impl_->out << (i ? "," : "") << header[i];
  impl_->out << "\n";
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    impl_->out << (i ? "," : "") << format_double(values[i]);
  impl_->out << "\n";
}

void CsvWriter::row_mixed(const std::vector<std::string>& values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    impl_->out << (i ? "," : "") << values[i];
  impl_->out << "\n";
}

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  throw std::runtime_error("CsvTable: no column named " + name);
}

double CsvTable::value(std::size_t row_idx, const std::string& name) const {
  return std::stod(rows.at(row_idx).at(column(name)));
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_csv: cannot open " + path);
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (first) {
      table.header = std::move(fields);
      first = false;
    } else {
      table.rows.push_back(std::move(fields));
    }
  }
  return table;
}

}  // namespace kato
