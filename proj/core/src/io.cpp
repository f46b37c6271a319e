#include "fano/io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fano/error.hpp"
#include "json.hpp"

namespace fano {

using Json = nlohmann::ordered_json;

namespace {

Json complex_json(Cplx c) { return Json::array({c.real(), c.imag()}); }

Cplx complex_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::kFormat, "complex value must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_json(const CMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw Error(ErrorCode::kFormat, "matrix must have " + std::to_string(n) + " rows");
  }
  CMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::kFormat, "matrix row must have " + std::to_string(n) + " entries");
    }
    for (int k = 0; k < n; ++k) m(i, k) = complex_from(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json sign_json(const SignFn& sign) {
  const int n = sign.dim().value();
  Json rows = Json::array();
  for (int s = 0; s < n; ++s) {
    Json row = Json::array();
    for (int t = 0; t < n; ++t) row.push_back(sign(s, t));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("invalid JSON: ") + e.what());
  }
}

LatticeDim dim_from(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw Error(ErrorCode::kFormat, "missing integer field \"n\"");
  }
  try {
    return LatticeDim(doc["n"].get<int>());
  } catch (const Error& e) {
    throw Error(ErrorCode::kFormat, e.what());
  }
}

SignFn sign_from_doc(const Json& doc) {
  const LatticeDim n = dim_from(doc);
  const int dim = n.value();
  if (!doc.contains("sign") || !doc["sign"].is_array() ||
      static_cast<int>(doc["sign"].size()) != dim) {
    throw Error(ErrorCode::kFormat, "\"sign\" must be an N x N array");
  }
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(dim) * dim);
  for (const auto& row : doc["sign"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw Error(ErrorCode::kFormat, "\"sign\" must be an N x N array");
    }
    for (const auto& v : row) {
      if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1)) {
        throw Error(ErrorCode::kFormat, "\"sign\" entries must be 1 or -1");
      }
      values.push_back(v.get<int>());
    }
  }
  return SignFn::unchecked(n, std::move(values));
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string kernel_to_json(const FanoKernel& kernel, bool include_matrices) {
  const int n = kernel.dim().value();
  Json doc;
  doc["n"] = n;
  doc["convention"] = std::string(FanoKernel::convention());
  doc["sign"] = sign_json(kernel.sign());
  if (include_matrices) {
    Json by_q = Json::array();
    for (int q = 0; q < n; ++q) {
      Json by_p = Json::array();
      for (int p = 0; p < n; ++p) by_p.push_back(matrix_json(kernel(q, p)));
      by_q.push_back(std::move(by_p));
    }
    doc["matrices"] = std::move(by_q);
  }
  return doc.dump() + "\n";
}

LoadedKernel kernel_from_json(std::string_view text) {
  const Json doc = parse(text);
  SignFn sign = sign_from_doc(doc);
  const int n = sign.dim().value();
  if (doc.contains("convention")) {
    if (!doc["convention"].is_string() ||
        doc["convention"].get<std::string>() != FanoKernel::convention()) {
      throw Error(ErrorCode::kFormat, "unsupported convention; only \"tau\" is known");
    }
  }
  FanoKernel derived = build_kernel_unchecked(sign);
  if (!doc.contains("matrices") || doc["matrices"].is_null()) {
    return {std::move(derived), false, 0.0};
  }
  const Json& mats = doc["matrices"];
  if (!mats.is_array() || static_cast<int>(mats.size()) != n) {
    throw Error(ErrorCode::kFormat, "\"matrices\" must be indexed [q][p]");
  }
  std::vector<CMatrix> matrices;
  matrices.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& by_p : mats) {
    if (!by_p.is_array() || static_cast<int>(by_p.size()) != n) {
      throw Error(ErrorCode::kFormat, "\"matrices\" must be indexed [q][p]");
    }
    for (const auto& m : by_p) matrices.push_back(matrix_from(m, n));
  }
  double deviation = 0.0;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const double d = max_abs_diff(matrices[i], derived.matrices()[i]);
    deviation = std::isnan(d) ? d : std::max(deviation, d);
  }
  return {FanoKernel::from_matrices(std::move(sign), std::move(matrices)), true, deviation};
}

SignFn sign_from_json(std::string_view text) { return sign_from_doc(parse(text)); }

std::string report_to_json(const VerificationReport& report) {
  Json doc;
  doc["kernel_id"] = report.kernel_id;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json rec;
    rec["name"] = c.name;
    rec["max_dev"] = c.max_dev;
    rec["tol"] = c.tol;
    rec["pass"] = c.pass;
    checks.push_back(std::move(rec));
  }
  doc["checks"] = std::move(checks);
  doc["pass"] = report.pass;
  return doc.dump() + "\n";
}

std::string state_to_json(const CMatrix& rho) {
  Json doc;
  doc["n"] = rho.dim();
  doc["rho"] = matrix_json(rho);
  return doc.dump() + "\n";
}

CMatrix state_from_json(std::string_view text) {
  const Json doc = parse(text);
  const LatticeDim n = dim_from(doc);
  if (!doc.contains("rho")) throw Error(ErrorCode::kFormat, "missing field \"rho\"");
  return matrix_from(doc["rho"], n.value());
}

std::string wigner_to_csv(const WignerGrid& w) {
  std::string out = "q,p,w\n";
  const int n = w.dim().value();
  for (int q = 0; q < n; ++q)
    for (int p = 0; p < n; ++p) {
      out += std::to_string(q) + "," + std::to_string(p) + "," + format_double(w(q, p)) + "\n";
    }
  return out;
}

WignerGrid wigner_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next = [&]() -> bool {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next() || line != "q,p,w") throw Error(ErrorCode::kFormat, "Wigner CSV header must be q,p,w");

  std::vector<std::array<double, 3>> rows;
  while (next()) {
    std::array<double, 3> row{};
    std::istringstream fields(line);
    std::string field;
    for (int k = 0; k < 3; ++k) {
      if (!std::getline(fields, field, ',')) {
        throw Error(ErrorCode::kFormat, "Wigner CSV row needs three fields: " + line);
      }
      try {
        std::size_t used = 0;
        row[static_cast<std::size_t>(k)] = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kFormat, "Wigner CSV field is not a number: " + field);
      }
    }
    if (std::getline(fields, field, ',')) {
      throw Error(ErrorCode::kFormat, "Wigner CSV row has extra fields: " + line);
    }
    rows.push_back(row);
  }
  const auto n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rows.size()))));
  if (n < 2 || static_cast<std::size_t>(n) * n != rows.size()) {
    throw Error(ErrorCode::kFormat, "Wigner CSV must hold N^2 rows with N >= 2");
  }
  std::vector<double> values;
  values.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double q = static_cast<double>(static_cast<int>(i) / n);
    const double p = static_cast<double>(static_cast<int>(i) % n);
    if (rows[i][0] != q || rows[i][1] != p) {
      throw Error(ErrorCode::kFormat, "Wigner CSV rows must be in lexicographic (q,p) order");
    }
    values.push_back(rows[i][2]);
  }
  return WignerGrid::from_values(LatticeDim(n), std::move(values));
}

std::string continuum_grid_to_csv(const ContinuumGrid& grid) {
  std::string out = "q,p,w\n";
  for (std::size_t i = 0; i < grid.q.size(); ++i)
    for (std::size_t j = 0; j < grid.p.size(); ++j) {
      out += format_double(grid.q[i]) + "," + format_double(grid.p[j]) + "," +
             format_double(grid(i, j)) + "\n";
    }
  return out;
}

std::string enumeration_member_json(const SignFn& sign) {
  Json doc;
  doc["n"] = sign.dim().value();
  doc["bits"] = bits_of(sign);
  doc["sign"] = sign_json(sign);
  return doc.dump() + "\n";
}

std::string enumeration_summary_json(const EnumerationResult& result) {
  Json doc;
  doc["n"] = result.n.value();
  doc["count"] = result.count;
  doc["certified"] = result.certified;
  doc["count_kind"] = "derived";
  if (result.sample_verified > 0) {
    doc["sample_verified"] = result.sample_verified;
    doc["sample_failures"] = result.sample_failures;
  }
  return doc.dump() + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

}  // namespace fano
