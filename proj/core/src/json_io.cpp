#include "mukit/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace mukit::io {
namespace {

void dump_rec(const json& j, std::string& out, int indent, int depth) {
  const auto pad = [&](int d) {
    if (indent >= 0) {
      out += '\n';
      out.append(static_cast<std::size_t>(indent * d), ' ');
    }
  };
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        pad(depth + 1);
        out += json(it.key()).dump();
        out += indent >= 0 ? ": " : ":";
        dump_rec(it.value(), out, indent, depth + 1);
      }
      if (!first) pad(depth);
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& el : j) {
        if (!first) out += ',';
        first = false;
        pad(depth + 1);
        dump_rec(el, out, indent, depth + 1);
      }
      if (!first) pad(depth);
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isfinite(v)) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out += buf;
      } else {
        out += "null";
      }
      break;
    }
    default:
      out += j.dump();
      break;
  }
}

}  // namespace

std::string dump(const json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  return out;
}

json to_json(const Vector& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of numbers");
  Vector v(static_cast<Index>(j.size()));
  Index i = 0;
  for (const auto& el : j) v[i++] = el.get<double>();
  return v;
}

json to_json(const spaces::SetDescriptor& d) {
  json j;
  j["family"] = d.family_name();
  j["dim"] = d.dim;
  switch (d.family) {
    case spaces::SetFamily::LpConeBounded:
    case spaces::SetFamily::SimplexDeltaP:
      j["p"] = d.p;
      break;
    case spaces::SetFamily::HilbertCube:
      j["a"] = to_json(d.a);
      break;
    default:
      break;
  }
  return j;
}

spaces::SetDescriptor set_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  const Index dim = j.value("dim", Index{0});
  using spaces::SetDescriptor;
  if (family == "L1ConeBounded") return SetDescriptor::l1_cone(dim);
  if (family == "LpConeBounded") return SetDescriptor::lp_cone(j.at("p").get<double>(), dim);
  if (family == "SimplexDeltaP")
    return SetDescriptor::simplex_delta_p(j.at("p").get<double>(), dim);
  if (family == "HilbertCube")
    return SetDescriptor::hilbert_cube(vector_from_json(j.at("a")));
  if (family == "UnitBall") return SetDescriptor::unit_ball(dim);
  if (family == "StandardTruncatedSimplex") return SetDescriptor::standard_simplex(dim);
  throw std::invalid_argument("unknown set family '" + family + "'");
}

json to_json(const measures::FiniteMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms) atoms.push_back(to_json(a));
  json j;
  j["atoms"] = std::move(atoms);
  j["weights"] = to_json(mu.weights);
  return j;
}

measures::FiniteMeasure measure_from_json(const json& j) {
  std::vector<Vector> atoms;
  for (const auto& a : j.at("atoms")) atoms.push_back(vector_from_json(a));
  return measures::FiniteMeasure(std::move(atoms), vector_from_json(j.at("weights")));
}

json to_json(const quantum::CMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

quantum::CMatrix cmatrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("expected a JSON matrix [[[re, im], ...], ...]");
  const Index rows = static_cast<Index>(j.size());
  const Index cols = static_cast<Index>(j.front().size());
  quantum::CMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const auto& row = j.at(static_cast<std::size_t>(r));
    if (static_cast<Index>(row.size()) != cols)
      throw std::invalid_argument("ragged JSON matrix");
    for (Index c = 0; c < cols; ++c) {
      const auto& cell = row.at(static_cast<std::size_t>(c));
      if (cell.is_number()) {
        m(r, c) = std::complex<double>(cell.get<double>(), 0.0);
      } else {
        m(r, c) = std::complex<double>(cell.at(0).get<double>(), cell.at(1).get<double>());
      }
    }
  }
  return m;
}

}  // namespace mukit::io
