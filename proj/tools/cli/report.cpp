#include "report.hpp"

#include "geninv/scalar.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace geninv::cli {

Step& Report::step(std::string title) {
  steps.push_back({std::move(title), {}});
  return steps.back();
}

namespace {

using Json = nlohmann::ordered_json;

void write_grid(std::ostream& out, const std::vector<std::vector<std::string>>& rows,
                const std::string& indent) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  for (const auto& row : rows) {
    out << indent << '[';
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << ' ' << std::string(width[j] - row[j].size(), ' ') << row[j];
    }
    out << " ]\n";
  }
}

std::vector<std::vector<std::string>> cells(const Matrix& m) {
  std::vector<std::vector<std::string>> rows(m.rows());
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) rows[i - 1].push_back(render_scalar(m(i, j)));
  }
  return rows;
}

void write_fact(std::ostream& out, const Fact& fact, const std::string& indent) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          out << indent << fact.key << ": " << v << '\n';
        } else if constexpr (std::is_same_v<T, Matrix>) {
          out << indent << fact.key << " (" << v.shape() << "):\n";
          write_grid(out, cells(v), indent + "  ");
        } else if constexpr (std::is_same_v<T, Table>) {
          out << indent << fact.key << ":\n";
          write_grid(out, v.rows, indent + "  ");
        } else {
          out << indent << fact.key << ":\n";
          for (const auto& line : v.lines) out << indent << "  " << line << '\n';
        }
      },
      fact.value);
}

Json matrix_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      const Gaussian& z = m(i, j);
      row.push_back(Json::array({z.re().numerator().get_str(), z.re().denominator().get_str(),
                                 z.im().numerator().get_str(), z.im().denominator().get_str()}));
    }
    entries.push_back(std::move(row));
  }
  Json out;
  out["rows"] = std::to_string(m.rows());
  out["cols"] = std::to_string(m.cols());
  out["entries"] = std::move(entries);
  return out;
}

Json fact_value_json(const Fact& fact) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, Matrix>) {
          return matrix_json(v);
        } else if constexpr (std::is_same_v<T, Table>) {
          return Json{{"symbolic", v.rows}};
        } else {
          return Json{{"lines", v.lines}};
        }
      },
      fact.value);
}

Json facts_json(const std::vector<Fact>& facts) {
  Json out = Json::object();
  for (const auto& f : facts) out[f.key] = fact_value_json(f);
  return out;
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "command: " << report.command << '\n';
  if (!report.inputs.empty()) {
    out << "\ninputs\n";
    for (const auto& [name, m] : report.inputs) write_fact(out, {name, m}, "  ");
  }
  for (std::size_t k = 0; k < report.steps.size(); ++k) {
    out << '\n' << k + 1 << ". " << report.steps[k].title << '\n';
    for (const auto& f : report.steps[k].facts) write_fact(out, f, "  ");
  }
  if (!report.result.empty()) {
    out << "\nresult\n";
    for (const auto& f : report.result) write_fact(out, f, "  ");
  }
  out << "\nverdict: " << report.verdict << '\n';
  return out.str();
}

std::string render_json(const Report& report) {
  Json out;
  out["command"] = report.command;
  Json inputs = Json::object();
  for (const auto& [name, m] : report.inputs) inputs[name] = matrix_json(m);
  out["inputs"] = std::move(inputs);
  Json steps = Json::array();
  for (const auto& s : report.steps) {
    steps.push_back(Json{{"title", s.title}, {"facts", facts_json(s.facts)}});
  }
  out["steps"] = std::move(steps);
  out["result"] = facts_json(report.result);
  out["verdict"] = report.verdict;
  return out.dump(2) + "\n";
}

}  // namespace geninv::cli
