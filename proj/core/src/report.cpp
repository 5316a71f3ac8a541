#include <cstdio>
#include <fstream>
#include <sstream>

#include "lsc/protocol.hpp"

namespace lsc {

namespace {

std::string fmt_metric(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

struct MetricColumn {
  const char* name;
  double DomainScores::*field;
};

constexpr MetricColumn kMetrics[] = {
    {"f1_negative", &DomainScores::f1_negative},
    {"f1_positive", &DomainScores::f1_positive},
    {"accuracy", &DomainScores::accuracy},
};

}  // namespace

std::string report_to_tsv(const EvalReport& report) {
  std::ostringstream out;
  if (!report.per_domain.empty()) {
    out << "domain\tsystem\tmetric\tvalue\n";
    for (const auto& [domain, by_system] : report.per_domain) {
      for (System system : report.systems) {
        const DomainScores& s = by_system.at(system);
        for (const auto& m : kMetrics) {
          out << domain << "\t" << to_string(system) << "\t" << m.name << "\t"
              << fmt_metric(s.*(m.field)) << "\n";
        }
      }
    }
    for (System system : report.systems) {
      const DomainScores& s = report.averages.at(system);
      for (const auto& m : kMetrics) {
        out << "average\t" << to_string(system) << "\t" << m.name << "\t"
            << fmt_metric(s.*(m.field)) << "\n";
      }
    }
  }
  if (!report.ablation_curve.empty()) {
    out << "past_domains\tmean_metric\n";
    for (const auto& [size, value] : report.ablation_curve) {
      out << size << "\t" << fmt_metric(value) << "\n";
    }
  }
  return out.str();
}

std::string report_to_json(const EvalReport& report) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema_version\": 1,\n";
  out << "  \"setting\": \"" << to_string(report.setting) << "\",\n";
  out << "  \"folds\": " << report.folds << ",\n";
  out << "  \"seed\": " << report.seed << ",\n";

  out << "  \"systems\": [";
  for (std::size_t i = 0; i < report.systems.size(); ++i) {
    if (i) out << ", ";
    out << "\"" << to_string(report.systems[i]) << "\"";
  }
  out << "],\n";

  auto emit_scores = [&](const DomainScores& s) {
    out << "{";
    for (std::size_t i = 0; i < std::size(kMetrics); ++i) {
      if (i) out << ", ";
      out << "\"" << kMetrics[i].name << "\": " << fmt_metric(s.*(kMetrics[i].field));
    }
    out << "}";
  };

  out << "  \"per_domain\": {";
  bool first_domain = true;
  for (const auto& [domain, by_system] : report.per_domain) {
    if (!first_domain) out << ",";
    first_domain = false;
    out << "\n    \"" << json_escape(domain) << "\": {";
    bool first_system = true;
    for (System system : report.systems) {
      if (!first_system) out << ", ";
      first_system = false;
      out << "\"" << to_string(system) << "\": ";
      emit_scores(by_system.at(system));
    }
    out << "}";
  }
  out << (report.per_domain.empty() ? "" : "\n  ") << "},\n";

  out << "  \"averages\": {";
  bool first_system = true;
  for (System system : report.systems) {
    if (!first_system) out << ", ";
    first_system = false;
    out << "\"" << to_string(system) << "\": ";
    emit_scores(report.averages.at(system));
  }
  out << "},\n";

  out << "  \"ablation_curve\": [";
  for (std::size_t i = 0; i < report.ablation_curve.size(); ++i) {
    if (i) out << ", ";
    out << "{\"past_domains\": " << report.ablation_curve[i].first
        << ", \"metric\": " << fmt_metric(report.ablation_curve[i].second) << "}";
  }
  out << "]\n}\n";
  return out.str();
}

void save_report(const EvalReport& report, const std::filesystem::path& path,
                 const std::string& format) {
  std::string body;
  if (format == "tsv") {
    body = report_to_tsv(report);
  } else if (format == "json") {
    body = report_to_json(report);
  } else {
    throw ProtocolError("unknown report format '" + format + "'");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ProtocolError("cannot write report: " + path.string());
  out << body;
  if (!out) throw ProtocolError("I/O error writing " + path.string());
}

}  // namespace lsc
