#include "pqtrig/report.hpp"

#include <string>

#include "pqtrig/csv.hpp"

namespace pqtrig {

namespace {

std::string suite_field(const SuiteRow& r) {
  return std::string(to_string(r.suite)) + ":" + r.target;
}

}  // namespace

void write_report_csv(std::ostream& out, std::span<const SuiteReport> reports) {
  out << "suite,p,q,a,b,verdict,gap,witness_r,witness_s\n";
  for (const auto& rep : reports) {
    for (const auto& r : rep.rows) {
      csv::write_row(out, {suite_field(r), csv::format_double(r.p), csv::format_double(r.q),
                           csv::format_double(r.a), csv::format_double(r.b),
                           to_string(r.verdict), csv::format_double(r.gap),
                           csv::format_double(r.witness_r), csv::format_double(r.witness_s)});
    }
  }
}

void write_report_text(std::ostream& out, std::span<const SuiteReport> reports) {
  for (const auto& rep : reports) {
    for (const auto& r : rep.rows) {
      out << "suite=" << suite_field(r) << " claim=" << to_string(r.claim)
          << " p=" << csv::format_double(r.p) << " q=" << csv::format_double(r.q)
          << " a=" << csv::format_double(r.a) << " b=" << csv::format_double(r.b)
          << " verdict=" << to_string(r.verdict) << " gap=" << csv::format_double(r.gap)
          << " witness_r=" << csv::format_double(r.witness_r)
          << " witness_s=" << csv::format_double(r.witness_s);
      if (r.criterion_trend) {
        out << " criterion=" << to_string(*r.criterion_trend);
      }
      if (r.methods_agree) {
        out << " methods_agree=" << (*r.methods_agree ? "yes" : "no");
      }
      if (!r.message.empty()) {
        out << " error=\"" << r.message << '"';
      }
      out << '\n';
    }
    out << "# " << to_string(rep.suite) << ": " << (rep.passed() ? "PASS" : "FAIL") << ", "
        << rep.in_hypothesis() - rep.failures() << "/" << rep.in_hypothesis()
        << " in-hypothesis rows hold, " << rep.probes() << " probes, " << rep.disagreements()
        << " method disagreements\n";
  }
}

void write_report(std::ostream& out, std::span<const SuiteReport> reports, ReportFormat format) {
  if (format == ReportFormat::csv) {
    write_report_csv(out, reports);
  } else {
    write_report_text(out, reports);
  }
}

}  // namespace pqtrig
