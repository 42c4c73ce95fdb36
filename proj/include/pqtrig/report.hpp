#pragma once

#include <ostream>
#include <span>

#include "pqtrig/suites.hpp"

namespace pqtrig {

enum class ReportFormat { csv, text };

/// Columns: suite,p,q,a,b,verdict,gap,witness_r,witness_s. The suite field
/// is "<suite>:<target>"; absent values are left empty.
void write_report_csv(std::ostream& out, std::span<const SuiteReport> reports);

/// One "key=value" line per configuration followed by a '#' summary line
/// per suite.
void write_report_text(std::ostream& out, std::span<const SuiteReport> reports);

void write_report(std::ostream& out, std::span<const SuiteReport> reports, ReportFormat format);

}  // namespace pqtrig
