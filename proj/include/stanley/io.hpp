#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>

#include "stanley/analysis.hpp"
#include "stanley/sequence.hpp"

namespace stanley::io {

// Sequence file:
//
//   # seed: 0,1
//   # k: 3
//   # complete-to: 3
//   0
//   1
//   3
//
// Header lines start with '#', the body is one decimal term per line with no
// leading zeros, ascending. '\n' line endings throughout.

void write_sequence(const SequenceView& view, std::ostream& out);
void write_sequence(const SequenceView& view, const std::filesystem::path& path);

/// Throws ParseError (with line number) on malformed input and
/// consistency_error when the terms are not ascending, do not start with the
/// seed, or one of the last 100 terms closes a k-term progression.
SequenceView read_sequence(std::istream& in);
SequenceView read_sequence(const std::filesystem::path& path);

// CSV profiles. The first line is the fixed header for the kind:
//   counting       x,count
//   h              n,h,cumulative
//   gaps           k,a_k,gap
//   verification   inequality,range_lo,range_hi,verdict,location,lhs,rhs
// Verification output ends with the summary line (see summary_line).

void write_counting_csv(const CountingProfile& profile, std::ostream& out);
void write_h_csv(const HProfile& profile, std::ostream& out);
void write_gaps_csv(const GapStats& stats, std::ostream& out);
void write_verification_csv(std::span<const VerificationReport> reports, std::ostream& out);

/// "PASS", or "FAIL <inequality> <location>" for the first failing report.
std::string summary_line(std::span<const VerificationReport> reports);

/// OEIS b-file: "<n> <a(n)>" per line, n starting at 1.
void write_bfile(const SequenceView& view, std::ostream& out);
/// "k,a_k" with a header line, k starting at 1.
void write_terms_csv(const SequenceView& view, std::ostream& out);

/// Writes through `fill` into a sibling temporary file and renames it over
/// `path` on success, so a failed write never leaves a partial file.
/// Throws io_failure.
void atomic_write(const std::filesystem::path& path, const std::function<void(std::ostream&)>& fill);

}  // namespace stanley::io
