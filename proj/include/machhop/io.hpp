#pragma once

// Text export formats shared by the library, the C API and the CLI.
//
// Sequence file:
//   <period> <N> <provenance...>
//   c(0) c(1) ...            (whitespace separated, any line breaks)

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "machhop/idealmat.hpp"
#include "machhop/machseq.hpp"
#include "machhop/simulator.hpp"

namespace machhop {

std::string format_sequence(const ChSequence& s);
/// Throws Error(parse) naming the offending line.
ChSequence parse_sequence(std::string_view text);

ChSequence read_sequence_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// One row per line, space separated.
std::string format_matrix(const ChMatrix& m);

inline constexpr std::string_view kRunCsvHeader = "drift,seed,n1,n2,G,T,Tsharp";
/// Written for T / T# when the rendezvous never happened within the horizon.
inline constexpr std::string_view kUnmetSentinel = "NA";

std::string format_runs_csv(std::span<const RunRecord> records);

struct SweepSummary {
  std::string algorithm;
  std::string metric;  // "mttr" or "mcttr", whichever the bound applies to
  std::uint64_t period = 0;
  std::uint64_t bound = 0;
  SweepResult result;
  bool passed = false;
};

std::string format_summary_json(const SweepSummary& summary);

}  // namespace machhop
