#include "machhop/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "machhop/error.hpp"

namespace machhop {

namespace {

constexpr std::size_t kFallbackRowWidth = 32;

void append_optional(std::string& out, const std::optional<std::uint64_t>& v) {
  if (v) {
    out += std::to_string(*v);
  } else {
    out += kUnmetSentinel;
  }
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorKind::parse, "line " + std::to_string(line) + ": " + what);
}

std::optional<std::uint64_t> to_u64(std::string_view token) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || end != token.data() + token.size()) return std::nullopt;
  return v;
}

// Splits off the next whitespace-delimited token.
std::string_view next_token(std::string_view& rest) {
  const auto begin = rest.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) {
    rest = {};
    return {};
  }
  rest.remove_prefix(begin);
  const auto end = rest.find_first_of(" \t\r");
  const auto token = rest.substr(0, end);
  rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
  return token;
}

}  // namespace

std::string format_sequence(const ChSequence& s) {
  const std::size_t width = s.row_width() ? s.row_width() : kFallbackRowWidth;
  std::string out = std::to_string(s.period()) + ' ' + std::to_string(s.channel_universe()) +
                    ' ' + s.provenance() + '\n';
  const auto v = s.values();
  for (std::size_t t = 0; t < v.size(); ++t) {
    out += std::to_string(v[t]);
    out += (t + 1) % width == 0 || t + 1 == v.size() ? '\n' : ' ';
  }
  return out;
}

ChSequence parse_sequence(std::string_view text) {
  std::size_t line_no = 0;
  std::optional<std::uint64_t> period;
  std::uint64_t universe = 0;
  std::string provenance;
  std::vector<Channel> values;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;

    if (!period) {
      const auto p_tok = next_token(line);
      if (p_tok.empty()) continue;
      const auto n_tok = next_token(line);
      const auto p_val = to_u64(p_tok);
      const auto n_val = to_u64(n_tok);
      if (!p_val || *p_val == 0) parse_error(line_no, "header must start with a positive period");
      if (!n_val || *n_val == 0 || *n_val > UINT32_MAX) {
        parse_error(line_no, "header must give a positive channel count");
      }
      period = *p_val;
      universe = *n_val;
      const auto first = line.find_first_not_of(" \t");
      const auto last = line.find_last_not_of(" \t\r");
      provenance = first == std::string_view::npos
                       ? std::string("unknown")
                       : std::string(line.substr(first, last - first + 1));
      values.reserve(*period);
      continue;
    }

    for (auto token = next_token(line); !token.empty(); token = next_token(line)) {
      const auto v = to_u64(token);
      if (!v) parse_error(line_no, "'" + std::string(token) + "' is not a channel index");
      if (*v >= universe) {
        parse_error(line_no, "channel " + std::string(token) + " outside universe of " +
                                 std::to_string(universe));
      }
      if (values.size() == *period) parse_error(line_no, "more values than the declared period");
      values.push_back(static_cast<Channel>(*v));
    }
  }

  if (!period) parse_error(line_no + 1, "missing header line");
  if (values.size() != *period) {
    parse_error(line_no, "expected " + std::to_string(*period) + " values, found " +
                             std::to_string(values.size()));
  }
  return ChSequence(std::move(values), static_cast<std::uint32_t>(universe), std::move(provenance));
}

ChSequence read_sequence_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence(buf.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::io, "cannot write " + path.string());
  out << text;
  if (!out) fail(ErrorKind::io, "short write to " + path.string());
}

std::string format_matrix(const ChMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::string format_runs_csv(std::span<const RunRecord> records) {
  std::string out(kRunCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += std::to_string(r.drift) + ',' + std::to_string(r.seed) + ',' +
           std::to_string(r.n1) + ',' + std::to_string(r.n2) + ',' + std::to_string(r.common) +
           ',';
    append_optional(out, r.ttr);
    out += ',';
    append_optional(out, r.t_sharp);
    out += '\n';
  }
  return out;
}

std::string format_summary_json(const SweepSummary& summary) {
  using nlohmann::ordered_json;
  const auto extremum = [](const Extremum& e) {
    ordered_json j;
    j["observed_max"] = e.value ? ordered_json(*e.value) : ordered_json(nullptr);
    j["witness"] = {{"drift", e.drift}, {"seed", e.seed}};
    return j;
  };
  ordered_json doc;
  doc["algorithm"] = summary.algorithm;
  doc["period"] = summary.period;
  doc["drifts_per_seed"] = summary.result.period;
  doc["horizon"] = summary.result.horizon;
  doc["runs"] = summary.result.records.size();
  doc["bound_metric"] = summary.metric;
  doc["bound"] = summary.bound;
  doc["mttr"] = extremum(summary.result.mttr);
  doc["mcttr"] = extremum(summary.result.mcttr);
  doc["pass"] = summary.passed;
  return doc.dump(2) + '\n';
}

}  // namespace machhop
