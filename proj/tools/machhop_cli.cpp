// machhop command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "machhop/machhop.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;  // a bound or certification did not hold
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;  // the library rejected the input

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void usage(const std::string& message) { throw CliError{kExitUsage, message}; }

void check(mh_status status) {
  if (status == MH_OK) return;
  throw CliError{kExitError, std::string(mh_status_name(status)) + ": " + mh_last_error()};
}

struct SeqFree {
  void operator()(mh_sequence* s) const { mh_sequence_free(s); }
};
struct MatFree {
  void operator()(mh_matrix* m) const { mh_matrix_free(m); }
};
struct SweepFree {
  void operator()(mh_sweep* s) const { mh_sweep_free(s); }
};
using Sequence = std::unique_ptr<mh_sequence, SeqFree>;
using Matrix = std::unique_ptr<mh_matrix, MatFree>;
using Sweep = std::unique_ptr<mh_sweep, SweepFree>;

std::string take(char* text) {
  std::string s(text);
  mh_string_free(text);
  return s;
}

struct Options {
  std::string algorithm;
  std::uint64_t L = 0;
  std::uint64_t N = 0;
  std::string avail;
  std::string avail1;
  std::string avail2;
  std::uint64_t seed = 0;
  std::uint32_t seeds = 3;
  std::string out;
  std::string format;  // empty: the command's default
  std::uint64_t drift = 0;
  std::uint64_t horizon = 0;
  std::string emit = "sequence";
  std::string in;
  std::string in1;
  std::string in2;
  std::int64_t id = -1;
  std::uint64_t ettr_trials = 0;
};

std::vector<std::uint32_t> parse_channels(const std::string& text, const char* flag) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || item[0] == '-' || value > UINT32_MAX) {
      usage(std::string(flag) + ": '" + item + "' is not a channel index");
    }
    out.push_back(static_cast<std::uint32_t>(value));
  }
  if (!text.empty() && text.back() == ',') usage(std::string(flag) + ": trailing comma");
  return out;
}

mh_algorithm parse_algorithm(const Options& o) {
  if (o.algorithm == "ideal-ch") return MH_ALG_IDEAL_CH;
  if (o.algorithm == "ortho-ch") return MH_ALG_ORTHO_CH;
  if (o.algorithm == "general-mach") return MH_ALG_GENERAL_MACH;
  if (o.algorithm.empty()) usage("--algorithm is required");
  usage("unknown algorithm '" + o.algorithm + "' (ideal-ch, ortho-ch, general-mach)");
}

// ideal-ch is sized by L, the other two by N; the wrong one is rejected.
mh_algorithm sized_algorithm(const Options& o) {
  const auto alg = parse_algorithm(o);
  if (alg == MH_ALG_IDEAL_CH) {
    if (o.N != 0) usage("ideal-ch takes --L, not --N");
    if (o.L == 0) usage("ideal-ch requires --L");
  } else {
    if (o.L != 0) usage(o.algorithm + " takes --N, not --L");
    if (o.N == 0) usage(o.algorithm + " requires --N");
  }
  return alg;
}

std::uint32_t universe_of(mh_algorithm alg, const Options& o) {
  return static_cast<std::uint32_t>(alg == MH_ALG_IDEAL_CH ? o.L * o.L : o.N);
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  usage("--format " + o.format + " is not supported by this command");
}

// Payload goes to --out or stdout; the human summary goes to stdout when the
// payload is in a file and to stderr otherwise.
struct Output {
  const Options& o;

  void payload(const std::string& text) const {
    if (o.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << text)) throw CliError{kExitError, "cannot write " + o.out};
  }
  std::ostream& info() const { return o.out.empty() ? std::cerr : std::cout; }
};

std::uint64_t ortho_prime(std::uint64_t n) {
  std::uint64_t p = 0;
  check(mh_smallest_prime_geq(n < 2 ? 2 : n, &p));
  return p;
}

std::string sequence_payload(const mh_sequence* s, const std::string& format) {
  if (format == "text") {
    char* text = nullptr;
    check(mh_sequence_format(s, &text));
    return take(text);
  }
  std::vector<std::uint32_t> v(mh_sequence_period(s));
  check(mh_sequence_values(s, v.data(), v.size()));
  if (format == "csv") {
    std::string out = "t,channel\n";
    for (std::size_t t = 0; t < v.size(); ++t) {
      out += std::to_string(t) + ',' + std::to_string(v[t]) + '\n';
    }
    return out;
  }
  nlohmann::ordered_json doc;
  doc["period"] = v.size();
  doc["channels"] = mh_sequence_channel_universe(s);
  doc["provenance"] = mh_sequence_provenance(s);
  doc["values"] = v;
  return doc.dump() + '\n';
}

std::string matrix_payload(const mh_matrix* m, const std::string& format) {
  char* text = nullptr;
  check(mh_matrix_format(m, &text));
  auto body = take(text);
  if (format == "csv") {
    for (auto& c : body) {
      if (c == ' ') c = ',';
    }
  }
  return body;
}

// ---- generate ---------------------------------------------------------

int cmd_generate(const Options& o) {
  require_format(o, {"text", "csv", "json"});
  const auto alg = sized_algorithm(o);
  const auto n = universe_of(alg, o);
  const auto avail = parse_channels(o.avail, "--avail");
  if (o.id >= 0 && alg != MH_ALG_ORTHO_CH) usage("--id applies to ortho-ch only");
  const Output out{o};

  if (o.emit == "matrix") {
    if (o.format == "json") usage("--emit matrix supports text and csv");
    mh_matrix* raw = nullptr;
    if (alg == MH_ALG_IDEAL_CH) {
      check(mh_mach_matrix(o.L, &raw));
    } else if (alg == MH_ALG_GENERAL_MACH) {
      check(mh_general_mach_matrix(o.N, &raw));
    } else {
      std::vector<std::uint32_t> set = avail;
      if (set.empty()) {
        for (std::uint32_t c = 0; c < n; ++c) set.push_back(c);
      }
      std::int64_t id = o.id;
      if (id < 0) check(mh_pick_id_channel(n, set.data(), set.size(), o.seed, &id));
      if (id < 0) usage("avail {0} has no ID channel; ORTHO-CH is the constant-0 sequence");
      check(mh_ortho_extended_matrix(ortho_prime(o.N), static_cast<std::uint64_t>(id), &raw));
    }
    const Matrix m(raw);
    out.payload(matrix_payload(m.get(), o.format));
    out.info() << "matrix " << mh_matrix_rows(m.get()) << " x " << mh_matrix_cols(m.get())
               << ", channels " << mh_matrix_channel_universe(m.get()) << '\n';
    return kExitPass;
  }
  if (o.emit != "sequence") usage("--emit must be sequence or matrix");

  mh_sequence* raw = nullptr;
  if (alg == MH_ALG_ORTHO_CH) {
    std::vector<std::uint32_t> set = avail;
    if (set.empty()) {
      for (std::uint32_t c = 0; c < n; ++c) set.push_back(c);
    }
    check(mh_ortho_ch(n, set.data(), set.size(), o.seed, o.id, &raw));
  } else {
    check(alg == MH_ALG_IDEAL_CH ? mh_ideal_ch(o.L, &raw) : mh_general_mach_sequence(o.N, &raw));
    if (!avail.empty()) {
      const Sequence base(raw);
      raw = nullptr;
      check(mh_sequence_replace_unavailable(base.get(), avail.data(), avail.size(), o.seed, &raw));
    }
  }
  const Sequence s(raw);
  out.payload(sequence_payload(s.get(), o.format));
  out.info() << "period " << mh_sequence_period(s.get()) << ", channels "
             << mh_sequence_channel_universe(s.get()) << ", provenance "
             << mh_sequence_provenance(s.get()) << '\n';
  return kExitPass;
}

// ---- verify -----------------------------------------------------------

std::string describe_1d(const mh_certificate& c) {
  std::ostringstream os;
  if (c.passed) {
    os << "pass (" << c.checked << " shifts)";
  } else {
    os << "FAIL: channel " << c.channel << " never met at shift " << c.shift << ", witness (d,k)=("
       << c.shift << "," << c.channel << ")";
  }
  return os.str();
}

std::string describe_2d(const mh_certificate& c) {
  std::ostringstream os;
  if (c.passed) {
    os << "pass (" << c.checked << " shifts)";
  } else {
    os << "FAIL: channel " << c.channel << " never met at shift (" << c.shift << "," << c.tau
       << "), witness (delta,tau,k)=(" << c.shift << "," << c.tau << "," << c.channel << ")";
  }
  return os.str();
}

nlohmann::ordered_json cert_json(const mh_certificate& c, bool two_d) {
  nlohmann::ordered_json j;
  j["pass"] = c.passed != 0;
  j["shifts_checked"] = c.checked;
  if (c.has_witness) {
    j["witness"] = two_d ? nlohmann::ordered_json{{"delta", c.shift}, {"tau", c.tau},
                                                  {"channel", c.channel}}
                         : nlohmann::ordered_json{{"shift", c.shift}, {"channel", c.channel}};
  }
  return j;
}

int cmd_verify(const Options& o) {
  require_format(o, {"text", "json"});
  const Output out{o};
  nlohmann::ordered_json doc;
  std::ostringstream text;
  bool passed = true;

  if (!o.in.empty()) {
    if (!o.algorithm.empty() || o.L != 0) usage("--in takes a sequence file; drop --algorithm/--L");
    mh_sequence* raw = nullptr;
    check(mh_sequence_read(o.in.c_str(), &raw));
    const Sequence s(raw);
    const auto n = o.N ? static_cast<std::uint32_t>(o.N) : mh_sequence_channel_universe(s.get());
    mh_certificate c{};
    check(mh_verify_1d_mrd(s.get(), n, &c));
    passed = c.passed;
    doc["source"] = o.in;
    doc["provenance"] = mh_sequence_provenance(s.get());
    doc["period"] = mh_sequence_period(s.get());
    doc["channels"] = n;
    doc["mrd_1d"] = cert_json(c, false);
    text << "1D-MRD over " << n << " channels, period " << mh_sequence_period(s.get()) << ": "
         << describe_1d(c) << '\n';
  } else {
    const auto alg = sized_algorithm(o);
    const auto n = universe_of(alg, o);
    doc["algorithm"] = o.algorithm;
    doc["channels"] = n;
    if (alg == MH_ALG_ORTHO_CH) {
      const auto p = ortho_prime(o.N);
      mh_ortho_report r{};
      check(mh_verify_ortho_family(p, n, &r));
      passed = r.passed;
      doc["p"] = p;
      doc["pairs_checked"] = r.pairs_checked;
      doc["pass"] = r.passed != 0;
      text << "ortho family p=" << p << ", " << r.pairs_checked << " ordered pairs and cover: ";
      if (r.passed) {
        text << "pass\n";
      } else if (r.has_failing_cover) {
        doc["failing_cover"] = r.cover_id;
        text << "FAIL: member " << r.cover_id << " misses a channel in some column\n";
      } else {
        doc["failing_pair"] = {r.r1, r.r2};
        text << "FAIL: pair (" << r.r1 << "," << r.r2 << ") lacks a coincidence\n";
      }
    } else {
      mh_matrix* mraw = nullptr;
      check(alg == MH_ALG_IDEAL_CH ? mh_mach_matrix(o.L, &mraw)
                                   : mh_general_mach_matrix(o.N, &mraw));
      const Matrix m(mraw);
      mh_certificate c2{};
      check(mh_verify_2d_mrd(m.get(), n, 0, &c2));
      mh_sequence* sraw = nullptr;
      check(mh_matrix_to_sequence(m.get(), &sraw));
      const Sequence s(sraw);
      mh_certificate c1{};
      check(mh_verify_1d_mrd(s.get(), n, &c1));
      passed = c1.passed && c2.passed;
      doc["p"] = mh_matrix_rows(m.get());
      doc["mrd_2d"] = cert_json(c2, true);
      doc["mrd_1d"] = cert_json(c1, false);
      text << "2D-MRD of the " << mh_matrix_rows(m.get()) << "x" << mh_matrix_cols(m.get())
           << " matrix: " << describe_2d(c2) << '\n'
           << "1D-MRD of the period-" << mh_sequence_period(s.get())
           << " sequence: " << describe_1d(c1) << '\n';
    }
  }
  doc["pass"] = passed;
  out.payload(o.format == "json" ? doc.dump(2) + '\n' : text.str());
  return passed ? kExitPass : kExitFail;
}

// ---- simulate and sweep -----------------------------------------------

struct SweepSetup {
  mh_sweep_config config{};
  std::vector<std::uint32_t> a1;
  std::vector<std::uint32_t> a2;
};

SweepSetup sweep_setup(const Options& o) {
  SweepSetup s;
  s.config.algorithm = sized_algorithm(o);
  if (s.config.algorithm == MH_ALG_IDEAL_CH) {
    s.config.L = o.L;
  } else {
    s.config.N = o.N;
  }
  if (!o.avail.empty()) usage("use --avail1 and --avail2 for the two users");
  s.a1 = parse_channels(o.avail1, "--avail1");
  s.a2 = parse_channels(o.avail2, "--avail2");
  s.config.avail1 = s.a1.data();
  s.config.avail1_len = s.a1.size();
  s.config.avail2 = s.a2.data();
  s.config.avail2_len = s.a2.size();
  s.config.seed = o.seed;
  if (o.seeds == 0) usage("--seeds must be at least 1");
  s.config.seed_count = o.seeds;
  return s;
}

std::vector<std::uint32_t> full_set(std::uint32_t n) {
  std::vector<std::uint32_t> v(n);
  for (std::uint32_t c = 0; c < n; ++c) v[c] = c;
  return v;
}

std::string optional_text(int met, std::uint64_t value) {
  return met ? std::to_string(value) : std::string("NA");
}

int cmd_simulate(const Options& o) {
  require_format(o, {"text", "csv", "json"});
  const Output out{o};
  Sequence s1;
  Sequence s2;
  std::vector<std::uint32_t> a1;
  std::vector<std::uint32_t> a2;
  std::optional<std::uint64_t> bound;
  const char* bound_metric = "";

  if (!o.in1.empty() || !o.in2.empty()) {
    if (o.in1.empty() || o.in2.empty()) usage("--in1 and --in2 go together");
    if (!o.algorithm.empty()) usage("--in1/--in2 replace --algorithm");
    mh_sequence* raw = nullptr;
    check(mh_sequence_read(o.in1.c_str(), &raw));
    s1.reset(raw);
    check(mh_sequence_read(o.in2.c_str(), &raw));
    s2.reset(raw);
    a1 = o.avail1.empty() ? full_set(mh_sequence_channel_universe(s1.get()))
                          : parse_channels(o.avail1, "--avail1");
    a2 = o.avail2.empty() ? full_set(mh_sequence_channel_universe(s2.get()))
                          : parse_channels(o.avail2, "--avail2");
  } else {
    auto setup = sweep_setup(o);
    const auto n = universe_of(setup.config.algorithm, o);
    mh_sequence* raw = nullptr;
    check(mh_experiment_sequence(&setup.config, 1, o.seed, &raw));
    s1.reset(raw);
    check(mh_experiment_sequence(&setup.config, 2, o.seed, &raw));
    s2.reset(raw);
    a1 = setup.a1.empty() ? full_set(n) : setup.a1;
    a2 = setup.a2.empty() ? full_set(n) : setup.a2;
    if (setup.config.algorithm == MH_ALG_ORTHO_CH) {
      std::uint64_t b = 0;
      check(mh_mttr_bound(o.N, &b));
      bound = b;
      bound_metric = "T";
    } else {
      bound = mh_sequence_period(s1.get());
      bound_metric = "Tsharp";
    }
  }

  mh_rendezvous r{};
  std::vector<mh_channel_time> per(a1.size());
  check(mh_simulate(s1.get(), s2.get(), o.drift, o.horizon, a1.data(), a1.size(), a2.data(),
                    a2.size(), &r, per.data(), per.size()));
  per.resize(r.common);

  bool passed = r.met && r.all_met;
  if (bound) {
    passed = std::string(bound_metric) == "T" ? r.met && r.ttr <= *bound
                                              : r.all_met && r.t_sharp <= *bound;
  }

  if (o.format == "csv") {
    out.payload("drift,seed,n1,n2,G,T,Tsharp\n" + std::to_string(r.drift) + ',' +
                std::to_string(o.seed) + ',' + std::to_string(a1.size()) + ',' +
                std::to_string(a2.size()) + ',' + std::to_string(r.common) + ',' +
                optional_text(r.met, r.ttr) + ',' + optional_text(r.all_met, r.t_sharp) + '\n');
  } else if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["drift"] = r.drift;
    doc["seed"] = o.seed;
    doc["n1"] = a1.size();
    doc["n2"] = a2.size();
    doc["G"] = r.common;
    doc["T"] = r.met ? nlohmann::ordered_json(r.ttr) : nlohmann::ordered_json(nullptr);
    doc["Tsharp"] = r.all_met ? nlohmann::ordered_json(r.t_sharp) : nlohmann::ordered_json(nullptr);
    auto& channels = doc["per_channel"] = nlohmann::ordered_json::object();
    for (const auto& c : per) {
      channels[std::to_string(c.channel)] =
          c.met ? nlohmann::ordered_json(c.time) : nlohmann::ordered_json(nullptr);
    }
    if (bound) {
      doc["bound_metric"] = bound_metric;
      doc["bound"] = *bound;
    }
    doc["pass"] = passed;
    out.payload(doc.dump(2) + '\n');
  } else {
    std::ostringstream os;
    os << "drift " << r.drift << ": T=" << optional_text(r.met, r.ttr)
       << " Tsharp=" << optional_text(r.all_met, r.t_sharp) << " G=" << r.common << '\n';
    for (const auto& c : per) os << "  channel " << c.channel << ": " << optional_text(c.met, c.time) << '\n';
    if (bound) {
      os << bound_metric << " bound " << *bound << ": " << (passed ? "pass" : "FAIL") << '\n';
    }
    out.payload(os.str());
  }
  return passed ? kExitPass : kExitFail;
}

int cmd_sweep(const Options& opts) {
  Options o = opts;
  if (o.format.empty()) o.format = "csv";
  require_format(o, {"text", "csv", "json"});
  const Output out{o};
  auto setup = sweep_setup(o);

  mh_sweep* raw = nullptr;
  check(mh_sweep_run(&setup.config, &raw));
  const Sweep sweep(raw);
  mh_sweep_summary s{};
  check(mh_sweep_get_summary(sweep.get(), &s));

  std::optional<mh_ettr> ettr;
  if (o.ettr_trials > 0) {
    mh_ettr e{};
    check(mh_ettr_estimate(&setup.config, o.ettr_trials, o.seed, &e));
    ettr = e;
  }

  std::ostringstream line;
  const bool mcttr = s.bound_is_mcttr != 0;
  const int met = mcttr ? s.mcttr_met : s.mttr_met;
  line << o.algorithm << (o.algorithm == "ideal-ch" ? " L=" + std::to_string(o.L)
                                                    : " N=" + std::to_string(o.N))
       << ": " << s.runs << " runs over " << s.period << " drifts x " << o.seeds
       << " seeds; MTTR " << optional_text(s.mttr_met, s.mttr) << ", MCTTR "
       << optional_text(s.mcttr_met, s.mcttr) << "; " << (mcttr ? "MCTTR" : "MTTR")
       << " observed " << optional_text(met, mcttr ? s.mcttr : s.mttr) << " (drift "
       << (mcttr ? s.mcttr_drift : s.mttr_drift) << ", seed " << (mcttr ? s.mcttr_seed : s.mttr_seed)
       << ") vs bound " << s.bound << ": " << (s.passed ? "PASS" : "FAIL") << '\n';
  if (ettr) {
    line << "ETTR " << ettr->mean << " +/- " << ettr->std_error << " over " << ettr->trials
         << " trials with uniform random drift";
    if (ettr->unmet) line << " (" << ettr->unmet << " unmet, excluded)";
    line << '\n';
  }

  if (o.format == "csv") {
    char* csv = nullptr;
    check(mh_sweep_csv(sweep.get(), &csv));
    out.payload(take(csv));
    out.info() << line.str();
  } else if (o.format == "json") {
    char* json = nullptr;
    check(mh_sweep_json(sweep.get(), &json));
    auto doc = nlohmann::ordered_json::parse(take(json));
    if (ettr) {
      doc["ettr"] = {{"mean", ettr->mean},
                     {"std_error", ettr->std_error},
                     {"trials", ettr->trials},
                     {"unmet", ettr->unmet},
                     {"drift_model", "uniform random"}};
    }
    out.payload(doc.dump(2) + '\n');
  } else {
    out.payload(line.str());
  }
  return s.passed ? kExitPass : kExitFail;
}

// ---- ratio ------------------------------------------------------------

int cmd_ratio(const Options& o) {
  require_format(o, {"text", "json"});
  if (!o.algorithm.empty() && o.algorithm != "general-mach") {
    usage("ratio describes the general construction only");
  }
  if (o.L != 0) usage("ratio takes --N, not --L");
  if (o.N == 0) usage("ratio requires --N");
  mh_ratio r{};
  check(mh_approximation_ratio(o.N, &r));
  const Output out{o};
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["N"] = o.N;
    doc["p"] = r.p;
    doc["rds_size"] = r.rds_size;
    doc["usable_channels"] = r.usable_channels;
    doc["numerator"] = r.numerator;
    doc["denominator"] = r.denominator;
    doc["ratio"] = r.value;
    out.payload(doc.dump(2) + '\n');
  } else {
    std::ostringstream os;
    os.precision(6);
    os << "N=" << o.N << " p=" << r.p << " |D|=" << r.rds_size << " usable=" << r.usable_channels
       << " ratio=" << r.numerator << "/" << r.denominator << "=" << std::fixed << r.value << '\n';
    out.payload(os.str());
  }
  return kExitPass;
}

void add_sizing(CLI::App* cmd, Options& o) {
  cmd->add_option("--algorithm", o.algorithm, "ideal-ch, ortho-ch or general-mach");
  cmd->add_option("--L", o.L, "IDEAL-CH order (N = L^2 channels)");
  cmd->add_option("--N", o.N, "number of channels (ortho-ch, general-mach)");
  cmd->add_option("--seed", o.seed, "replacement / ID seed");
  cmd->add_option("--out", o.out, "write the output here instead of stdout");
  cmd->add_option("--format", o.format, "text, csv or json (sweep defaults to csv, others to text)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Channel-hopping sequence generation, verification and rendezvous simulation"};
  app.set_version_flag("--version", std::string(mh_version()));
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "write a channel-hopping sequence or matrix");
  add_sizing(generate, o);
  generate->add_option("--avail", o.avail, "available channels, e.g. 0,1,3 (default: all)");
  generate->add_option("--id", o.id, "ORTHO-CH ID channel (default: picked from --seed)");
  generate->add_option("--emit", o.emit, "sequence or matrix");

  auto* verify = app.add_subcommand("verify", "certify rendezvous diversity");
  add_sizing(verify, o);
  verify->add_option("--in", o.in, "sequence file to verify (1D-MRD)");

  auto* simulate = app.add_subcommand("simulate", "run two users at one drift");
  add_sizing(simulate, o);
  simulate->add_option("--avail", o.avail)->group("");
  simulate->add_option("--avail1", o.avail1, "user 1 channels (default: all)");
  simulate->add_option("--avail2", o.avail2, "user 2 channels (default: all)");
  simulate->add_option("--drift", o.drift, "clock drift of user 2");
  simulate->add_option("--horizon", o.horizon, "slots to simulate (default: twice the period)");
  simulate->add_option("--in1", o.in1, "user 1 sequence file");
  simulate->add_option("--in2", o.in2, "user 2 sequence file");

  auto* sweep = app.add_subcommand("sweep", "all drifts over several seeds, checked against the bound");
  add_sizing(sweep, o);
  sweep->add_option("--avail", o.avail)->group("");
  sweep->add_option("--avail1", o.avail1, "user 1 channels (default: all)");
  sweep->add_option("--avail2", o.avail2, "user 2 channels (default: all)");
  sweep->add_option("--seeds", o.seeds, "number of seeds, starting at --seed")->capture_default_str();
  sweep->add_option("--ettr-trials", o.ettr_trials, "also estimate ETTR with this many trials");

  auto* ratio = app.add_subcommand("ratio", "approximation ratio of the general construction");
  add_sizing(ratio, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (o.format.empty() && !*sweep) o.format = "text";
  try {
    if (*generate) return cmd_generate(o);
    if (*verify) return cmd_verify(o);
    if (*simulate) return cmd_simulate(o);
    if (*sweep) return cmd_sweep(o);
    return cmd_ratio(o);
  } catch (const CliError& e) {
    std::cerr << "machhop: " << e.message << '\n';
    return e.code;
  }
}
