#include "machhop/machhop.h"

#include <cstring>
#include <new>
#include <string>

#include "machhop/diffsets.hpp"
#include "machhop/error.hpp"
#include "machhop/experiment.hpp"
#include "machhop/idealmat.hpp"
#include "machhop/io.hpp"
#include "machhop/machseq.hpp"
#include "machhop/numtheory.hpp"
#include "machhop/orthoch.hpp"
#include "machhop/simulator.hpp"

using namespace machhop;

struct mh_sequence {
  ChSequence value;
};

struct mh_matrix {
  ChMatrix value;
};

struct mh_sweep {
  SweepSummary summary;
};

namespace {

thread_local std::string g_last_error;

mh_status status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::precondition: return MH_ERR_PRECONDITION;
    case ErrorKind::capability: return MH_ERR_CAPABILITY;
    case ErrorKind::malformed_input: return MH_ERR_MALFORMED;
    case ErrorKind::parse: return MH_ERR_PARSE;
    case ErrorKind::io: return MH_ERR_IO;
  }
  return MH_ERR_INTERNAL;
}

mh_status set_error(mh_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
mh_status guard(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const Error& e) {
    return set_error(status_for(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MH_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(MH_ERR_INTERNAL, "unknown failure");
  }
}

#define MH_REQUIRE_ARG(cond, what) \
  if (!(cond)) return set_error(MH_ERR_INVALID_ARGUMENT, what)

char* duplicate(const std::string& text) {
  auto* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::vector<Channel> to_channels(const std::uint32_t* values, std::size_t len) {
  if (!values) return {};
  return std::vector<Channel>(values, values + len);
}

mh_status emit(ChSequence s, mh_sequence** out) {
  *out = new mh_sequence{std::move(s)};
  return MH_OK;
}

mh_status emit(ChMatrix m, mh_matrix** out) {
  *out = new mh_matrix{std::move(m)};
  return MH_OK;
}

void fill(mh_certificate* out, const Mrd1dCertificate& c) {
  *out = mh_certificate{};
  out->passed = c.passed;
  out->checked = c.shifts_checked;
  if (c.missing) {
    out->has_witness = 1;
    out->shift = c.missing->shift;
    out->channel = c.missing->channel;
  }
}

void fill(mh_certificate* out, const Mrd2dCertificate& c) {
  *out = mh_certificate{};
  out->passed = c.passed;
  out->checked = c.shifts_checked;
  if (c.missing) {
    out->has_witness = 1;
    out->shift = c.missing->delta;
    out->tau = c.missing->tau;
    out->channel = c.missing->channel;
  }
}

ExperimentConfig to_config(const mh_sweep_config& c) {
  ExperimentConfig config;
  switch (c.algorithm) {
    case MH_ALG_IDEAL_CH: config.algorithm = Algorithm::ideal_ch; break;
    case MH_ALG_ORTHO_CH: config.algorithm = Algorithm::ortho_ch; break;
    case MH_ALG_GENERAL_MACH: config.algorithm = Algorithm::general_mach; break;
    default: fail(ErrorKind::precondition, "unknown algorithm");
  }
  config.L = c.L;
  config.N = c.N;
  config.avail1 = to_channels(c.avail1, c.avail1_len);
  config.avail2 = to_channels(c.avail2, c.avail2_len);
  config.seed = c.seed;
  config.seed_count = c.seed_count;
  return config;
}

}  // namespace

extern "C" {

const char* mh_version(void) { return "0.1.0"; }

const char* mh_last_error(void) { return g_last_error.c_str(); }

const char* mh_status_name(mh_status status) {
  switch (status) {
    case MH_OK: return "ok";
    case MH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MH_ERR_PRECONDITION: return "precondition violated";
    case MH_ERR_CAPABILITY: return "capability exceeded";
    case MH_ERR_MALFORMED: return "malformed input";
    case MH_ERR_PARSE: return "parse error";
    case MH_ERR_IO: return "i/o error";
    case MH_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case MH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void mh_string_free(char* text) { std::free(text); }

int mh_is_prime(uint64_t n) { return is_prime(n) ? 1 : 0; }

mh_status mh_smallest_prime_geq(uint64_t n, uint64_t* out) {
  MH_REQUIRE_ARG(out, "out is null");
  return guard([&] {
    *out = smallest_prime_geq(n);
    return MH_OK;
  });
}

mh_status mh_general_prime_for(uint64_t n_channels, uint64_t* out) {
  MH_REQUIRE_ARG(out, "out is null");
  return guard([&] {
    *out = general_prime_for(n_channels);
    return MH_OK;
  });
}

mh_status mh_valid_ideal_L_list(uint64_t limit, uint64_t* out, size_t cap, size_t* count) {
  MH_REQUIRE_ARG(count, "count is null");
  MH_REQUIRE_ARG(out || cap == 0, "out is null");
  return guard([&] {
    const auto list = valid_ideal_L_list(limit);
    *count = list.size();
    for (std::size_t i = 0; i < list.size() && i < cap; ++i) out[i] = list[i];
    return list.size() > cap ? set_error(MH_ERR_BUFFER_TOO_SMALL, "list longer than buffer")
                             : MH_OK;
  });
}

mh_status mh_ideal_ch(uint64_t L, mh_sequence** out) {
  MH_REQUIRE_ARG(out, "out is null");
  return guard([&] { return emit(ideal_ch(L), out); });
}

mh_status mh_general_mach_sequence(uint64_t n_channels, mh_sequence** out) {
  MH_REQUIRE_ARG(out, "out is null");
  return guard([&] { return emit(general_mach_sequence(n_channels), out); });
}

mh_status mh_ortho_ch(uint32_t n_channels, const uint32_t* avail, size_t avail_len,
                      uint64_t seed, int64_t forced_id, mh_sequence** out) {
  MH_REQUIRE_ARG(out, "out is null");
  MH_REQUIRE_ARG(avail || avail_len == 0, "avail is null");
  return guard([&] {
    const AvailableChannelSet set(to_channels(avail, avail_len), n_channels);
    std::optional<Channel> forced;
    if (forced_id >= 0) forced = static_cast<Channel>(forced_id);
    return emit(ortho_ch(set, seed, forced), out);
  });
}

mh_status mh_sequence_replace_unavailable(const mh_sequence* seq, const uint32_t* avail,
                                          size_t avail_len, uint64_t seed, mh_sequence** out) {
  MH_REQUIRE_ARG(seq && out, "null argument");
  MH_REQUIRE_ARG(avail || avail_len == 0, "avail is null");
  return guard([&] {
    const AvailableChannelSet set(to_channels(avail, avail_len), seq->value.channel_universe());
    return emit(replace_unavailable(seq->value, set, seed), out);
  });
}

mh_status mh_pick_id_channel(uint32_t n_channels, const uint32_t* avail, size_t avail_len,
                             uint64_t seed, int64_t* out) {
  MH_REQUIRE_ARG(out, "out is null");
  MH_REQUIRE_ARG(avail || avail_len == 0, "avail is null");
  return guard([&] {
    const AvailableChannelSet set(to_channels(avail, avail_len), n_channels);
    const auto id = pick_id_channel(set, seed);
    *out = id ? static_cast<int64_t>(*id) : -1;
    return MH_OK;
  });
}

mh_status mh_sequence_from_values(const uint32_t* values, size_t len, uint32_t n_channels,
                                  const char* provenance, mh_sequence** out) {
  MH_REQUIRE_ARG(out, "out is null");
  MH_REQUIRE_ARG(values || len == 0, "values is null");
  return guard([&] {
    return emit(ChSequence(to_channels(values, len), n_channels,
                           provenance ? provenance : "external"),
                out);
  });
}

mh_status mh_sequence_parse(const char* text, mh_sequence** out) {
  MH_REQUIRE_ARG(text && out, "null argument");
  return guard([&] { return emit(parse_sequence(text), out); });
}

mh_status mh_sequence_read(const char* path, mh_sequence** out) {
  MH_REQUIRE_ARG(path && out, "null argument");
  return guard([&] { return emit(read_sequence_file(path), out); });
}

void mh_sequence_free(mh_sequence* seq) { delete seq; }

size_t mh_sequence_period(const mh_sequence* seq) { return seq ? seq->value.period() : 0; }

uint32_t mh_sequence_channel_universe(const mh_sequence* seq) {
  return seq ? seq->value.channel_universe() : 0;
}

const char* mh_sequence_provenance(const mh_sequence* seq) {
  return seq ? seq->value.provenance().c_str() : "";
}

mh_status mh_sequence_values(const mh_sequence* seq, uint32_t* out, size_t cap) {
  MH_REQUIRE_ARG(seq && out, "null argument");
  const auto v = seq->value.values();
  if (cap < v.size()) return set_error(MH_ERR_BUFFER_TOO_SMALL, "buffer shorter than period");
  std::copy(v.begin(), v.end(), out);
  return MH_OK;
}

mh_status mh_sequence_format(const mh_sequence* seq, char** out_text) {
  MH_REQUIRE_ARG(seq && out_text, "null argument");
  return guard([&] {
    *out_text = duplicate(format_sequence(seq->value));
    return MH_OK;
  });
}

mh_status mh_sequence_write(const mh_sequence* seq, const char* path) {
  MH_REQUIRE_ARG(seq && path, "null argument");
  return guard([&] {
    write_text_file(path, format_sequence(seq->value));
    return MH_OK;
  });
}

mh_status mh_semi_mach_matrix(uint64_t p, mh_matrix** out) {
  MH_REQUIRE_ARG(out, "out is null");
  return guard(
      [&] { return emit(build_semi_mach(build_ideal_matrix(p, IdealPreset::triangular)), out); });
}

mh_status mh_mach_matrix(uint64_t L, mh_matrix** out) {
  MH_REQUIRE_ARG(out, "out is null");
  return guard([&] { return emit(build_mach_matrix(L), out); });
}

mh_status mh_general_mach_matrix(uint64_t n_channels, mh_matrix** out) {
  MH_REQUIRE_ARG(out, "out is null");
  return guard([&] { return emit(build_general_mach_matrix(n_channels), out); });
}

mh_status mh_ortho_member_matrix(uint64_t p, uint64_t r, mh_matrix** out) {
  MH_REQUIRE_ARG(out, "out is null");
  return guard([&] { return emit(ortho_member_matrix(p, r), out); });
}

mh_status mh_ortho_extended_matrix(uint64_t p, uint64_t r, mh_matrix** out) {
  MH_REQUIRE_ARG(out, "out is null");
  return guard([&] { return emit(ortho_extended_matrix(p, r), out); });
}

void mh_matrix_free(mh_matrix* m) { delete m; }

size_t mh_matrix_rows(const mh_matrix* m) { return m ? m->value.rows() : 0; }

size_t mh_matrix_cols(const mh_matrix* m) { return m ? m->value.cols() : 0; }

uint32_t mh_matrix_channel_universe(const mh_matrix* m) {
  return m ? m->value.channel_universe() : 0;
}

mh_status mh_matrix_cells(const mh_matrix* m, uint32_t* out, size_t cap) {
  MH_REQUIRE_ARG(m && out, "null argument");
  const auto cells = m->value.cells();
  if (cap < cells.size()) return set_error(MH_ERR_BUFFER_TOO_SMALL, "buffer shorter than matrix");
  std::copy(cells.begin(), cells.end(), out);
  return MH_OK;
}

mh_status mh_matrix_format(const mh_matrix* m, char** out_text) {
  MH_REQUIRE_ARG(m && out_text, "null argument");
  return guard([&] {
    *out_text = duplicate(format_matrix(m->value));
    return MH_OK;
  });
}

mh_status mh_matrix_to_sequence(const mh_matrix* m, mh_sequence** out) {
  MH_REQUIRE_ARG(m && out, "null argument");
  return guard([&] { return emit(mach_matrix_to_sequence(m->value), out); });
}

mh_status mh_ideal_matrix_render(uint64_t p, char** out_text) {
  MH_REQUIRE_ARG(out_text, "out is null");
  return guard([&] {
    *out_text = duplicate(render_dense(build_ideal_matrix(p, IdealPreset::triangular)));
    return MH_OK;
  });
}

mh_status mh_verify_1d_mrd(const mh_sequence* seq, uint32_t n_channels, mh_certificate* out) {
  MH_REQUIRE_ARG(seq && out, "null argument");
  return guard([&] {
    fill(out, verify_1d_mrd(seq->value, n_channels));
    return MH_OK;
  });
}

mh_status mh_verify_2d_mrd(const mh_matrix* m, uint32_t n_channels, int skip_tau_zero,
                           mh_certificate* out) {
  MH_REQUIRE_ARG(m && out, "null argument");
  return guard([&] {
    fill(out, verify_2d_mrd(m->value, n_channels, skip_tau_zero != 0));
    return MH_OK;
  });
}

mh_status mh_verify_ortho_family(uint64_t p, uint32_t n_channels, mh_ortho_report* out) {
  MH_REQUIRE_ARG(out, "out is null");
  return guard([&] {
    const auto report = verify_ortho_family(build_ortho_family(p), n_channels);
    *out = mh_ortho_report{};
    out->passed = report.passed;
    out->pairs_checked = report.pairs_checked;
    if (report.failing_pair) {
      out->has_failing_pair = 1;
      out->r1 = report.failing_pair->first;
      out->r2 = report.failing_pair->second;
    }
    if (report.failing_cover) {
      out->has_failing_cover = 1;
      out->cover_id = *report.failing_cover;
    }
    return MH_OK;
  });
}

mh_status mh_approximation_ratio(uint64_t n_channels, mh_ratio* out) {
  MH_REQUIRE_ARG(out, "out is null");
  return guard([&] {
    const auto r = approximation_ratio(n_channels);
    *out = mh_ratio{r.p, r.rds_size, r.usable_channels, r.numerator, r.denominator, r.value};
    return MH_OK;
  });
}

mh_status mh_mttr_bound(uint64_t n_channels, uint64_t* out) {
  MH_REQUIRE_ARG(out, "out is null");
  return guard([&] {
    *out = mttr_bound(n_channels);
    return MH_OK;
  });
}

mh_status mh_simulate(const mh_sequence* s1, const mh_sequence* s2, uint64_t drift,
                      uint64_t horizon, const uint32_t* avail1, size_t avail1_len,
                      const uint32_t* avail2, size_t avail2_len, mh_rendezvous* out,
                      mh_channel_time* per_channel, size_t per_channel_cap) {
  MH_REQUIRE_ARG(s1 && s2 && out, "null argument");
  MH_REQUIRE_ARG(avail1 && avail2, "available sets are required");
  return guard([&] {
    const AvailableChannelSet a1(to_channels(avail1, avail1_len), s1->value.channel_universe());
    const AvailableChannelSet a2(to_channels(avail2, avail2_len), s2->value.channel_universe());
    const std::uint64_t h = horizon ? horizon : default_horizon(s1->value, s2->value);
    const auto report = run(s1->value, s2->value, drift, h, a1, a2);
    *out = mh_rendezvous{};
    out->drift = drift;
    out->met = report.ttr.has_value();
    out->ttr = report.ttr.value_or(0);
    out->all_met = report.t_sharp.has_value();
    out->t_sharp = report.t_sharp.value_or(0);
    out->common = report.common_channels.size();
    if (per_channel) {
      std::size_t n = 0;
      for (const auto& [channel, time] : report.per_channel) {
        if (n == per_channel_cap) break;
        per_channel[n++] = mh_channel_time{channel, time.has_value(), time.value_or(0)};
      }
    }
    return MH_OK;
  });
}

mh_status mh_experiment_sequence(const mh_sweep_config* config, int user, uint64_t seed,
                                 mh_sequence** out) {
  MH_REQUIRE_ARG(config && out, "null argument");
  MH_REQUIRE_ARG(user == 1 || user == 2, "user must be 1 or 2");
  return guard([&] { return emit(experiment_sequence(to_config(*config), user, seed), out); });
}

mh_status mh_sweep_run(const mh_sweep_config* config, mh_sweep** out) {
  MH_REQUIRE_ARG(config && out, "null argument");
  return guard([&] {
    *out = new mh_sweep{run_experiment_sweep(to_config(*config))};
    return MH_OK;
  });
}

void mh_sweep_free(mh_sweep* sweep) { delete sweep; }

mh_status mh_sweep_get_summary(const mh_sweep* sweep, mh_sweep_summary* out) {
  MH_REQUIRE_ARG(sweep && out, "null argument");
  const auto& s = sweep->summary;
  *out = mh_sweep_summary{};
  out->period = s.period;
  out->horizon = s.result.horizon;
  out->runs = s.result.records.size();
  out->bound = s.bound;
  out->bound_is_mcttr = s.metric == "mcttr";
  out->mttr_met = s.result.mttr.value.has_value();
  out->mttr = s.result.mttr.value.value_or(0);
  out->mttr_drift = s.result.mttr.drift;
  out->mttr_seed = s.result.mttr.seed;
  out->mcttr_met = s.result.mcttr.value.has_value();
  out->mcttr = s.result.mcttr.value.value_or(0);
  out->mcttr_drift = s.result.mcttr.drift;
  out->mcttr_seed = s.result.mcttr.seed;
  out->passed = s.passed;
  return MH_OK;
}

mh_status mh_sweep_csv(const mh_sweep* sweep, char** out_text) {
  MH_REQUIRE_ARG(sweep && out_text, "null argument");
  return guard([&] {
    *out_text = duplicate(format_runs_csv(sweep->summary.result.records));
    return MH_OK;
  });
}

mh_status mh_sweep_json(const mh_sweep* sweep, char** out_text) {
  MH_REQUIRE_ARG(sweep && out_text, "null argument");
  return guard([&] {
    *out_text = duplicate(format_summary_json(sweep->summary));
    return MH_OK;
  });
}

mh_status mh_ettr_estimate(const mh_sweep_config* config, uint64_t trials, uint64_t rng_seed,
                           mh_ettr* out) {
  MH_REQUIRE_ARG(config && out, "null argument");
  return guard([&] {
    const auto e = run_experiment_ettr(to_config(*config), trials, rng_seed);
    *out = mh_ettr{e.mean, e.std_error, e.trials, e.unmet};
    return MH_OK;
  });
}

mh_status mh_ettr_random_reference(uint32_t n_channels, const uint32_t* avail1,
                                   size_t avail1_len, const uint32_t* avail2, size_t avail2_len,
                                   uint64_t trials, uint64_t rng_seed, mh_ettr* out) {
  MH_REQUIRE_ARG(avail1 && avail2 && out, "null argument");
  return guard([&] {
    const AvailableChannelSet a1(to_channels(avail1, avail1_len), n_channels);
    const AvailableChannelSet a2(to_channels(avail2, avail2_len), n_channels);
    const auto e = ettr_random_reference(a1, a2, trials, rng_seed);
    *out = mh_ettr{e.mean, e.std_error, e.trials, e.unmet};
    return MH_OK;
  });
}

}  // extern "C"
