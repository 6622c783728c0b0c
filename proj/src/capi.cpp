#include "stanley/stanley.h"

#include <cstring>
#include <iostream>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "stanley/analysis.hpp"
#include "stanley/error.hpp"
#include "stanley/fault.hpp"
#include "stanley/io.hpp"
#include "stanley/sequence.hpp"

static_assert(STANLEY_ERR_EMPTY_SEED == 1 && STANLEY_ERR_CONSISTENCY_ERROR == 18,
              "stanley_status must mirror stanley::ErrorCode order");

struct stanley_sequence {
  stanley::SequenceState state;
};

struct stanley_view {
  stanley::SequenceView view;
};

namespace {

thread_local std::string last_error;

stanley_status from_code(stanley::ErrorCode code) {
  using stanley::ErrorCode;
  switch (code) {
    case ErrorCode::empty_seed: return STANLEY_ERR_EMPTY_SEED;
    case ErrorCode::negative_element: return STANLEY_ERR_NEGATIVE_ELEMENT;
    case ErrorCode::not_progression_free: return STANLEY_ERR_NOT_PROGRESSION_FREE;
    case ErrorCode::bad_k: return STANLEY_ERR_BAD_K;
    case ErrorCode::overflow: return STANLEY_ERR_OVERFLOW;
    case ErrorCode::capacity_exceeded: return STANLEY_ERR_CAPACITY_EXCEEDED;
    case ErrorCode::out_of_range: return STANLEY_ERR_OUT_OF_RANGE;
    case ErrorCode::incomplete_prefix: return STANLEY_ERR_INCOMPLETE_PREFIX;
    case ErrorCode::empty_range: return STANLEY_ERR_EMPTY_RANGE;
    case ErrorCode::bad_input: return STANLEY_ERR_BAD_INPUT;
    case ErrorCode::bad_epsilon: return STANLEY_ERR_BAD_EPSILON;
    case ErrorCode::too_short: return STANLEY_ERR_TOO_SHORT;
    case ErrorCode::too_few_samples: return STANLEY_ERR_TOO_FEW_SAMPLES;
    case ErrorCode::degenerate_samples: return STANLEY_ERR_DEGENERATE_SAMPLES;
    case ErrorCode::unsupported_k: return STANLEY_ERR_UNSUPPORTED_K;
    case ErrorCode::io_failure: return STANLEY_ERR_IO_FAILURE;
    case ErrorCode::parse_error: return STANLEY_ERR_PARSE_ERROR;
    case ErrorCode::consistency_error: return STANLEY_ERR_CONSISTENCY_ERROR;
  }
  return STANLEY_ERR_INTERNAL;
}

stanley_status fail(stanley_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
stanley_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return STANLEY_OK;
  } catch (const stanley::Error& e) {
    return fail(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(STANLEY_ERR_CAPACITY_EXCEEDED, "out of memory");
  } catch (const std::exception& e) {
    return fail(STANLEY_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(STANLEY_ERR_INTERNAL, "unknown exception");
  }
}

#define STANLEY_REQUIRE(cond)                                                    \
  do {                                                                           \
    if (!(cond)) return fail(STANLEY_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

stanley::Engine to_engine(stanley_engine e) {
  if (e == STANLEY_ENGINE_SIEVE) return stanley::Engine::sieve;
  if (e == STANLEY_ENGINE_DIRECT) return stanley::Engine::direct;
  throw stanley::Error(stanley::ErrorCode::bad_input, "unknown engine");
}

stanley_status copy_span(std::span<const std::uint64_t> src, size_t offset, uint64_t* buf, size_t cap,
                         size_t* out_len) {
  STANLEY_REQUIRE(out_len);
  STANLEY_REQUIRE(buf || cap == 0);
  *out_len = 0;
  if (offset >= src.size()) return STANLEY_OK;
  const size_t n = std::min(cap, src.size() - offset);
  std::memcpy(buf, src.data() + offset, n * sizeof(uint64_t));
  *out_len = n;
  return STANLEY_OK;
}

stanley_report to_c(const stanley::VerificationReport& r) {
  stanley_report out{};
  out.inequality = static_cast<stanley_inequality>(r.inequality);
  out.range_lo = r.range_lo;
  out.range_hi = r.range_hi;
  out.passed = r.passed();
  out.vacuous = r.vacuous;
  out.location = r.counterexample ? r.counterexample->location : 0;
  out.lhs = r.final_lhs;
  out.rhs = r.final_rhs;
  return out;
}

stanley::VerificationReport from_c(const stanley_report& r) {
  stanley::VerificationReport out;
  out.inequality = static_cast<stanley::Inequality>(r.inequality);
  out.range_lo = r.range_lo;
  out.range_hi = r.range_hi;
  out.vacuous = r.vacuous != 0;
  out.final_lhs = r.lhs;
  out.final_rhs = r.rhs;
  if (!r.passed) out.counterexample = stanley::Counterexample{r.location, r.lhs, r.rhs};
  return out;
}

void emit(const char* path, const std::function<void(std::ostream&)>& fill) {
  if (!path) throw stanley::Error(stanley::ErrorCode::io_failure, "null output path");
  if (std::strcmp(path, "-") == 0) {
    fill(std::cout);
    std::cout.flush();
    if (!std::cout) throw stanley::Error(stanley::ErrorCode::io_failure, "write to standard output failed");
    return;
  }
  stanley::io::atomic_write(path, fill);
}

stanley::CountingProfile profile_of(const stanley_view* view, const uint64_t* xs, size_t n) {
  return stanley::counting_profile(view->view, std::span<const std::uint64_t>(xs, n));
}

}  // namespace

extern "C" {

const char* stanley_status_name(stanley_status status) {
  switch (status) {
    case STANLEY_OK: return "Ok";
    case STANLEY_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case STANLEY_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status > STANLEY_OK && status < STANLEY_ERR_INVALID_ARGUMENT)
    return stanley::to_string(static_cast<stanley::ErrorCode>(status - 1));
  return "Unknown";
}

const char* stanley_last_error(void) { return last_error.c_str(); }

stanley_status stanley_validate_seed(const int64_t* raw, size_t n, int k, uint64_t* buf, size_t cap,
                                     size_t* out_len) {
  STANLEY_REQUIRE(raw || n == 0);
  STANLEY_REQUIRE(out_len);
  *out_len = 0;
  try {
    const auto seed = stanley::validate_seed(std::span<const int64_t>(raw, n), k);
    return copy_span(seed.elements(), 0, buf, cap, out_len);
  } catch (const stanley::ProgressionError& e) {
    copy_span(e.witness(), 0, buf, cap, out_len);
    return fail(STANLEY_ERR_NOT_PROGRESSION_FREE, e.what());
  } catch (const stanley::Error& e) {
    return fail(from_code(e.code()), e.what());
  }
}

stanley_status stanley_sequence_create(const int64_t* raw, size_t n, int k, stanley_engine engine,
                                       stanley_sequence** out) {
  STANLEY_REQUIRE(raw || n == 0);
  STANLEY_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto seed = stanley::validate_seed(std::span<const int64_t>(raw, n), k);
    *out = new stanley_sequence{stanley::SequenceState(std::move(seed), to_engine(engine))};
  });
}

void stanley_sequence_destroy(stanley_sequence* seq) { delete seq; }

stanley_status stanley_sequence_next(stanley_sequence* seq, uint64_t* out_term) {
  STANLEY_REQUIRE(seq);
  return guarded([&] {
    const auto t = seq->state.next_term();
    if (out_term) *out_term = t;
  });
}

stanley_status stanley_sequence_extend_to_bound(stanley_sequence* seq, uint64_t x) {
  STANLEY_REQUIRE(seq);
  return guarded([&] { seq->state.extend_to_bound(x); });
}

stanley_status stanley_sequence_extend_to_count(stanley_sequence* seq, size_t count) {
  STANLEY_REQUIRE(seq);
  return guarded([&] { seq->state.extend_to_count(count); });
}

stanley_status stanley_sequence_is_admissible(const stanley_sequence* seq, uint64_t n, int* out) {
  STANLEY_REQUIRE(seq && out);
  return guarded([&] { *out = seq->state.is_admissible(n) ? 1 : 0; });
}

size_t stanley_sequence_size(const stanley_sequence* seq) { return seq ? seq->state.terms().size() : 0; }

uint64_t stanley_sequence_complete_to(const stanley_sequence* seq) {
  return seq ? seq->state.complete_to() : 0;
}

uint64_t stanley_sequence_forbidden_bits(const stanley_sequence* seq) {
  return seq ? seq->state.forbidden_bits() : 0;
}

stanley_status stanley_sequence_copy_terms(const stanley_sequence* seq, size_t offset, uint64_t* buf,
                                           size_t cap, size_t* out_len) {
  STANLEY_REQUIRE(seq);
  return copy_span(seq->state.terms(), offset, buf, cap, out_len);
}

stanley_status stanley_sequence_snapshot(const stanley_sequence* seq, stanley_view** out) {
  STANLEY_REQUIRE(seq && out);
  *out = nullptr;
  return guarded([&] { *out = new stanley_view{seq->state.snapshot()}; });
}

stanley_status stanley_sequence_resume(const stanley_view* view, stanley_engine engine,
                                       stanley_sequence** out) {
  STANLEY_REQUIRE(view && out);
  *out = nullptr;
  return guarded([&] {
    *out = new stanley_sequence{stanley::SequenceState::resume(view->view, to_engine(engine))};
  });
}

stanley_status stanley_sequence_suppress_forbidden(stanley_sequence* seq, uint64_t v) {
  STANLEY_REQUIRE(seq);
  return guarded([&] { seq->state.suppress_forbidden(v); });
}

void stanley_view_destroy(stanley_view* view) { delete view; }

size_t stanley_view_size(const stanley_view* view) { return view ? view->view.terms().size() : 0; }

uint64_t stanley_view_complete_to(const stanley_view* view) { return view ? view->view.complete_to() : 0; }

int stanley_view_k(const stanley_view* view) { return view ? view->view.k() : 0; }

uint64_t stanley_view_seed_max(const stanley_view* view) { return view ? view->view.seed().max() : 0; }

stanley_status stanley_view_copy_terms(const stanley_view* view, size_t offset, uint64_t* buf, size_t cap,
                                       size_t* out_len) {
  STANLEY_REQUIRE(view);
  return copy_span(view->view.terms(), offset, buf, cap, out_len);
}

stanley_status stanley_view_corrupt(const stanley_view* view, stanley_fault fault, const uint64_t* values,
                                    size_t n, stanley_view** out) {
  STANLEY_REQUIRE(view && out);
  STANLEY_REQUIRE(values || n == 0);
  *out = nullptr;
  return guarded([&] {
    const std::span<const std::uint64_t> vs(values, n);
    switch (fault) {
      case STANLEY_FAULT_PHANTOM_MEMBERS:
        *out = new stanley_view{stanley::fault::with_phantom_members(view->view, vs)};
        return;
      case STANLEY_FAULT_HIDDEN_MEMBERS:
        *out = new stanley_view{stanley::fault::with_hidden_members(view->view, vs)};
        return;
      case STANLEY_FAULT_DROPPED_TERMS:
        *out = new stanley_view{stanley::fault::without_terms(view->view, vs)};
        return;
    }
    throw stanley::Error(stanley::ErrorCode::bad_input, "unknown fault kind");
  });
}

stanley_status stanley_h_count(const stanley_view* view, uint64_t n, uint64_t* out) {
  STANLEY_REQUIRE(view && out);
  return guarded([&] { *out = stanley::h_count(view->view, n); });
}

stanley_status stanley_counting_function(const stanley_view* view, uint64_t x, uint64_t* out) {
  STANLEY_REQUIRE(view && out);
  return guarded([&] { *out = stanley::counting_function(view->view, x); });
}

stanley_status stanley_verify(const stanley_view* view, stanley_inequality which, uint64_t bound,
                              stanley_report* out) {
  STANLEY_REQUIRE(view && out);
  return guarded([&] {
    const auto& v = view->view;
    switch (which) {
      case STANLEY_INEQ_MEMBERSHIP_CRITERION: *out = to_c(stanley::verify_membership_criterion(v, bound)); return;
      case STANLEY_INEQ_PAIR_BOUND: *out = to_c(stanley::verify_pair_bound(v, bound)); return;
      case STANLEY_INEQ_NONMEMBER_BOUND: *out = to_c(stanley::verify_nonmember_bound(v, bound)); return;
      case STANLEY_INEQ_QUADRATIC_BOUND: *out = to_c(stanley::verify_quadratic_bound(v, bound)); return;
      case STANLEY_INEQ_THEOREM_FLOOR: *out = to_c(stanley::verify_theorem_floor(v, bound)); return;
    }
    throw stanley::Error(stanley::ErrorCode::bad_input, "unknown inequality");
  });
}

stanley_status stanley_theorem_floor(uint64_t x, uint64_t max_a, uint64_t* out) {
  STANLEY_REQUIRE(out);
  return guarded([&] { *out = stanley::theorem_floor(x, max_a); });
}

stanley_status stanley_geometric_grid(double base, double ratio, uint64_t max_x, uint64_t* buf, size_t cap,
                                      size_t* out_len) {
  STANLEY_REQUIRE(out_len);
  std::vector<std::uint64_t> xs;
  const auto st = guarded([&] { xs = stanley::geometric_grid(base, ratio, max_x); });
  if (st != STANLEY_OK) return st;
  return copy_span(xs, 0, buf, cap, out_len);
}

stanley_status stanley_theorem_check(const stanley_view* view, const uint64_t* xs, size_t n, double epsilon,
                                     stanley_theorem_result* out) {
  STANLEY_REQUIRE(view && out);
  STANLEY_REQUIRE(xs || n == 0);
  return guarded([&] {
    const auto check = stanley::theorem_check(profile_of(view, xs, n), epsilon);
    *out = stanley_theorem_result{};
    out->epsilon = check.epsilon;
    out->has_x0 = check.x0_observed.has_value();
    out->x0_observed = check.x0_observed.value_or(0);
    out->floor_holds = check.floor_holds;
    out->first_floor_violation = check.first_floor_violation.value_or(0);
  });
}

stanley_status stanley_exponent_fit(const stanley_view* view, const uint64_t* xs, size_t n, stanley_fit* out) {
  STANLEY_REQUIRE(view && out);
  STANLEY_REQUIRE(xs || n == 0);
  return guarded([&] {
    const auto fit = stanley::exponent_fit(profile_of(view, xs, n));
    *out = stanley_fit{fit.slope, fit.intercept, fit.residual, fit.points.size()};
  });
}

stanley_status stanley_gap_summary_of(const stanley_view* view, stanley_gap_summary* out) {
  STANLEY_REQUIRE(view && out);
  return guarded([&] {
    const auto stats = stanley::gap_stats(view->view);
    *out = stanley_gap_summary{stats.gaps.size(), stats.max_gap.gap, stats.max_gap.index, stats.records.size()};
  });
}

stanley_status stanley_write_sequence(const stanley_view* view, const char* path) {
  STANLEY_REQUIRE(view);
  return guarded([&] { emit(path, [&](std::ostream& o) { stanley::io::write_sequence(view->view, o); }); });
}

stanley_status stanley_read_sequence(const char* path, stanley_view** out) {
  STANLEY_REQUIRE(path && out);
  *out = nullptr;
  return guarded([&] { *out = new stanley_view{stanley::io::read_sequence(std::filesystem::path(path))}; });
}

stanley_status stanley_write_counting_csv(const stanley_view* view, const uint64_t* xs, size_t n,
                                          const char* path) {
  STANLEY_REQUIRE(view);
  STANLEY_REQUIRE(xs || n == 0);
  return guarded([&] {
    const auto profile = profile_of(view, xs, n);
    emit(path, [&](std::ostream& o) { stanley::io::write_counting_csv(profile, o); });
  });
}

stanley_status stanley_write_h_csv(const stanley_view* view, uint64_t lo, uint64_t hi, const char* path) {
  STANLEY_REQUIRE(view);
  return guarded([&] {
    const auto profile = stanley::h_profile(view->view, lo, hi);
    emit(path, [&](std::ostream& o) { stanley::io::write_h_csv(profile, o); });
  });
}

stanley_status stanley_write_gaps_csv(const stanley_view* view, const char* path) {
  STANLEY_REQUIRE(view);
  return guarded([&] {
    const auto stats = stanley::gap_stats(view->view);
    emit(path, [&](std::ostream& o) { stanley::io::write_gaps_csv(stats, o); });
  });
}

stanley_status stanley_write_verification_csv(const stanley_report* reports, size_t n, const char* path) {
  STANLEY_REQUIRE(reports || n == 0);
  return guarded([&] {
    std::vector<stanley::VerificationReport> rs;
    for (size_t i = 0; i < n; ++i) rs.push_back(from_c(reports[i]));
    emit(path, [&](std::ostream& o) { stanley::io::write_verification_csv(rs, o); });
  });
}

stanley_status stanley_verification_summary(const stanley_report* reports, size_t n, char* buf, size_t cap) {
  STANLEY_REQUIRE(reports || n == 0);
  STANLEY_REQUIRE(buf && cap > 0);
  std::vector<stanley::VerificationReport> rs;
  for (size_t i = 0; i < n; ++i) rs.push_back(from_c(reports[i]));
  const std::string line = stanley::io::summary_line(rs);
  const size_t len = std::min(line.size(), cap - 1);
  std::memcpy(buf, line.data(), len);
  buf[len] = '\0';
  return STANLEY_OK;
}

stanley_status stanley_export(const stanley_view* view, stanley_export_format format, const char* path) {
  STANLEY_REQUIRE(view);
  return guarded([&] {
    if (format == STANLEY_EXPORT_BFILE)
      emit(path, [&](std::ostream& o) { stanley::io::write_bfile(view->view, o); });
    else if (format == STANLEY_EXPORT_CSV)
      emit(path, [&](std::ostream& o) { stanley::io::write_terms_csv(view->view, o); });
    else
      throw stanley::Error(stanley::ErrorCode::bad_input, "unknown export format");
  });
}

}  // extern "C"
