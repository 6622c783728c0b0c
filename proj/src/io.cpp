#include "stanley/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <system_error>

#include "stanley/error.hpp"

namespace stanley::io {
namespace {

constexpr std::size_t kSpotCheckTerms = 100;

void put(std::ostream& out, std::uint64_t v) {
  char buf[24];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, end - buf);
}

void put(std::ostream& out, std::int64_t v) {
  char buf[24];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, end - buf);
}

std::optional<std::uint64_t> parse_decimal(std::string_view s) {
  if (s.empty() || (s.size() > 1 && s.front() == '0')) return std::nullopt;
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// True if `terms[i]` is the largest element of a k-term progression whose
// other elements are earlier terms.
bool closes_progression(const SequenceView& view, std::size_t i) {
  const auto terms = view.terms();
  const std::uint64_t n = terms[i];
  const int k = view.k();
  for (std::size_t p = i; p-- > 0;) {
    const std::uint64_t d = n - terms[p];
    std::uint64_t v = terms[p];
    bool all = true;
    for (int j = 2; j < k && all; ++j) {
      if (v < d) {
        all = false;
        break;
      }
      v -= d;
      all = view.contains(v);
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

void write_sequence(const SequenceView& view, std::ostream& out) {
  out << "# seed: ";
  const auto seed = view.seed().elements();
  for (std::size_t i = 0; i < seed.size(); ++i) {
    if (i) out << ',';
    put(out, seed[i]);
  }
  out << "\n# k: " << view.k() << "\n# complete-to: ";
  put(out, view.complete_to());
  out << '\n';
  for (std::uint64_t t : view.terms()) {
    put(out, t);
    out << '\n';
  }
}

void write_sequence(const SequenceView& view, const std::filesystem::path& path) {
  atomic_write(path, [&](std::ostream& out) { write_sequence(view, out); });
}

SequenceView read_sequence(std::istream& in) {
  std::optional<std::vector<std::uint64_t>> seed;
  std::optional<int> k;
  std::optional<std::uint64_t> complete_to;
  std::vector<std::uint64_t> terms;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.front() == '#') {
      if (!terms.empty()) throw ParseError(lineno, "header line after the first term");
      const auto colon = line.find(": ");
      if (colon == std::string::npos) continue;  // free-form comment
      const std::string key = line.substr(1, colon - 1);
      const std::string_view value = std::string_view(line).substr(colon + 2);
      if (key == " seed") {
        std::vector<std::uint64_t> elems;
        std::size_t start = 0;
        for (;;) {
          const auto comma = value.find(',', start);
          const auto v = parse_decimal(value.substr(start, comma - start));
          if (!v) throw ParseError(lineno, "malformed seed list");
          elems.push_back(*v);
          if (comma == std::string_view::npos) break;
          start = comma + 1;
        }
        seed = std::move(elems);
      } else if (key == " k") {
        const auto v = parse_decimal(value);
        if (!v || *v > 1000) throw ParseError(lineno, "malformed k");
        k = static_cast<int>(*v);
      } else if (key == " complete-to") {
        complete_to = parse_decimal(value);
        if (!complete_to) throw ParseError(lineno, "malformed completeness bound");
      }
      continue;
    }
    const auto v = parse_decimal(line);
    if (!v) throw ParseError(lineno, "expected a decimal term, got '" + line + "'");
    terms.push_back(*v);
  }
  if (in.bad()) throw Error(ErrorCode::io_failure, "read failed");
  if (!seed) throw ParseError(lineno + 1, "missing '# seed:' header");
  if (!k) throw ParseError(lineno + 1, "missing '# k:' header");
  if (!complete_to) throw ParseError(lineno + 1, "missing '# complete-to:' header");

  SeedSet validated = [&] {
    try {
      return validate_seed(std::span<const std::uint64_t>(*seed), *k);
    } catch (const Error& e) {
      throw Error(ErrorCode::consistency_error, std::string("invalid seed header: ") + e.what());
    }
  }();
  if (validated.size() != seed->size() ||
      !std::equal(seed->begin(), seed->end(), validated.elements().begin()))
    throw Error(ErrorCode::consistency_error, "seed header is not sorted and duplicate-free");
  if (terms.empty()) throw Error(ErrorCode::consistency_error, "no terms in body");

  SequenceView view(std::move(validated), std::move(terms), *complete_to);
  const std::size_t m = view.terms().size();
  for (std::size_t i = m > kSpotCheckTerms ? m - kSpotCheckTerms : 0; i < m; ++i) {
    if (closes_progression(view, i))
      throw Error(ErrorCode::consistency_error,
                  "term " + std::to_string(view.terms()[i]) + " closes a " + std::to_string(view.k()) +
                      "-term progression");
  }
  return view;
}

SequenceView read_sequence(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_failure, "cannot open '" + path.string() + "' for reading");
  return read_sequence(in);
}

void write_counting_csv(const CountingProfile& profile, std::ostream& out) {
  out << "x,count\n";
  for (const auto& s : profile.samples) {
    put(out, s.x);
    out << ',';
    put(out, s.count);
    out << '\n';
  }
}

void write_h_csv(const HProfile& profile, std::ostream& out) {
  out << "n,h,cumulative\n";
  for (std::size_t i = 0; i < profile.values.size(); ++i) {
    put(out, profile.lo + i);
    out << ',';
    put(out, profile.values[i]);
    out << ',';
    put(out, profile.cumulative[i]);
    out << '\n';
  }
}

void write_gaps_csv(const GapStats& stats, std::ostream& out) {
  out << "k,a_k,gap\n";
  for (const auto& g : stats.gaps) {
    put(out, static_cast<std::uint64_t>(g.index));
    out << ',';
    put(out, g.term);
    out << ',';
    put(out, g.gap);
    out << '\n';
  }
}

void write_verification_csv(std::span<const VerificationReport> reports, std::ostream& out) {
  out << "inequality,range_lo,range_hi,verdict,location,lhs,rhs\n";
  for (const auto& r : reports) {
    out << to_string(r.inequality) << ',';
    put(out, r.range_lo);
    out << ',';
    put(out, r.range_hi);
    out << ',' << (r.passed() ? "pass" : "fail") << ',';
    if (r.counterexample) put(out, r.counterexample->location);
    out << ',';
    if (r.counterexample) {
      put(out, r.counterexample->lhs);
      out << ',';
      put(out, r.counterexample->rhs);
    } else if (!r.vacuous) {
      put(out, r.final_lhs);
      out << ',';
      put(out, r.final_rhs);
    } else {
      out << ',';
    }
    out << '\n';
  }
  out << summary_line(reports) << '\n';
}

std::string summary_line(std::span<const VerificationReport> reports) {
  for (const auto& r : reports) {
    if (!r.passed())
      return std::string("FAIL ") + to_string(r.inequality) + " " + std::to_string(r.counterexample->location);
  }
  return "PASS";
}

void write_bfile(const SequenceView& view, std::ostream& out) {
  std::uint64_t n = 1;
  for (std::uint64_t t : view.terms()) {
    put(out, n++);
    out << ' ';
    put(out, t);
    out << '\n';
  }
}

void write_terms_csv(const SequenceView& view, std::ostream& out) {
  out << "k,a_k\n";
  std::uint64_t n = 1;
  for (std::uint64_t t : view.terms()) {
    put(out, n++);
    out << ',';
    put(out, t);
    out << '\n';
  }
}

void atomic_write(const std::filesystem::path& path, const std::function<void(std::ostream&)>& fill) {
  if (path.empty()) throw Error(ErrorCode::io_failure, "empty output path");
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::io_failure, "cannot open '" + tmp.string() + "' for writing");
    try {
      fill(out);
    } catch (...) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw;
    }
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorCode::io_failure, "write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::io_failure, "cannot rename onto '" + path.string() + "'");
  }
}

}  // namespace stanley::io
