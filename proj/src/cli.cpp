#include "gross/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "gross/arith.hpp"
#include "gross/errors.hpp"
#include "gross/verify.hpp"

namespace gross::cli {

namespace {

namespace fs = std::filesystem;

bool is_integer_column(const std::string& c) {
  return c == "q" || c == "h" || c == "digits" || c == "runtime_ms";
}

bool is_big_integer_column(const std::string& c) { return c == "sha_round" || c == "sha_sqrt"; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError(what + ": '" + s + "' is not an integer");
  }
}

Record finish(Record r) {
  r.q = parse_int(r.at("q"), "q");
  r.digits = static_cast<int>(parse_int(r.at("digits"), "digits"));
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::int64_t> gross_primes(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = std::max<std::int64_t>(lo, 7); q <= hi; ++q) {
    if (q % 8 == 7 && is_prime(static_cast<std::uint64_t>(q))) out.push_back(q);
  }
  return out;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_atomically(path, text);
  }
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw InputError("format must be csv or json, got '" + name + "'");
}

TGrid parse_grid(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw InputError("t-grid needs three values a/b,c/d,e/f");
  Rational r[3];
  for (int i = 0; i < 3; ++i) {
    const auto frac = split(parts[i], '/');
    if (frac.size() > 2) throw InputError("t-grid value '" + parts[i] + "' is malformed");
    r[i].num = parse_int(frac[0], "t-grid numerator");
    r[i].den = frac.size() == 2 ? parse_int(frac[1], "t-grid denominator") : 1;
    if (r[i].num <= 0 || r[i].den <= 0) throw InputError("t-grid values must be positive");
  }
  if (r[0].num * r[1].den == r[1].num * r[0].den) {
    throw InputError("t-grid: t0 and t1 must differ");
  }
  return {r[0], r[1], r[2]};
}

int default_digits() {
  if (const char* env = std::getenv("GROSS_SHA_DIGITS")) {
    try {
      const int d = static_cast<int>(parse_int(env, "GROSS_SHA_DIGITS"));
      if (d >= 10) return d;
    } catch (const InputError&) {
    }
  }
  return 32;
}

const std::vector<std::string>& columns() {
  static const std::vector<std::string> names{
      "q",        "h",       "clgp",     "digits",    "L_total",  "G",
      "sha_real", "sha_round", "is_square", "sha_sqrt", "residual", "max_w_dev",
      "j",        "m",       "n",        "runtime_ms"};
  return names;
}

const std::string& Record::at(const std::string& column) const {
  const auto& names = columns();
  const auto it = std::find(names.begin(), names.end(), column);
  if (it == names.end()) throw InputError("unknown column " + column);
  return values.at(static_cast<std::size_t>(it - names.begin()));
}

bool Record::verified() const {
  const Real residual = Real::from_string(at("residual"), 64);
  const Real bound = pow(Real(10, 64), -static_cast<long>(digits / 2));
  const mpz_class sha(at("sha_round"));
  return residual < bound && sha >= 1;
}

Record make_record(const ShaReport& report) {
  const int d = report.digits;
  Record r;
  r.q = report.q;
  r.digits = d;
  r.values = {
      std::to_string(report.q),
      std::to_string(report.h),
      format_invariants(report.invariants),
      std::to_string(d),
      report.L_total.to_string(d),
      report.G.to_string(d),
      report.sha_real.to_string(d),
      report.sha_round.get_str(),
      report.is_square ? "true" : "false",
      report.sha_sqrt ? report.sha_sqrt->get_str() : "",
      report.residual.to_string(d),
      report.max_w_dev.to_string(d),
      report.j.to_string(d),
      report.m.to_string(d),
      report.n.to_string(d),
      std::to_string(std::llround(report.runtime_ms)),
  };
  return r;
}

std::string csv_header() {
  std::string s;
  for (const auto& c : columns()) s += (s.empty() ? "" : ",") + c;
  return s;
}

std::string to_csv(const Record& r) {
  std::string s;
  for (std::size_t i = 0; i < r.values.size(); ++i) s += (i ? "," : "") + r.values[i];
  return s;
}

Record record_from_csv(const std::string& line) {
  Record r;
  r.values = split(line, ',');
  if (r.values.size() != columns().size()) {
    throw InputError("CSV row has " + std::to_string(r.values.size()) + " fields, expected " +
                     std::to_string(columns().size()));
  }
  return finish(std::move(r));
}

nlohmann::ordered_json to_json(const Record& r) {
  nlohmann::ordered_json j;
  const auto& names = columns();
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string& c = names[i];
    const std::string& v = r.values[i];
    if (is_integer_column(c)) {
      j[c] = parse_int(v, c);
    } else if (c == "is_square") {
      j[c] = v == "true";
    } else if (is_big_integer_column(c)) {
      // Exact integers stay strings so large values survive round trips.
      if (v.empty()) {
        j[c] = nullptr;
      } else {
        j[c] = v;
      }
    } else {
      j[c] = v;
    }
  }
  return j;
}

Record record_from_json(const nlohmann::ordered_json& j) {
  Record r;
  for (const auto& c : columns()) {
    if (!j.contains(c)) throw InputError("JSON record lacks field " + c);
    const auto& v = j.at(c);
    if (v.is_null()) {
      r.values.emplace_back();
    } else if (v.is_boolean()) {
      r.values.push_back(v.get<bool>() ? "true" : "false");
    } else if (v.is_number_integer()) {
      r.values.push_back(std::to_string(v.get<long long>()));
    } else if (v.is_string()) {
      r.values.push_back(v.get<std::string>());
    } else {
      throw InputError("JSON field " + c + " has an unexpected type");
    }
  }
  return finish(std::move(r));
}

std::string render(const std::vector<Record>& records, Format format) {
  if (format == Format::kCsv) {
    std::string s = csv_header() + "\n";
    for (const Record& r : records) s += to_csv(r) + "\n";
    return s;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Record& r : records) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::vector<Record> parse_records(const std::string& text, Format format) {
  std::vector<Record> out;
  if (format == Format::kCsv) {
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (header) {
        if (line != csv_header()) throw InputError("CSV header does not match the expected columns");
        header = false;
        continue;
      }
      out.push_back(record_from_csv(line));
    }
    return out;
  }
  nlohmann::ordered_json arr;
  try {
    arr = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!arr.is_array()) throw InputError("JSON output must be an array of records");
  for (const auto& j : arr) out.push_back(record_from_json(j));
  return out;
}

void write_atomically(const std::string& path, const std::string& contents) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ResourceError("cannot write " + tmp.string());
    f << contents;
    f.flush();
    if (!f) throw ResourceError("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ResourceError("cannot replace " + path);
  }
}

bool same_ignoring_timing(const Record& a, const Record& b) {
  const auto& names = columns();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == "runtime_ms") continue;
    if (a.values.at(i) != b.values.at(i)) return false;
  }
  return true;
}

int run_compute(const ComputeConfig& config, std::ostream& out, std::ostream& err) {
  ShaReport report;
  try {
    make_context(config.digits);
    require_gross_prime(config.q);
    ShaOptions options;
    if (config.grid) options.lfun.grid = *config.grid;
    options.lfun.margin_digits = config.margin_digits;
    options.lfun.jobs = config.jobs;
    report = sha_order(config.q, config.digits, options);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidPrecision& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const RootNumberUnstable& e) {
    err << "error: q = " << config.q << ": " << e.what() << "\n";
    return kExitUnverified;
  }
  const Record r = make_record(report);
  const std::string text = config.format == Format::kCsv ? render({r}, Format::kCsv)
                                                          : to_json(r).dump(2) + "\n";
  try {
    emit(config.out, text, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  if (!report.verified) {
    err << "unverified: q = " << config.q << " residual " << report.residual.to_string(3)
        << " exceeds 1e-" << config.digits / 2 << "; raise --digits\n";
    return kExitUnverified;
  }
  return kExitOk;
}

int run_range(const RangeConfig& config, std::ostream& out, std::ostream& err) {
  if (config.q_min < 1 || config.q_max < config.q_min) {
    err << "error: need 1 <= --min <= --max, got [" << config.q_min << ", " << config.q_max
        << "]\n";
    return kExitInput;
  }
  if (config.jobs < 1) {
    err << "error: --jobs must be at least 1\n";
    return kExitInput;
  }
  try {
    make_context(config.digits);
  } catch (const InvalidPrecision& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  std::map<std::int64_t, Record> records;
  if (config.resume && !config.out.empty() && fs::exists(config.out)) {
    try {
      for (Record& r : parse_records(read_file(config.out), config.format)) {
        records[r.q] = std::move(r);
      }
    } catch (const InputError& e) {
      err << "error: cannot resume from " << config.out << ": " << e.what() << "\n";
      return kExitInput;
    }
  }

  std::vector<std::int64_t> pending;
  for (std::int64_t q : gross_primes(config.q_min, config.q_max)) {
    const auto it = records.find(q);
    if (it != records.end() && it->second.digits == config.digits && it->second.verified()) continue;
    pending.push_back(q);
  }

  std::mutex mu;
  std::vector<std::int64_t> unverified;
  std::string write_error;
  auto checkpoint = [&] {
    if (config.out.empty()) return;
    std::vector<Record> rows;
    for (const auto& [q, r] : records) rows.push_back(r);
    write_atomically(config.out, render(rows, config.format));
  };

  try {
    checkpoint();
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (;;) {
      if (stop) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      const std::int64_t q = pending[i];
      std::optional<Record> row;
      std::string failure;
      try {
        row = make_record(sha_order(q, config.digits));
      } catch (const std::exception& e) {
        failure = e.what();
      }
      std::lock_guard<std::mutex> lock(mu);
      if (!row) {
        err << "q=" << q << " failed: " << failure << "\n";
        unverified.push_back(q);
        continue;
      }
      const bool ok = row->verified();
      if (!ok) unverified.push_back(q);
      err << "q=" << q << " sha=" << row->at("sha_round") << (ok ? "" : " UNVERIFIED") << "\n";
      records[q] = std::move(*row);
      try {
        checkpoint();
      } catch (const ResourceError& e) {
        write_error = e.what();
        stop = true;
      }
    }
  };

  const int jobs = std::min<int>(config.jobs, std::max<std::size_t>(pending.size(), 1));
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  if (!write_error.empty()) {
    err << "error: " << write_error << "\n";
    return kExitInput;
  }
  if (config.out.empty()) {
    std::vector<Record> rows;
    for (const auto& [q, r] : records) rows.push_back(r);
    out << render(rows, config.format);
  }
  if (!unverified.empty()) {
    std::sort(unverified.begin(), unverified.end());
    err << "unverified q:";
    for (std::int64_t q : unverified) err << " " << q;
    err << "\n";
    return kExitUnverified;
  }
  return kExitOk;
}

int run_verify(const VerifyCommandConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.inject_fault.empty() && config.inject_fault != "coefficient") {
    err << "error: unknown fault '" << config.inject_fault << "'\n";
    return kExitInput;
  }
  try {
    for (std::int64_t q : config.qs) require_gross_prime(q);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  VerifyConfig vc;
  vc.qs = config.qs;
  vc.digits = config.digits;
  vc.oracle_cutoff = config.oracle_cutoff;
  vc.corrupt_coefficients = config.inject_fault == "coefficient";
  std::vector<CheckResult> results;
  try {
    results = run_verification(vc);
  } catch (const InvalidPrecision& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  out << std::left << std::setw(20) << "check" << std::setw(8) << "q" << std::setw(7) << "result"
      << "detail\n";
  std::vector<std::string> failed;
  for (const CheckResult& c : results) {
    out << std::setw(20) << c.name << std::setw(8) << c.q << std::setw(7)
        << (c.passed ? "PASS" : "FAIL") << c.detail << "\n";
    if (!c.passed) failed.push_back(c.name + " (q=" + std::to_string(c.q) + ")");
  }
  if (failed.empty()) {
    out << "all " << results.size() << " checks passed\n";
    return kExitOk;
  }
  err << "failed checks:";
  for (const auto& f : failed) err << " " << f;
  err << "\n";
  return kExitCheckFailed;
}

}  // namespace gross::cli
