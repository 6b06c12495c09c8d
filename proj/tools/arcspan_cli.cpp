// Thin front end over the C API: parses flags, requests one JSON document,
// optionally converts it to csv/text, and routes it to stdout or a file.
// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 internal or IO.
#include <arcspan.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string item_tokens(const json& item) {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : item) {
    if (!first) os << ' ';
    first = false;
    if (e.is_array())
      os << e[0].get<long long>() << '-' << e[1].get<long long>();
    else
      os << e.get<long long>();
  }
  return os.str();
}

void envelope_comment(std::ostream& os, const json& j) {
  os << "# paper=" << j["paper"].get<std::string>() << " n=" << j["n"]
     << " kind=" << j["kind"].get<std::string>()
     << " version=" << j["version"].get<std::string>();
  for (const char* k : {"family", "stratum", "matrix-kind", "suite"})
    if (j.contains(k)) os << ' ' << k << '=' << j[k].get<std::string>();
  os << '\n';
}

void matrix_rows_csv(std::ostream& os, const json& rows) {
  for (const auto& row : rows) {
    bool first = true;
    for (const auto& e : row) {
      if (!first) os << ',';
      first = false;
      if (e.is_string())
        os << e.get<std::string>();
      else
        os << e.get<long long>();
    }
    os << '\n';
  }
}

std::string to_csv(const json& j) {
  std::ostringstream os;
  envelope_comment(os, j);
  std::string kind = j["kind"].get<std::string>();
  if (kind == "enumerate") {
    os << "item\n";
    for (const auto& item : j["items"]) os << item_tokens(item) << '\n';
  } else if (kind == "matrix" || kind == "conjecture") {
    if (j.contains("certificate")) os << "# certificate=" << j["certificate"].dump() << '\n';
    if (j.contains("report")) os << "# report=" << j["report"].dump() << '\n';
    os << "# carrier=" << j["carrier"].dump() << '\n';
    matrix_rows_csv(os, j["rows"]);
  } else if (kind == "verify") {
    os << "id,status,counts,witnesses\n";
    for (const auto& r : j["reports"])
      os << r["id"].get<std::string>() << ',' << r["status"].get<std::string>() << ','
         << csv_cell(r["counts"].dump()) << ',' << csv_cell(r["witnesses"].dump()) << '\n';
  }
  return os.str();
}

std::string label_of(const json& pts) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& p : pts) {
    if (!first) os << ',';
    first = false;
    os << p.get<long long>();
  }
  os << '}';
  return os.str();
}

void matrix_text(std::ostream& os, const json& j) {
  const json& rows = j["rows"];
  const json& carrier = j["carrier"];
  for (size_t r = 0; r < rows.size(); ++r) {
    os << label_of(carrier[r]) << " |";
    for (const auto& e : rows[r]) {
      os << ' ';
      if (e.is_string())
        os << e.get<std::string>();
      else
        os << e.get<long long>();
    }
    os << '\n';
  }
}

void report_text(std::ostream& os, const json& r) {
  os << '[' << r["status"].get<std::string>() << "] " << r["id"].get<std::string>();
  for (auto it = r["counts"].begin(); it != r["counts"].end(); ++it)
    os << ' ' << it.key() << '=' << it.value().get<long long>();
  os << '\n';
  for (const auto& w : r["witnesses"])
    os << "    ! " << w.get<std::string>() << '\n';
}

std::string to_text(const json& j) {
  std::ostringstream os;
  std::string kind = j["kind"].get<std::string>();
  if (kind == "enumerate") {
    os << j["family"].get<std::string>();
    if (j.contains("stratum")) os << " [" << j["stratum"].get<std::string>() << ']';
    os << " at n=" << j["n"] << ": " << j["count"] << " members\n";
    for (const auto& item : j["items"]) {
      std::string t = item_tokens(item);
      os << (t.empty() ? "(empty)" : t) << '\n';
    }
  } else if (kind == "matrix") {
    os << j["matrix-kind"].get<std::string>() << " at n=" << j["n"] << ", "
       << j["rows"].size() << 'x' << j["rows"].size() << '\n';
    if (j.contains("certificate"))
      os << "certificate: " << j["certificate"]["status"].get<std::string>() << '\n';
    matrix_text(os, j);
  } else if (kind == "verify") {
    os << "suite " << j["suite"].get<std::string>() << " at n=" << j["n"] << '\n';
    for (const auto& r : j["reports"]) report_text(os, r);
    os << "all-pass: " << (j["all-pass"].get<bool>() ? "true" : "false") << '\n';
  } else if (kind == "conjecture") {
    os << "quotient transform survey at n=" << j["n"] << '\n';
    report_text(os, j["report"]);
    matrix_text(os, j);
  }
  return os.str();
}

int write_payload(const std::string& payload, const std::string& out_path,
                  const std::string& verb, int n, const std::string& format) {
  std::string path = out_path;
  if (path.empty()) {
    const char* dir = std::getenv("ARCSPAN_OUT_DIR");
    if (dir && *dir) {
      std::string ext = format == "text" ? "txt" : format;
      path = std::string(dir) + "/" + verb + "-n" + std::to_string(n) + "." + ext;
    }
  }
  if (path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  f << payload;
  f.flush();
  if (!f) {
    std::cerr << "cannot write " << path << "\n";
    return 3;
  }
  std::cerr << "wrote " << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arc matching families, their orders and bases, and the exact "
               "transform analysis; machine-readable outputs"};
  app.require_subcommand(1);

  int n = 0;
  int jobs = 0;
  bool allow_large = false;
  std::string family = "xn1", stratum, suite = "all", kind, format = "json", out_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n,-n", n, "ambient size, odd, 3..13 without --allow-large")
        ->required();
    sub->add_option("--format", format, "json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", out_path, "output path; default stdout or ARCSPAN_OUT_DIR");
    sub->add_option("--jobs", jobs, "worker threads, 0 = hardware default");
    sub->add_flag("--allow-large", allow_large, "lift the n<=13 guard, to the hard cap 25");
  };

  CLI::App* cmd_enum = app.add_subcommand("enumerate", "list a family or stratum");
  add_common(cmd_enum);
  cmd_enum->add_option("--family", family,
                       "xn1 | xn2 | xn2-plus | xn2-minus | e | e-plus | e-minus");
  cmd_enum->add_option("--stratum", stratum, "t=K, prime, doubleprime, or t=K,prime");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run statement suites");
  add_common(cmd_verify);
  cmd_verify->add_option("--suite", suite, "all, one id, or a comma-separated list");

  CLI::App* cmd_matrix = app.add_subcommand("matrix", "export a transition or operator matrix");
  add_common(cmd_matrix);
  cmd_matrix->add_option("--kind", kind, "c | cprime | cplus | cminus | A | Aprime | bar-plus-fourier")
      ->required();

  CLI::App* cmd_conj = app.add_subcommand("conjecture", "quotient transform survey");
  add_common(cmd_conj);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (n > 13 && !allow_large) {
    std::cerr << "n=" << n << " grows fast; pass --allow-large if you mean it\n";
    return 2;
  }
  if (n > 13) std::cerr << "warning: n=" << n << " may take a while and a lot of memory\n";

  arcspan_ctx* ctx = nullptr;
  if (arcspan_open(n, &ctx) != ARCSPAN_OK) {
    std::cerr << "bad ambient size " << n << ": want odd n, 3 <= n <= 25\n";
    return 2;
  }
  if (jobs != 0 && arcspan_set_jobs(ctx, jobs) != ARCSPAN_OK) {
    std::cerr << arcspan_last_error(ctx) << "\n";
    arcspan_close(ctx);
    return 2;
  }

  std::string verb;
  char* doc = nullptr;
  arcspan_status st = ARCSPAN_OK;
  auto t0 = std::chrono::steady_clock::now();
  if (cmd_enum->parsed()) {
    verb = "enumerate";
    st = arcspan_enumerate(ctx, family.c_str(), stratum.c_str(), &doc);
  } else if (cmd_verify->parsed()) {
    verb = "verify";
    st = arcspan_verify(ctx, suite.c_str(), &doc);
  } else if (cmd_matrix->parsed()) {
    verb = "matrix";
    st = arcspan_matrix(ctx, kind.c_str(), &doc);
  } else {
    verb = "conjecture";
    st = arcspan_conjecture(ctx, &doc);
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();

  if (st == ARCSPAN_EUSAGE || st == ARCSPAN_EINTERNAL) {
    std::cerr << verb << ": " << arcspan_last_error(ctx) << "\n";
    arcspan_close(ctx);
    return st == ARCSPAN_EUSAGE ? 2 : 3;
  }
  std::cerr << verb << " finished in " << ms << " ms\n";

  std::string payload(doc);
  arcspan_free(doc);
  arcspan_close(ctx);

  if (format != "json") {
    try {
      json j = json::parse(payload);
      payload = format == "csv" ? to_csv(j) : to_text(j);
    } catch (const std::exception& e) {
      std::cerr << "conversion failed: " << e.what() << "\n";
      return 3;
    }
  }

  int io = write_payload(payload, out_path, verb, n, format);
  if (io != 0) return io;
  return st == ARCSPAN_FAIL ? 1 : 0;
}
