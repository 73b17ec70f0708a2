#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "heredisg/heredisg.h"
#include "json.hpp"

namespace {

struct QuiverHandle {
  hsg_quiver* q = nullptr;
  ~QuiverHandle() { hsg_quiver_free(q); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  hsg_string_free(s);
  return out;
}

int report_error() {
  std::cerr << "heredisg: " << hsg_last_error_code() << ": " << hsg_last_error() << "\n";
  return HSG_USAGE;
}

void print_reports(const std::string& json) {
  auto reports = nlohmann::json::parse(json);
  for (const auto& r : reports) {
    const bool ok = r["failures"].empty();
    std::printf("%s  %-30s %lld/%lld", ok ? "PASS" : "FAIL", r["check_name"].get<std::string>().c_str(),
                static_cast<long long>(r["passed"].get<std::int64_t>()),
                static_cast<long long>(r["instances"].get<std::int64_t>()));
    if (r["skipped"].get<std::int64_t>() > 0) std::printf("  (%lld skipped)", static_cast<long long>(r["skipped"].get<std::int64_t>()));
    if (r["elapsed_ms"].get<std::int64_t>() > 0) std::printf("  %lld ms", static_cast<long long>(r["elapsed_ms"].get<std::int64_t>()));
    std::printf("\n");
    for (const auto& n : r["notes"]) std::printf("      note: %s\n", n.get<std::string>().c_str());
    for (const auto& f : r["failures"])
      std::printf("      %s: expected %s, got %s\n", f["input"].get<std::string>().c_str(),
                  f["expected"].get<std::string>().c_str(), f["got"].get<std::string>().c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification engine for hereditary path algebras, their stable and repetitive categories"};
  app.require_subcommand(1);

  hsg_options opts;
  hsg_default_options(&opts);
  bool json = false;
  std::vector<int> window;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--char", opts.characteristic, "prime field characteristic")->default_val(opts.characteristic);
    cmd->add_option("--seed", opts.seed, "random seed")->default_val(opts.seed);
    cmd->add_option("--bound", opts.bound, "tau-iteration bound")->default_val(opts.bound);
    cmd->add_flag("--json", json, "print JSON");
  };

  std::string suite, quiver_file;
  auto* check = app.add_subcommand("check", "run a verification suite");
  std::vector<std::string> suites;
  for (auto s = hsg_suite_names(); *s; ++s) suites.emplace_back(*s);
  check->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
  check->add_option("quiver-file", quiver_file, "quiver file")->required();
  check->add_option("--window", window, "repetitive window lo hi")->expected(2);
  check->add_option("--nmax", opts.nmax, "highest Ext degree for tilting checks")->default_val(opts.nmax);
  check->add_flag("--timing", opts.timing, "record elapsed_ms");
  add_common(check);

  std::string kind, from, to, module;
  auto* query = app.add_subcommand("query", "answer a single question about modules");
  query->add_option("kind", kind, "hom, ext, tau, tau-inverse, classify or indec")
      ->required()
      ->check(CLI::IsMember({"hom", "ext", "tau", "tau-inverse", "classify", "indec"}));
  query->add_option("--quiver", quiver_file, "quiver file")->required();
  query->add_option("--from", from, "source module (P<v>, I<v>, S<v>, K<n> or file)");
  query->add_option("--to", to, "target module");
  query->add_option("--module", module, "module");
  add_common(query);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return HSG_USAGE;
  }

  if (window.size() == 2) {
    opts.has_window = 1;
    opts.window_lo = window[0];
    opts.window_hi = window[1];
  }

  QuiverHandle q;
  q.q = hsg_quiver_load(quiver_file.c_str());
  if (!q.q) return report_error();

  if (check->parsed()) {
    char* out = nullptr;
    int rc = hsg_check(q.q, suite.c_str(), &opts, &out);
    if (rc == HSG_USAGE) return report_error();
    std::string text = take(out);
    if (json)
      std::cout << text << "\n";
    else
      print_reports(text);
    return rc;
  }

  char* out = nullptr;
  auto arg = [](const std::string& s) { return s.empty() ? nullptr : s.c_str(); };
  if (hsg_query(q.q, kind.c_str(), arg(from), arg(to), arg(module), &opts, &out) != HSG_OK) return report_error();
  std::string text = take(out);
  if (json)
    std::cout << text << "\n";
  else
    std::cout << nlohmann::json::parse(text)["text"].get<std::string>() << "\n";
  return HSG_OK;
}
