#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fq/workspace.hpp"

namespace {

// Exit codes: 0 all checks pass, 1 check failures, 2 usage/parse/resolution errors.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

std::optional<std::string> load_document_text(const std::string& spec, std::string* err) {
  std::string name = spec;
  if (name.rfind("gallery:", 0) == 0) name = name.substr(8);
  std::ifstream in(spec);
  if (in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  // fall back to the embedded gallery: bare names and gallery/<name>.doc paths
  auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  if (name.size() > 4 && name.substr(name.size() - 4) == ".doc") name.resize(name.size() - 4);
  if (const auto* doc = fq::find_gallery_doc(name)) return doc->text;
  *err = "cannot open '" + spec + "' and no gallery document matches '" + name + "'";
  return std::nullopt;
}

int do_run(const std::string& command, const std::string& docspec, const fq::RunFlags& flags) {
  std::string err;
  auto text = load_document_text(docspec, &err);
  if (!text) {
    std::cerr << "error: " << err << "\n";
    return kUsageError;
  }
  auto doc = fq::parse_workspace(*text, &err);
  if (!doc) {
    std::cerr << "parse error: " << err << "\n";
    return kUsageError;
  }
  auto ws = fq::resolve_workspace(*doc);
  if (!ws->ok) {
    std::cout << fq::render_reports({ws->resolution}, flags.format);
    std::cerr << "error: unresolved document\n";
    return kUsageError;
  }
  auto t0 = std::chrono::steady_clock::now();
  auto reports = fq::run_command(command, *ws, flags);
  auto t1 = std::chrono::steady_clock::now();
  std::cout << fq::render_reports(reports, flags.format);
  if (flags.format == "text") {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    std::cout << "elapsed: " << ms << " ms\n";
  }
  return fq::reports_all_ok(reports) ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite filter-quotient verification suites"};
  app.require_subcommand(1);

  std::string command, docspec;
  fq::RunFlags flags;
  auto* run = app.add_subcommand("run", "execute a verification pipeline over a document");
  run->add_option("command", command, "one of validate, quotient, product, model-check, shapes-check, sset-demo, report")
      ->required()
      ->check(CLI::IsMember({"validate", "quotient", "product", "model-check", "shapes-check",
                             "sset-demo", "report"}));
  run->add_option("doc", docspec, "document path, gallery/<name>.doc, or gallery:<name>")
      ->required();
  run->add_option("--window", flags.window, "index window for sequence checks")
      ->capture_default_str();
  run->add_option("--max-size", flags.max_size, "size bound for exhaustive searches")
      ->capture_default_str();
  run->add_option("--filter", flags.filter,
                  "filter selection: a filter section name, trivial, or principal:<object>");
  run->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"text", "records"}))
      ->capture_default_str();
  run->add_option("--seed", flags.seed, "enable the randomized filter-law suite with this seed");

  std::string show;
  auto* gal = app.add_subcommand("gallery", "list the built-in example documents");
  gal->add_option("--show", show, "print the named document instead of the list");

  CLI11_PARSE(app, argc, argv);

  if (gal->parsed()) {
    if (!show.empty()) {
      const auto* doc = fq::find_gallery_doc(show);
      if (!doc) {
        std::cerr << "error: no gallery document named '" << show << "'\n";
        return kUsageError;
      }
      std::cout << doc->text;
      return kOk;
    }
    for (const auto& d : fq::gallery())
      std::cout << d.name << " — " << d.provenance << "\n";
    return kOk;
  }
  return do_run(command, docspec, flags);
}
